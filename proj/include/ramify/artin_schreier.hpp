#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramify/index.hpp"
#include "ramify/two_dim_element.hpp"

namespace ramify {

enum class ExtensionKind { Trivial, Unramified, Constant, Fierce, Mixed };

std::string to_string(ExtensionKind kind);
ExtensionKind parse_extension_kind(std::string_view text);

struct ReductionConfig {
    PrecisionCaps caps{};
    int adjunction_cap = 16;
};

/// Result of rewriting a modulo x^p - x.
///
/// a_reduced = a - (x^p - x) with x = x_recorded, both over
/// F_q((t^{1/d_t}))((pi^{1/(d_pi p^n)})) where n = adjoined_pi_root_exponent.
/// The fierce data describe the deepest non-constant level pi^{-M} U of
/// a_reduced whose t-part is not a p-th power; the constant data the
/// deepest surviving constant term c pi^{-s}.
struct ASNormalForm {
    TwoDimElement a_reduced;
    TwoDimElement x_recorded;
    int adjoined_pi_root_exponent = 0;
    ExtensionKind kind = ExtensionKind::Trivial;

    std::optional<Rational> fierce_depth;          // M
    std::optional<TwoDimElement> fierce_unit;      // u = pi^M a_reduced
    std::optional<TwoDimElement> fierce_scale;     // s^m = pi^{M/p}
    std::optional<Rational> constant_depth;        // s
    std::optional<TwoDimElement> constant_part;    // negative-level constants of a_reduced

    /// Level 0 of a_reduced keeps a t-term of negative exponent prime to p.
    bool residue_separable_nontrivial = false;
    /// Constant term of the reduced residue has nonzero trace.
    bool residue_constant_nontrivial = false;

    bool certified = true;
    std::vector<std::string> trace;
};

struct ExtensionReport {
    ExtensionKind kind = ExtensionKind::Trivial;
    RamIndex break_A = RamIndex::minus_one();
    RamIndex2 break_A2 = RamIndex::minus_one();
    int adjoined_root_exponent = 0;
    bool certified = true;
    std::vector<std::string> trace;

    bool operator==(const ExtensionReport&) const = default;
};

/// Rewrites a modulo the image of x -> x^p - x, adjoining p-th roots of pi
/// when the deepest non-constant level is a p-th power in t but its
/// pi-exponent is not divisible by p. Throws PrecisionExhausted when a
/// needed coefficient is unknown and DomainError when the adjunction cap is
/// exceeded. The identity a - a_reduced = x^p - x is checked on every call
/// (ConsistencyError on failure).
ASNormalForm reduce_representative(const TwoDimElement& a, const ReductionConfig& config = {});

ExtensionKind classify_extension(const TwoDimElement& a, const ReductionConfig& config = {});

/// Full report. Unramified and trivial extensions report the break -1.
ExtensionReport analyze_extension(const TwoDimElement& a, const ReductionConfig& config = {});
ExtensionReport report_from_normal_form(const ASNormalForm& form);

/// (c, s) for constant, (i, M/p) for fierce extensions.
RamIndex break_A(const TwoDimElement& a, const ReductionConfig& config = {});
/// (-w(U)/p, M/p) for extensions with a fierce part; throws DomainError otherwise.
RamIndex2 break_A2(const TwoDimElement& a, const ReductionConfig& config = {});

}  // namespace ramify
