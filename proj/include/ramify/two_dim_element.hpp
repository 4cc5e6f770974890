#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramify/inner_series.hpp"
#include "ramify/prime_field.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// Relative precision caps: how many exponent units past the leading term
/// infinite expansions (inverses) are carried, in t and in pi.
struct PrecisionCaps {
    Rational t_terms{40};
    Rational pi_terms{40};

    PrecisionCaps doubled() const { return {t_terms * 2, pi_terms * 2}; }
};

/// Value of the rank-2 valuation. Ordered lexicographically by (v2, v1).
struct ValuePair {
    Rational v1{0};
    Rational v2{0};

    ValuePair operator+(const ValuePair& o) const { return {v1 + o.v1, v2 + o.v2}; }
    ValuePair operator-(const ValuePair& o) const { return {v1 - o.v1, v2 - o.v2}; }
    ValuePair operator*(const Rational& s) const { return {v1 * s, v2 * s}; }
    bool operator==(const ValuePair&) const = default;
    std::strong_ordering operator<=>(const ValuePair& o) const {
        if (v2 != o.v2) return v2 < o.v2 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (v1 != o.v1) return v1 < o.v1 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

std::string to_string(const ValuePair& v);

/// Element of F_q((t^{1/d_t}))((pi^{1/d_pi})), d_t and d_pi powers of p.
///
/// Stored as pi-levels: (numerator over d_pi, inner series in t), sorted,
/// with exact-zero inner series removed. All inner series share d_t. Levels
/// below pi_precision are known (each to its own t-precision); nothing is
/// known at or beyond it. No pi_precision means exact.
class TwoDimElement {
public:
    using Level = std::pair<std::int64_t, InnerSeries>;

    explicit TwoDimElement(FieldPtr field, std::int64_t d_pi = 1, std::int64_t d_t = 1);

    static TwoDimElement zero(FieldPtr field) { return TwoDimElement(std::move(field)); }
    static TwoDimElement one(FieldPtr field);
    static TwoDimElement t(FieldPtr field);
    static TwoDimElement pi(FieldPtr field);
    /// c * t^t_exp * pi^pi_exp.
    static TwoDimElement monomial(FieldPtr field, Fq c, const Rational& t_exp, const Rational& pi_exp);
    /// series * pi^pi_exp.
    static TwoDimElement from_series(const InnerSeries& series, const Rational& pi_exp);
    static TwoDimElement from_levels(FieldPtr field, std::int64_t d_pi, std::int64_t d_t, std::vector<Level> levels,
                                     std::optional<std::int64_t> pi_precision = std::nullopt);

    const FieldPtr& field() const { return field_; }
    std::int64_t pi_denominator() const { return d_pi_; }
    std::int64_t t_denominator() const { return d_t_; }
    std::span<const Level> levels() const { return levels_; }
    std::optional<std::int64_t> pi_precision_numerator() const { return pi_precision_; }
    std::optional<Rational> pi_precision() const;

    /// Exact in pi and in every inner series.
    bool is_exact() const;
    bool is_exact_zero() const { return levels_.empty() && !pi_precision_; }
    /// Inner series at pi-exponent e (exact zero if absent). Throws PrecisionExhausted beyond pi_precision.
    InnerSeries level(const Rational& e) const;

    TwoDimElement with_denominators(std::int64_t d_pi, std::int64_t d_t) const;
    /// Drops levels with pi-exponent >= pi_cap and inner terms with t-exponent >= t_cap.
    TwoDimElement truncated(const Rational& pi_cap, std::optional<Rational> t_cap = std::nullopt) const;
    /// Truncation relative to the leading term using the caps.
    TwoDimElement truncated_relative(const PrecisionCaps& caps) const;

    TwoDimElement operator-() const;
    TwoDimElement operator+(const TwoDimElement& other) const;
    TwoDimElement operator-(const TwoDimElement& other) const;
    TwoDimElement operator*(const TwoDimElement& other) const;
    TwoDimElement& operator+=(const TwoDimElement& other) { return *this = *this + other; }
    TwoDimElement& operator-=(const TwoDimElement& other) { return *this = *this - other; }
    TwoDimElement& operator*=(const TwoDimElement& other) { return *this = *this * other; }
    TwoDimElement scaled(Fq c) const;
    /// Multiplication by pi^e.
    TwoDimElement pi_shifted(const Rational& e) const;
    /// Exact p-th power.
    TwoDimElement frobenius() const;
    /// Artin-Schreier operator x^p - x.
    TwoDimElement artin_schreier() const { return frobenius() - *this; }
    TwoDimElement pow(unsigned n) const;
    /// Inverse by geometric expansion after factoring out the leading term.
    /// Throws DivisionByZero on exact zero, PrecisionExhausted if the leading term is unknown.
    TwoDimElement inverse(const PrecisionCaps& caps = {}) const;

    bool operator==(const TwoDimElement& other) const;

    std::string to_string() const;

private:
    void normalize();

    FieldPtr field_;
    std::int64_t d_pi_ = 1;
    std::int64_t d_t_ = 1;
    std::vector<Level> levels_;
    std::optional<std::int64_t> pi_precision_;
};

enum class ArithOp { Add, Mul, Neg, Inv };

/// Single entry point for the four field operations; y is required for Add and Mul.
TwoDimElement field_arith(ArithOp op, const TwoDimElement& x, const TwoDimElement* y = nullptr,
                          const PrecisionCaps& caps = {});

/// (v1, v2): v2 is the pi-adic order with v(pi) = 1, v1 the t-adic order of
/// the residue of the unit part with w(t) = 1. Throws DomainError on zero and
/// PrecisionExhausted if the leading coefficient is unknown.
ValuePair rank2_valuation(const TwoDimElement& x);

/// The pi^0 level as an element of the residue field. Throws DomainError if
/// some pi-exponent is negative, PrecisionExhausted if level 0 is unknown.
InnerSeries residue(const TwoDimElement& x);

}  // namespace ramify
