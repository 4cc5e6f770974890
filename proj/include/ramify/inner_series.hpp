#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramify/prime_field.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// Truncated Laurent series in t over F_q with exponents in (1/d)Z, d a power of p.
///
/// Terms are stored sparsely as (numerator, coefficient) with exponent
/// numerator/d, sorted by exponent and free of zero coefficients. All terms
/// below the precision are known; nothing is known at or beyond it. An absent
/// precision means the series is exact (a finite sum known completely).
class InnerSeries {
public:
    using Term = std::pair<std::int64_t, Fq>;

    /// Exact zero.
    InnerSeries(FieldPtr field, std::int64_t denominator = 1);

    /// Builds from unsorted terms; merges duplicates and drops zeros and terms at or beyond precision.
    static InnerSeries from_terms(FieldPtr field, std::int64_t denominator, std::vector<Term> terms,
                                  std::optional<std::int64_t> precision = std::nullopt);
    static InnerSeries monomial(FieldPtr field, Fq coefficient, const Rational& exponent);
    static InnerSeries constant(FieldPtr field, Fq coefficient);

    const FieldPtr& field() const { return field_; }
    std::int64_t denominator() const { return denominator_; }
    std::span<const Term> terms() const { return terms_; }
    /// Precision as a numerator over denominator(); nullopt when exact.
    std::optional<std::int64_t> precision_numerator() const { return precision_; }
    std::optional<Rational> precision() const;

    bool is_exact() const { return !precision_.has_value(); }
    /// No known nonzero terms (may still be an unknown O(t^P)).
    bool has_no_terms() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }

    /// Exponent of the lowest known term. Throws PrecisionExhausted if there is none.
    Rational valuation() const;
    Fq leading_coefficient() const;
    Fq coefficient(const Rational& exponent) const;

    /// Same series over the finer denominator d (a multiple of the current one).
    InnerSeries with_denominator(std::int64_t d) const;
    /// Drops terms with exponent >= cap, recording the loss in the precision.
    InnerSeries truncated(const Rational& cap) const;

    InnerSeries operator-() const;
    InnerSeries operator+(const InnerSeries& other) const;
    InnerSeries operator-(const InnerSeries& other) const;
    InnerSeries operator*(const InnerSeries& other) const;
    InnerSeries scaled(Fq c) const;
    /// Multiplication by t^e.
    InnerSeries shifted(const Rational& e) const;
    /// Exact p-th power (Frobenius on coefficients, exponents times p).
    InnerSeries frobenius() const;
    /// Inverse computed to relative_cap terms past the leading exponent.
    InnerSeries inverse(const Rational& relative_cap) const;

    /// Splits into (sum of monomials whose exponent numerator is divisible by p, the rest).
    std::pair<InnerSeries, InnerSeries> split_pth_powers() const;
    /// Terms with negative exponent, exact.
    InnerSeries principal_part() const;

    bool operator==(const InnerSeries& other) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();

    FieldPtr field_;
    std::int64_t denominator_ = 1;
    std::vector<Term> terms_;
    std::optional<std::int64_t> precision_;
};

/// p-th root of u in the residue field over the same exponent denominator.
///
/// Returns nullopt (NotAPthPower) when some known monomial has exponent
/// numerator prime to p. When u is only known to precision P the root is
/// known to P/p; requested_precision, if given, must not exceed P/p or
/// PrecisionExhausted is thrown. Throws DomainError on zero input.
std::optional<InnerSeries> pth_root_residue(const InnerSeries& u,
                                            std::optional<Rational> requested_precision = std::nullopt);

}  // namespace ramify
