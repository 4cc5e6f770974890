#include "ramify/norm_oracle.hpp"

#include "ramify/errors.hpp"

namespace ramify {

namespace {

Polynomial stripped(Polynomial f) {
    while (!f.empty() && f.back().is_exact_zero()) f.pop_back();
    if (!f.empty() && f.back().levels().empty())
        throw PrecisionExhausted("leading coefficient of a polynomial is unknown");
    return f;
}

}  // namespace

TwoDimElement determinant(const std::vector<std::vector<TwoDimElement>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("determinant of an empty matrix");
    const FieldPtr& field = m[0][0].field();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");

    // Characteristic polynomial coefficients of the leading r x r block, highest first.
    std::vector<TwoDimElement> vect{TwoDimElement::one(field), -m[0][0]};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<TwoDimElement> col{TwoDimElement::one(field), -m[r][r]};
        std::vector<TwoDimElement> v(r, TwoDimElement::zero(field));
        for (std::size_t i = 0; i < r; ++i) v[i] = m[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            TwoDimElement dot = TwoDimElement::zero(field);
            for (std::size_t j = 0; j < r; ++j) dot += m[r][j] * v[j];
            col.push_back(-dot);
            if (k + 1 == r) break;
            std::vector<TwoDimElement> next(r, TwoDimElement::zero(field));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += m[i][j] * v[j];
            v = std::move(next);
        }
        std::vector<TwoDimElement> updated(r + 2, TwoDimElement::zero(field));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += col[i - j] * vect[j];
        vect = std::move(updated);
    }
    return n % 2 == 1 ? -vect[n] : vect[n];
}

TwoDimElement resultant(const Polynomial& f_in, const Polynomial& g_in) {
    Polynomial f = stripped(f_in), g = stripped(g_in);
    if (f.empty() || g.empty()) throw DomainError("resultant with the zero polynomial");
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    if (n == 0) return g[0].pow(static_cast<unsigned>(m));
    if (m == 0) return f[0].pow(static_cast<unsigned>(n));
    const FieldPtr& field = f[0].field();
    const std::size_t size = m + n;
    std::vector<std::vector<TwoDimElement>> sylvester(size, std::vector<TwoDimElement>(size, TwoDimElement::zero(field)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) sylvester[row][row + k] = f[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) sylvester[n + row][row + k] = g[n - k];
    return determinant(sylvester);
}

Polynomial artin_schreier_polynomial(const TwoDimElement& a) {
    const FieldPtr& field = a.field();
    const auto p = static_cast<std::size_t>(field->p());
    Polynomial f(p + 1, TwoDimElement::zero(field));
    f[0] = -a;
    f[1] = -TwoDimElement::one(field);
    f[p] = TwoDimElement::one(field);
    return f;
}

Polynomial shift_difference(const Polynomial& f) {
    if (f.empty()) return f;
    const FieldPtr& field = f[0].field();
    const std::int64_t p = field->p();
    // Binomial coefficients mod p via Pascal's triangle.
    std::vector<std::vector<std::int64_t>> binom(f.size(), std::vector<std::int64_t>(f.size(), 0));
    for (std::size_t k = 0; k < f.size(); ++k) {
        binom[k][0] = 1;
        for (std::size_t j = 1; j <= k; ++j) binom[k][j] = (binom[k - 1][j - 1] + (j < k ? binom[k - 1][j] : 0)) % p;
    }
    Polynomial out(f.size(), TwoDimElement::zero(field));
    for (std::size_t k = 0; k < f.size(); ++k)
        for (std::size_t j = 0; j < k; ++j)
            if (binom[k][j] != 0) out[j] += f[k].scaled(field->from_int(binom[k][j]));
    return stripped(std::move(out));
}

ValuePair norm_valuation(const TwoDimElement& a, const Polynomial& f) {
    const std::int64_t p = a.field()->p();
    Polynomial g = stripped(f);
    if (g.empty()) throw DomainError("norm of zero");
    if (g.size() > static_cast<std::size_t>(p)) throw DomainError("polynomial degree must be below p");
    TwoDimElement res = resultant(artin_schreier_polynomial(a), g);
    if (res.is_exact_zero()) throw DomainError("norm vanishes");
    return rank2_valuation(res) * Rational(1, p);
}

ValuePair oracle_break_via_norm(const TwoDimElement& a, const Polynomial& f) {
    Polynomial diff = shift_difference(f);
    if (diff.empty()) throw DomainError("f(b + 1) - f(b) vanishes: f is Galois-invariant");
    return norm_valuation(a, diff);
}

RamIndex2 oracle_refined_break(const TwoDimElement& a, const ASNormalForm& form) {
    if (!form.fierce_scale) throw DomainError("the oracle needs a fierce normal form");
    const TwoDimElement& sm = *form.fierce_scale;
    Polynomial f{-(sm * form.x_recorded), sm};
    ValuePair v = oracle_break_via_norm(a, f) - norm_valuation(a, f);
    return RamIndex2::pair(v.v1, v.v2);
}

}  // namespace ramify
