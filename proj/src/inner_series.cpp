#include "ramify/inner_series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

std::int64_t numerator_over(const Rational& e, std::int64_t d) {
    Rational scaled = e * d;
    if (scaled.denominator() != 1)
        throw DomainError("exponent " + to_string(e) + " not representable over denominator " +
                          std::to_string(d));
    return scaled.numerator();
}

std::optional<std::int64_t> min_opt(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

std::string exponent_text(const Rational& e) {
    if (e.denominator() == 1 && e.numerator() >= 0) return to_string(e);
    return "(" + to_string(e) + ")";
}

}  // namespace

InnerSeries::InnerSeries(FieldPtr field, std::int64_t denominator)
    : field_(std::move(field)), denominator_(denominator) {
    if (!field_) throw DomainError("null field");
    if (!is_power_of(denominator_, field_->p()))
        throw DomainError("exponent denominator must be a power of p");
}

InnerSeries InnerSeries::from_terms(FieldPtr field, std::int64_t denominator, std::vector<Term> terms,
                                    std::optional<std::int64_t> precision) {
    InnerSeries s(std::move(field), denominator);
    s.terms_ = std::move(terms);
    s.precision_ = precision;
    s.normalize();
    return s;
}

InnerSeries InnerSeries::monomial(FieldPtr field, Fq coefficient, const Rational& exponent) {
    std::int64_t d = exponent.denominator();
    InnerSeries s(std::move(field), d);
    s.terms_.emplace_back(exponent.numerator(), coefficient);
    s.normalize();
    return s;
}

InnerSeries InnerSeries::constant(FieldPtr field, Fq coefficient) {
    return monomial(std::move(field), coefficient, Rational(0));
}

void InnerSeries::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        if (precision_ && e >= *precision_) break;
        if (!merged.empty() && merged.back().first == e)
            merged.back().second = field_->add(merged.back().second, c);
        else
            merged.emplace_back(e, c);
    }
    std::erase_if(merged, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(merged);
}

std::optional<Rational> InnerSeries::precision() const {
    if (!precision_) return std::nullopt;
    return Rational(*precision_, denominator_);
}

Rational InnerSeries::valuation() const {
    if (terms_.empty()) {
        if (is_exact()) throw DomainError("valuation of zero");
        throw PrecisionExhausted("leading t-coefficient unknown (O(t^" + ramify::to_string(*precision()) + "))");
    }
    return Rational(terms_.front().first, denominator_);
}

Fq InnerSeries::leading_coefficient() const {
    valuation();
    return terms_.front().second;
}

Fq InnerSeries::coefficient(const Rational& exponent) const {
    Rational scaled = exponent * denominator_;
    if (scaled.denominator() != 1) return 0;
    std::int64_t e = scaled.numerator();
    if (precision_ && e >= *precision_)
        throw PrecisionExhausted("coefficient of t^" + ramify::to_string(exponent) + " beyond precision");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::int64_t x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
}

InnerSeries InnerSeries::with_denominator(std::int64_t d) const {
    if (d == denominator_) return *this;
    if (d % denominator_ != 0) throw DomainError("denominator must be a multiple of the current one");
    std::int64_t k = d / denominator_;
    InnerSeries s(field_, d);
    s.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e * k, c);
    if (precision_) s.precision_ = *precision_ * k;
    return s;
}

InnerSeries InnerSeries::truncated(const Rational& cap) const {
    Rational scaled = cap * denominator_;
    std::int64_t limit = ceil_rational(scaled);
    if (precision_ && *precision_ <= limit) return *this;
    InnerSeries s = *this;
    bool dropped = false;
    while (!s.terms_.empty() && s.terms_.back().first >= limit) {
        s.terms_.pop_back();
        dropped = true;
    }
    if (dropped || precision_) s.precision_ = precision_ ? std::min(*precision_, limit) : limit;
    return s;
}

InnerSeries InnerSeries::operator-() const {
    InnerSeries s = *this;
    for (auto& t : s.terms_) t.second = field_->neg(t.second);
    return s;
}

InnerSeries InnerSeries::operator+(const InnerSeries& other) const {
    std::int64_t d = lcm64(denominator_, other.denominator_);
    InnerSeries a = with_denominator(d), b = other.with_denominator(d);
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() + b.terms_.size());
    std::merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), std::back_inserter(terms),
               [](const Term& x, const Term& y) { return x.first < y.first; });
    return from_terms(field_, d, std::move(terms), min_opt(a.precision_, b.precision_));
}

InnerSeries InnerSeries::operator-(const InnerSeries& other) const { return *this + (-other); }

InnerSeries InnerSeries::operator*(const InnerSeries& other) const {
    std::int64_t d = lcm64(denominator_, other.denominator_);
    InnerSeries a = with_denominator(d), b = other.with_denominator(d);
    if (a.is_exact_zero() || b.is_exact_zero()) return InnerSeries(field_, d);
    // Lowest possibly-nonzero exponent of each factor.
    auto low = [](const InnerSeries& s) { return s.terms_.empty() ? *s.precision_ : s.terms_.front().first; };
    std::optional<std::int64_t> prec;
    if (b.precision_) prec = low(a) + *b.precision_;
    if (a.precision_) prec = min_opt(prec, low(b) + *a.precision_);
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            if (prec && ea + eb >= *prec) break;
            terms.emplace_back(ea + eb, field_->mul(ca, cb));
        }
    }
    return from_terms(field_, d, std::move(terms), prec);
}

InnerSeries InnerSeries::scaled(Fq c) const {
    if (c == 0) {
        InnerSeries z(field_, denominator_);
        return z;
    }
    InnerSeries s = *this;
    for (auto& t : s.terms_) t.second = field_->mul(t.second, c);
    return s;
}

InnerSeries InnerSeries::shifted(const Rational& e) const {
    std::int64_t d = lcm64(denominator_, e.denominator());
    InnerSeries s = with_denominator(d);
    std::int64_t k = numerator_over(e, d);
    for (auto& t : s.terms_) t.first += k;
    if (s.precision_) *s.precision_ += k;
    return s;
}

InnerSeries InnerSeries::frobenius() const {
    const std::int64_t p = field_->p();
    InnerSeries s(field_, denominator_);
    s.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e * p, field_->frobenius(c));
    if (precision_) s.precision_ = *precision_ * p;
    return s;
}

InnerSeries InnerSeries::inverse(const Rational& relative_cap) const {
    if (terms_.empty()) {
        if (is_exact()) throw DivisionByZero("inverse of zero series");
        throw PrecisionExhausted("inverse of a series with no known terms");
    }
    const auto [e0, c0] = terms_.front();
    const Fq c0_inv = field_->inv(c0);
    // this = c0 t^{e0} (1 + y) with y of positive valuation.
    if (terms_.size() == 1 && is_exact()) {
        InnerSeries s(field_, denominator_);
        s.terms_.emplace_back(-e0, c0_inv);
        return s;
    }
    std::int64_t rel = ceil_rational(relative_cap * denominator_);
    if (precision_) rel = std::min(rel, *precision_ - e0);
    if (rel <= 0) throw PrecisionExhausted("no relative precision left for inverse");
    std::vector<Term> y_terms;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        y_terms.emplace_back(terms_[i].first - e0, field_->neg(field_->mul(terms_[i].second, c0_inv)));
    InnerSeries minus_y = from_terms(field_, denominator_, std::move(y_terms), rel);
    InnerSeries sum = from_terms(field_, denominator_, {{0, 1}}, rel);
    InnerSeries power = sum;
    while (true) {
        power = (power * minus_y).truncated(Rational(rel, denominator_));
        if (power.has_no_terms()) break;
        sum = sum + power;
    }
    sum = from_terms(field_, denominator_, std::vector<Term>(sum.terms_.begin(), sum.terms_.end()), rel);
    return sum.scaled(c0_inv).shifted(Rational(-e0, denominator_));
}

std::pair<InnerSeries, InnerSeries> InnerSeries::split_pth_powers() const {
    const std::int64_t p = field_->p();
    InnerSeries powers(field_, denominator_), rest(field_, denominator_);
    for (const auto& t : terms_) {
        std::int64_t r = t.first % p;
        (r == 0 ? powers : rest).terms_.push_back(t);
    }
    powers.precision_ = precision_;
    rest.precision_ = precision_;
    return {powers, rest};
}

InnerSeries InnerSeries::principal_part() const {
    InnerSeries s(field_, denominator_);
    for (const auto& t : terms_)
        if (t.first < 0) s.terms_.push_back(t);
    return s;
}

bool InnerSeries::operator==(const InnerSeries& other) const {
    std::int64_t d = lcm64(denominator_, other.denominator_);
    InnerSeries a = with_denominator(d), b = other.with_denominator(d);
    return *field_ == *other.field_ && a.terms_ == b.terms_ && a.precision_ == b.precision_;
}

std::string InnerSeries::to_string(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        Rational ex(e, denominator_);
        std::string coeff = field_->element_to_string(c);
        bool paren = coeff.find('+') != std::string::npos;
        if (ex == 0) {
            out << coeff;
            continue;
        }
        if (c != 1) out << (paren ? "(" + coeff + ")" : coeff) << "*";
        out << var;
        if (ex != 1) out << "^" << exponent_text(ex);
    }
    if (precision_) {
        if (!first) out << " + ";
        out << "O(" << var << "^" << exponent_text(*precision()) << ")";
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::optional<InnerSeries> pth_root_residue(const InnerSeries& u, std::optional<Rational> requested_precision) {
    if (u.is_exact_zero()) throw DomainError("p-th root test of zero");
    if (u.has_no_terms()) throw PrecisionExhausted("p-th root test of a series with no known terms");
    const auto& field = u.field();
    const std::int64_t p = field->p();
    auto root_precision = u.precision_numerator();
    if (root_precision && requested_precision) {
        // Known to P means the root is known to P/p.
        if (Rational(*root_precision, u.denominator()) < *requested_precision * p)
            throw PrecisionExhausted("p-th root needs input precision " + to_string(*requested_precision * p));
    }
    std::vector<InnerSeries::Term> root;
    for (const auto& [e, c] : u.terms()) {
        if (e % p != 0) return std::nullopt;
        root.emplace_back(e / p, field->pth_root(c));
    }
    std::optional<std::int64_t> prec;
    if (root_precision) prec = ceil_rational(Rational(*root_precision, p));
    InnerSeries s = InnerSeries::from_terms(field, u.denominator(), std::move(root), prec);
    if (requested_precision) s = s.truncated(*requested_precision);
    return s;
}

}  // namespace ramify
