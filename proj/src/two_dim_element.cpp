#include "ramify/two_dim_element.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ramify/errors.hpp"

namespace ramify {

std::string to_string(const ValuePair& v) { return "(" + to_string(v.v1) + ", " + to_string(v.v2) + ")"; }

namespace {

std::optional<std::int64_t> min_opt(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

void check_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!(*a == *b)) throw DomainError("operands live over different residue fields");
}

}  // namespace

TwoDimElement::TwoDimElement(FieldPtr field, std::int64_t d_pi, std::int64_t d_t)
    : field_(std::move(field)), d_pi_(d_pi), d_t_(d_t) {
    if (!field_) throw DomainError("null field");
    if (!is_power_of(d_pi_, field_->p()) || !is_power_of(d_t_, field_->p()))
        throw DomainError("exponent denominators must be powers of p");
}

TwoDimElement TwoDimElement::one(FieldPtr field) { return monomial(std::move(field), 1, 0, 0); }
TwoDimElement TwoDimElement::t(FieldPtr field) { return monomial(std::move(field), 1, 1, 0); }
TwoDimElement TwoDimElement::pi(FieldPtr field) { return monomial(std::move(field), 1, 0, 1); }

TwoDimElement TwoDimElement::monomial(FieldPtr field, Fq c, const Rational& t_exp, const Rational& pi_exp) {
    return from_series(InnerSeries::monomial(std::move(field), c, t_exp), pi_exp);
}

TwoDimElement TwoDimElement::from_series(const InnerSeries& series, const Rational& pi_exp) {
    TwoDimElement x(series.field(), pi_exp.denominator(), series.denominator());
    x.levels_.emplace_back(pi_exp.numerator(), series);
    x.normalize();
    return x;
}

TwoDimElement TwoDimElement::from_levels(FieldPtr field, std::int64_t d_pi, std::int64_t d_t,
                                         std::vector<Level> levels, std::optional<std::int64_t> pi_precision) {
    TwoDimElement x(std::move(field), d_pi, d_t);
    x.levels_ = std::move(levels);
    x.pi_precision_ = pi_precision;
    x.normalize();
    return x;
}

void TwoDimElement::normalize() {
    std::int64_t d_t = d_t_;
    for (const auto& [e, s] : levels_) d_t = lcm64(d_t, s.denominator());
    d_t_ = d_t;
    std::sort(levels_.begin(), levels_.end(), [](const Level& a, const Level& b) { return a.first < b.first; });
    std::vector<Level> merged;
    merged.reserve(levels_.size());
    for (auto& [e, s] : levels_) {
        if (pi_precision_ && e >= *pi_precision_) break;
        InnerSeries series = s.with_denominator(d_t_);
        if (!merged.empty() && merged.back().first == e)
            merged.back().second = merged.back().second + series;
        else
            merged.emplace_back(e, std::move(series));
    }
    std::erase_if(merged, [](const Level& l) { return l.second.is_exact_zero(); });
    levels_ = std::move(merged);
}

std::optional<Rational> TwoDimElement::pi_precision() const {
    if (!pi_precision_) return std::nullopt;
    return Rational(*pi_precision_, d_pi_);
}

bool TwoDimElement::is_exact() const {
    if (pi_precision_) return false;
    return std::all_of(levels_.begin(), levels_.end(), [](const Level& l) { return l.second.is_exact(); });
}

InnerSeries TwoDimElement::level(const Rational& e) const {
    Rational scaled = e * d_pi_;
    if (pi_precision_ && Rational(*pi_precision_, d_pi_) <= e)
        throw PrecisionExhausted("pi-level " + ramify::to_string(e) + " beyond precision");
    if (scaled.denominator() != 1) return InnerSeries(field_, d_t_);
    auto it = std::lower_bound(levels_.begin(), levels_.end(), scaled.numerator(),
                               [](const Level& l, std::int64_t x) { return l.first < x; });
    if (it != levels_.end() && it->first == scaled.numerator()) return it->second;
    return InnerSeries(field_, d_t_);
}

TwoDimElement TwoDimElement::with_denominators(std::int64_t d_pi, std::int64_t d_t) const {
    if (d_pi % d_pi_ != 0 || d_t % d_t_ != 0) throw DomainError("denominators must refine the current ones");
    std::int64_t k = d_pi / d_pi_;
    TwoDimElement x(field_, d_pi, d_t);
    x.levels_.reserve(levels_.size());
    for (const auto& [e, s] : levels_) x.levels_.emplace_back(e * k, s.with_denominator(d_t));
    if (pi_precision_) x.pi_precision_ = *pi_precision_ * k;
    return x;
}

TwoDimElement TwoDimElement::truncated(const Rational& pi_cap, std::optional<Rational> t_cap) const {
    std::int64_t limit = ceil_rational(pi_cap * d_pi_);
    TwoDimElement x = *this;
    bool dropped = false;
    while (!x.levels_.empty() && x.levels_.back().first >= limit) {
        x.levels_.pop_back();
        dropped = true;
    }
    if (dropped || pi_precision_) x.pi_precision_ = pi_precision_ ? std::min(*pi_precision_, limit) : limit;
    if (t_cap)
        for (auto& [e, s] : x.levels_) s = s.truncated(*t_cap);
    x.normalize();
    return x;
}

TwoDimElement TwoDimElement::truncated_relative(const PrecisionCaps& caps) const {
    if (levels_.empty()) return *this;
    Rational lead(levels_.front().first, d_pi_);
    TwoDimElement x = truncated(lead + caps.pi_terms);
    for (auto& [e, s] : x.levels_) {
        if (s.has_no_terms()) continue;
        s = s.truncated(s.valuation() + caps.t_terms);
    }
    x.normalize();
    return x;
}

TwoDimElement TwoDimElement::operator-() const {
    TwoDimElement x = *this;
    for (auto& [e, s] : x.levels_) s = -s;
    return x;
}

TwoDimElement TwoDimElement::operator+(const TwoDimElement& other) const {
    check_same_field(field_, other.field_);
    std::int64_t d_pi = lcm64(d_pi_, other.d_pi_), d_t = lcm64(d_t_, other.d_t_);
    TwoDimElement a = with_denominators(d_pi, d_t), b = other.with_denominators(d_pi, d_t);
    std::vector<Level> levels = std::move(a.levels_);
    levels.insert(levels.end(), b.levels_.begin(), b.levels_.end());
    return from_levels(field_, d_pi, d_t, std::move(levels), min_opt(a.pi_precision_, b.pi_precision_));
}

TwoDimElement TwoDimElement::operator-(const TwoDimElement& other) const { return *this + (-other); }

TwoDimElement TwoDimElement::operator*(const TwoDimElement& other) const {
    check_same_field(field_, other.field_);
    std::int64_t d_pi = lcm64(d_pi_, other.d_pi_), d_t = lcm64(d_t_, other.d_t_);
    TwoDimElement a = with_denominators(d_pi, d_t), b = other.with_denominators(d_pi, d_t);
    if (a.is_exact_zero() || b.is_exact_zero()) return TwoDimElement(field_, d_pi, d_t);
    auto low = [](const TwoDimElement& s) { return s.levels_.empty() ? *s.pi_precision_ : s.levels_.front().first; };
    std::optional<std::int64_t> prec;
    if (b.pi_precision_) prec = low(a) + *b.pi_precision_;
    if (a.pi_precision_) prec = min_opt(prec, low(b) + *a.pi_precision_);
    std::map<std::int64_t, InnerSeries> acc;
    for (const auto& [ea, sa] : a.levels_) {
        for (const auto& [eb, sb] : b.levels_) {
            std::int64_t e = ea + eb;
            if (prec && e >= *prec) break;
            InnerSeries prod = sa * sb;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, std::move(prod));
            else
                it->second = it->second + prod;
        }
    }
    std::vector<Level> levels(std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
    return from_levels(field_, d_pi, d_t, std::move(levels), prec);
}

TwoDimElement TwoDimElement::scaled(Fq c) const {
    TwoDimElement x = *this;
    for (auto& [e, s] : x.levels_) s = s.scaled(c);
    x.normalize();
    return x;
}

TwoDimElement TwoDimElement::pi_shifted(const Rational& e) const {
    std::int64_t d_pi = lcm64(d_pi_, e.denominator());
    TwoDimElement x = with_denominators(d_pi, d_t_);
    std::int64_t k = (e * d_pi).numerator();
    for (auto& [lvl, s] : x.levels_) lvl += k;
    if (x.pi_precision_) *x.pi_precision_ += k;
    return x;
}

TwoDimElement TwoDimElement::frobenius() const {
    const std::int64_t p = field_->p();
    TwoDimElement x(field_, d_pi_, d_t_);
    x.levels_.reserve(levels_.size());
    for (const auto& [e, s] : levels_) x.levels_.emplace_back(e * p, s.frobenius());
    if (pi_precision_) x.pi_precision_ = *pi_precision_ * p;
    return x;
}

TwoDimElement TwoDimElement::pow(unsigned n) const {
    TwoDimElement result = one(field_), base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

TwoDimElement TwoDimElement::inverse(const PrecisionCaps& caps) const {
    if (is_exact_zero()) throw DivisionByZero("inverse of zero");
    if (levels_.empty()) throw PrecisionExhausted("inverse of an element with no known pi-levels");
    const auto& [e0, lead] = levels_.front();
    const InnerSeries lead_inv = lead.inverse(caps.t_terms);
    if (levels_.size() == 1 && !pi_precision_) {
        TwoDimElement x(field_, d_pi_, d_t_);
        x.levels_.emplace_back(-e0, lead_inv);
        x.normalize();
        return x;
    }
    std::int64_t rel = ceil_rational(caps.pi_terms * d_pi_);
    if (pi_precision_) rel = std::min(rel, *pi_precision_ - e0);
    if (rel <= 0) throw PrecisionExhausted("no relative pi-precision left for inverse");
    // this = lead * pi^{e0} * (1 + y), y of positive pi-valuation.
    std::vector<Level> y_levels;
    for (std::size_t i = 1; i < levels_.size(); ++i)
        y_levels.emplace_back(levels_[i].first - e0, -(levels_[i].second * lead_inv));
    TwoDimElement minus_y = from_levels(field_, d_pi_, d_t_, std::move(y_levels), rel);
    TwoDimElement sum = from_levels(field_, d_pi_, d_t_, {{0, InnerSeries::constant(field_, 1)}}, rel);
    TwoDimElement power = sum;
    while (true) {
        power = (power * minus_y).truncated(Rational(rel, d_pi_));
        if (power.levels_.empty()) break;
        sum = sum + power;
    }
    TwoDimElement lead_part(field_, d_pi_, d_t_);
    lead_part.levels_.emplace_back(-e0, lead_inv);
    lead_part.normalize();
    return (sum * lead_part).truncated(Rational(rel - e0, d_pi_));
}

bool TwoDimElement::operator==(const TwoDimElement& other) const {
    if (!(*field_ == *other.field_)) return false;
    std::int64_t d_pi = lcm64(d_pi_, other.d_pi_), d_t = lcm64(d_t_, other.d_t_);
    TwoDimElement a = with_denominators(d_pi, d_t), b = other.with_denominators(d_pi, d_t);
    if (a.pi_precision_ != b.pi_precision_ || a.levels_.size() != b.levels_.size()) return false;
    for (std::size_t i = 0; i < a.levels_.size(); ++i)
        if (a.levels_[i].first != b.levels_[i].first || !(a.levels_[i].second == b.levels_[i].second)) return false;
    return true;
}

std::string TwoDimElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, s] : levels_) {
        if (!first) out << " + ";
        first = false;
        Rational ex(e, d_pi_);
        std::string inner = s.to_string("t");
        if (ex == 0) {
            out << "(" << inner << ")";
        } else {
            out << "(" << inner << ")*pi";
            if (ex != 1) {
                if (ex.denominator() == 1 && ex.numerator() > 0)
                    out << "^" << ramify::to_string(ex);
                else
                    out << "^(" << ramify::to_string(ex) << ")";
            }
        }
    }
    if (pi_precision_) {
        if (!first) out << " + ";
        first = false;
        out << "O(pi^" << ramify::to_string(*pi_precision()) << ")";
    }
    if (first) out << "0";
    return out.str();
}

TwoDimElement field_arith(ArithOp op, const TwoDimElement& x, const TwoDimElement* y, const PrecisionCaps& caps) {
    switch (op) {
        case ArithOp::Add:
            if (!y) throw DomainError("add needs two operands");
            return x + *y;
        case ArithOp::Mul:
            if (!y) throw DomainError("mul needs two operands");
            return x * *y;
        case ArithOp::Neg:
            return -x;
        case ArithOp::Inv:
            return x.inverse(caps);
    }
    throw DomainError("unknown arithmetic operation");
}

ValuePair rank2_valuation(const TwoDimElement& x) {
    if (x.is_exact_zero()) throw DomainError("valuation of zero");
    auto levels = x.levels();
    if (levels.empty()) throw PrecisionExhausted("no known pi-levels; leading term unknown");
    const auto& [e, series] = levels.front();
    return ValuePair{series.valuation(), Rational(e, x.pi_denominator())};
}

InnerSeries residue(const TwoDimElement& x) {
    auto levels = x.levels();
    if (!levels.empty() && levels.front().first < 0) throw DomainError("residue of a non-integral element");
    return x.level(0);
}

}  // namespace ramify
