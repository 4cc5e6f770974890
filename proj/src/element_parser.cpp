#include "ramify/element_parser.hpp"

#include <cctype>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify {

namespace {

class Parser {
public:
    Parser(std::string_view text, const FieldPtr& field) : field_(field) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }

    TwoDimElement parse() {
        if (src_.empty()) fail("empty expression");
        TwoDimElement sum = TwoDimElement::zero(field_);
        bool first = true;
        while (pos_ < src_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = get() == '-';
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            TwoDimElement term = parse_term();
            sum = negative ? sum - term : sum + term;
            first = false;
        }
        return sum;
    }

private:
    TwoDimElement parse_term() {
        Fq coeff = 1;
        Rational t_exp(0), pi_exp(0);
        std::int64_t g_exp = 0;
        while (true) {
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = field_->mul(coeff, field_->from_int(parse_integer()));
            } else if (match("pi")) {
                pi_exp += parse_optional_exponent();
            } else if (match("t")) {
                t_exp += parse_optional_exponent();
            } else if (match("g")) {
                if (field_->f() == 1) fail("generator 'g' is only available when f > 1");
                Rational e = parse_optional_exponent();
                if (e.denominator() != 1 || e < 0) fail("exponent of g must be a non-negative integer");
                g_exp += e.numerator();
            } else {
                fail("expected a coefficient, 't', or 'pi'");
            }
            if (peek() != '*') break;
            get();
        }
        check_denominator(t_exp);
        check_denominator(pi_exp);
        if (g_exp > 0) coeff = field_->mul(coeff, field_->pow(field_->generator(), static_cast<std::uint64_t>(g_exp)));
        return TwoDimElement::monomial(field_, coeff, t_exp, pi_exp);
    }

    Rational parse_optional_exponent() {
        if (peek() != '^') return Rational(1);
        get();
        if (peek() == '(') {
            get();
            std::int64_t num = parse_signed();
            std::int64_t den = 1;
            if (peek() == '/') {
                get();
                den = parse_integer();
                if (den == 0) fail("zero denominator");
            }
            if (get() != ')') fail("expected ')'");
            return Rational(num, den);
        }
        return Rational(parse_signed());
    }

    std::int64_t parse_signed() {
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = get() == '-';
        std::int64_t v = parse_integer();
        return negative ? -v : v;
    }

    std::int64_t parse_integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > (std::int64_t{1} << 56)) fail("integer too large");
            v = v * 10 + (get() - '0');
        }
        return v;
    }

    void check_denominator(const Rational& e) {
        if (!is_power_of(e.denominator(), field_->p()))
            fail("exponent " + to_string(e) + " has a denominator that is not a power of p");
    }

    bool match(std::string_view word) {
        if (src_.compare(pos_, word.size(), word) != 0) return false;
        // "pi" must not be read as "p" followed by something else, and "t" must not swallow letters.
        std::size_t after = pos_ + word.size();
        if (after < src_.size() && std::isalpha(static_cast<unsigned char>(src_[after]))) return false;
        pos_ = after;
        return true;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char get() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + src_ + "'");
    }

    const FieldPtr& field_;
    std::string src_;
    std::size_t pos_ = 0;
};

std::string exponent_suffix(const std::string& var, const Rational& e) {
    if (e == 1) return var;
    if (e.denominator() == 1) return var + "^" + std::to_string(e.numerator());
    return var + "^(" + to_string(e) + ")";
}

}  // namespace

TwoDimElement parse_element(std::string_view text, const FieldPtr& field) { return Parser(text, field).parse(); }

std::string format_element(const TwoDimElement& x) {
    if (!x.is_exact()) throw DomainError("only exact elements have a textual form");
    const auto& field = x.field();
    std::vector<std::string> terms;
    for (const auto& [num, series] : x.levels()) {
        Rational pi_exp(num, x.pi_denominator());
        for (const auto& [tn, c] : series.terms()) {
            Rational t_exp(tn, series.denominator());
            // Expand c in the basis g^i so that every term carries an integer coefficient.
            std::int64_t code = c;
            for (int i = 0; i < field->f(); ++i) {
                std::int64_t digit = code % field->p();
                code /= field->p();
                if (digit == 0) continue;
                std::vector<std::string> factors;
                if (digit != 1 || (i == 0 && t_exp == 0 && pi_exp == 0)) factors.push_back(std::to_string(digit));
                if (i > 0) factors.push_back(exponent_suffix("g", Rational(i)));
                if (t_exp != 0) factors.push_back(exponent_suffix("t", t_exp));
                if (pi_exp != 0) factors.push_back(exponent_suffix("pi", pi_exp));
                std::string term;
                for (std::size_t k = 0; k < factors.size(); ++k) term += (k ? " * " : "") + factors[k];
                terms.push_back(term);
            }
        }
    }
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) out += (k ? " + " : "") + terms[k];
    return out;
}

}  // namespace ramify
