#include "ramify/index.hpp"

#include <cctype>
#include <tuple>

#include "ramify/errors.hpp"

namespace ramify {

RamIndex RamIndex::c(const Rational& s) {
    if (s <= 0) throw DomainError("(c, s) needs s > 0, got " + to_string(s));
    return RamIndex(Tag::C, s);
}

RamIndex RamIndex::i(const Rational& r) {
    if (r <= 0) throw DomainError("(i, r) needs r > 0, got " + to_string(r));
    return RamIndex(Tag::I, r);
}

RamIndex2::RamIndex2(const IndexPair& p) : value_(p) {
    if (p.second <= 0) throw DomainError("pair index needs a positive second coordinate");
}

RamIndex RamIndex2::forget() const {
    if (is_pair()) return RamIndex::i(as_pair().second);
    return as_index();
}

namespace {

// Sort key: (bucket, depth, sub-bucket, first coordinate).
std::tuple<int, Rational, int, Rational> key(const RamIndex2& a) {
    if (a.is_pair()) return {3, a.as_pair().second, 1, a.as_pair().first};
    const RamIndex& x = a.as_index();
    switch (x.tag()) {
        case RamIndex::Tag::MinusOne: return {0, Rational(0), 0, Rational(0)};
        case RamIndex::Tag::Zero: return {1, Rational(0), 0, Rational(0)};
        case RamIndex::Tag::C: return {2, x.value(), 0, Rational(0)};
        case RamIndex::Tag::I: return {3, x.value(), 0, Rational(0)};
    }
    return {0, Rational(0), 0, Rational(0)};
}

}  // namespace

std::strong_ordering RamIndex2::operator<=>(const RamIndex2& other) const {
    auto a = key(*this), b = key(other);
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Cmp cmp_index(const RamIndex2& a, const RamIndex2& b) {
    auto c = a <=> b;
    if (c < 0) return Cmp::LT;
    if (c > 0) return Cmp::GT;
    return Cmp::EQ;
}

RamIndex2 scale_index(const RamIndex2& a, const Rational& q) {
    if (q <= 0) throw DomainError("scale factor must be positive");
    if (a.is_pair()) return RamIndex2(a.as_pair() * q);
    const RamIndex& x = a.as_index();
    switch (x.tag()) {
        case RamIndex::Tag::C: return RamIndex::c(x.value() * q);
        case RamIndex::Tag::I: return RamIndex::i(x.value() * q);
        default: return a;
    }
}

IndexPair shift_index(const IndexPair& a, const IndexPair& h) {
    if (a.second <= 0 || h.second <= 0) throw DomainError("shift_index expects pairs with positive second coordinates");
    return a + h;
}

std::string to_string(const RamIndex& a) {
    switch (a.tag()) {
        case RamIndex::Tag::MinusOne: return "-1";
        case RamIndex::Tag::Zero: return "0";
        case RamIndex::Tag::C: return "c:" + to_string(a.value());
        case RamIndex::Tag::I: return "i:" + to_string(a.value());
    }
    return "?";
}

std::string to_string(const IndexPair& a) { return "(" + to_string(a.first) + "," + to_string(a.second) + ")"; }

std::string to_string(const RamIndex2& a) { return a.is_pair() ? to_string(a.as_pair()) : to_string(a.as_index()); }

namespace {

std::string strip(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

}  // namespace

IndexPair parse_pair(std::string_view text) {
    std::string s = strip(text);
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw ParseError("not a pair: '" + std::string(text) + "'");
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("pair needs a comma: '" + std::string(text) + "'");
    IndexPair p{parse_rational(s.substr(1, comma - 1)), parse_rational(s.substr(comma + 1, s.size() - comma - 2))};
    if (p.second <= 0) throw ParseError("pair needs a positive second coordinate: '" + std::string(text) + "'");
    return p;
}

RamIndex2 parse_index(std::string_view text) {
    std::string s = strip(text);
    if (s == "-1") return RamIndex::minus_one();
    if (s == "0") return RamIndex::zero();
    if (!s.empty() && s.front() == '(') return RamIndex2(parse_pair(s));
    if (s.size() > 2 && s[1] == ':' && (s[0] == 'c' || s[0] == 'i')) {
        Rational v = parse_rational(s.substr(2));
        if (v <= 0) throw ParseError("index value must be positive: '" + std::string(text) + "'");
        return s[0] == 'c' ? RamIndex::c(v) : RamIndex::i(v);
    }
    throw ParseError("unrecognised index: '" + std::string(text) + "'");
}

}  // namespace ramify
