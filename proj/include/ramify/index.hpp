#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "ramify/rational.hpp"

namespace ramify {

/// Element of the index set A = {-1, 0} u {(c, s)} u {(i, r)}.
class RamIndex {
public:
    enum class Tag { MinusOne, Zero, C, I };

    static RamIndex minus_one() { return RamIndex(Tag::MinusOne, Rational(0)); }
    static RamIndex zero() { return RamIndex(Tag::Zero, Rational(0)); }
    /// (c, s), s > 0.
    static RamIndex c(const Rational& s);
    /// (i, r), r > 0.
    static RamIndex i(const Rational& r);

    Tag tag() const { return tag_; }
    /// s or r; zero for -1 and 0.
    const Rational& value() const { return value_; }
    bool has_value() const { return tag_ == Tag::C || tag_ == Tag::I; }
    /// Classical constant breaks are integers; rational values arise as Herbrand images.
    bool is_integral() const { return value_.denominator() == 1; }

    bool operator==(const RamIndex&) const = default;

private:
    RamIndex(Tag tag, Rational value) : tag_(tag), value_(value) {}

    Tag tag_;
    Rational value_;
};

/// A pair (i1, i2) of Q x Q_+ in the refined index set.
struct IndexPair {
    Rational first;
    Rational second;

    IndexPair operator+(const IndexPair& o) const { return {first + o.first, second + o.second}; }
    IndexPair operator-(const IndexPair& o) const { return {first - o.first, second - o.second}; }
    IndexPair operator*(const Rational& s) const { return {first * s, second * s}; }
    bool operator==(const IndexPair&) const = default;
};

/// Element of A_2 = A u {(i1, i2) : i2 > 0}.
///
/// Total order: -1 < 0 < every (c, s) < every (i, r) and pair; (i, r) and
/// pairs compare by second coordinate first, with (i, r) strictly below
/// every pair (x, r) and strictly above every pair (x, r') with r' < r.
class RamIndex2 {
public:
    RamIndex2(const RamIndex& a) : value_(a) {}  // NOLINT: A embeds in A_2
    RamIndex2(const IndexPair& p);               // NOLINT
    static RamIndex2 pair(const Rational& i1, const Rational& i2) { return RamIndex2(IndexPair{i1, i2}); }

    bool is_pair() const { return std::holds_alternative<IndexPair>(value_); }
    const IndexPair& as_pair() const { return std::get<IndexPair>(value_); }
    const RamIndex& as_index() const { return std::get<RamIndex>(value_); }
    bool is_tag(RamIndex::Tag tag) const { return !is_pair() && as_index().tag() == tag; }
    /// True for (i, r) and pairs: the part of A_2 the refined filtration lives in.
    bool in_i_region() const { return is_pair() || as_index().tag() == RamIndex::Tag::I; }
    /// Second coordinate for pairs, r for (i, r), s for (c, s).
    const Rational& depth() const { return is_pair() ? as_pair().second : as_index().value(); }
    /// Forgetful map A_2 -> A: (x, r) -> (i, r); identity on A.
    RamIndex forget() const;

    bool operator==(const RamIndex2&) const = default;
    std::strong_ordering operator<=>(const RamIndex2& other) const;

private:
    std::variant<RamIndex, IndexPair> value_;
};

enum class Cmp { LT, EQ, GT };

Cmp cmp_index(const RamIndex2& a, const RamIndex2& b);

/// Multiplies pairs componentwise and (c, s), (i, r) in the second slot; fixes -1 and 0.
RamIndex2 scale_index(const RamIndex2& a, const Rational& q);

/// Componentwise sum of two pairs with positive second coordinates.
IndexPair shift_index(const IndexPair& a, const IndexPair& h);

/// Textual forms: "-1", "0", "c:3", "i:5/2", "(1/2,3)".
std::string to_string(const RamIndex2& a);
std::string to_string(const RamIndex& a);
std::string to_string(const IndexPair& a);
RamIndex2 parse_index(std::string_view text);
IndexPair parse_pair(std::string_view text);

}  // namespace ramify
