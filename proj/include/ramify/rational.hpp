#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost's mixed rational/integer
// equality templates call each other forever. These exact-match overloads win overload resolution.
namespace boost {
#define RAMIFY_RATIONAL_EQ(T)                                                                                 \
    inline bool operator==(const rational<std::int64_t>& a, T b) { return a == rational<std::int64_t>(b); } \
    inline bool operator==(T b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); } \
    inline bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == rational<std::int64_t>(b)); } \
    inline bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == rational<std::int64_t>(b)); }
RAMIFY_RATIONAL_EQ(int)
RAMIFY_RATIONAL_EQ(std::int64_t)
#undef RAMIFY_RATIONAL_EQ
}  // namespace boost

namespace ramify {

using Rational = boost::rational<std::int64_t>;

/// Renders as "a" or "a/b"; never as a decimal.
std::string to_string(const Rational& r);

/// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// True when n == p^k for some k >= 0.
bool is_power_of(std::int64_t n, std::int64_t p);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Smallest integer >= r.
std::int64_t ceil_rational(const Rational& r);
/// Largest integer <= r.
std::int64_t floor_rational(const Rational& r);

}  // namespace ramify
