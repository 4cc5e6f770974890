#pragma once

#include <string>
#include <string_view>

#include "ramify/two_dim_element.hpp"

namespace ramify {

/// Parses a sum of terms `c * t^(a/b) * pi^(e/f)` into an exact element.
///
/// Factors within a term are joined by `*` and may appear in any order; a
/// term may carry a leading sign. Exponents are integers (`t^-2`) or
/// parenthesized rationals (`pi^(-3/4)`) whose denominators must be powers
/// of p. Integer coefficients are reduced mod p; when f > 1 the token `g`
/// names the generator of F_q over F_p. Whitespace is ignored.
TwoDimElement parse_element(std::string_view text, const FieldPtr& field);

/// Renders an exact element in the same grammar (parse_element inverts it).
/// Throws DomainError for elements that carry finite precision.
std::string format_element(const TwoDimElement& x);

}  // namespace ramify
