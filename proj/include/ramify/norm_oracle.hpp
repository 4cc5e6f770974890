#pragma once

#include <vector>

#include "ramify/artin_schreier.hpp"
#include "ramify/index.hpp"
#include "ramify/two_dim_element.hpp"

namespace ramify {

/// Polynomial over K, constant coefficient first.
using Polynomial = std::vector<TwoDimElement>;

/// Determinant by Berkowitz's division-free algorithm.
TwoDimElement determinant(const std::vector<std::vector<TwoDimElement>>& m);

/// Sylvester resultant. Exact-zero leading coefficients are stripped first;
/// throws DomainError if either polynomial is zero.
TwoDimElement resultant(const Polynomial& f, const Polynomial& g);

/// x^p - x - a.
Polynomial artin_schreier_polynomial(const TwoDimElement& a);
/// f(x + 1) - f(x).
Polynomial shift_difference(const Polynomial& f);

/// v_L(f(b)) for b^p - b = a, as (1/p) v(Res_x(x^p - x - a, f)).
ValuePair norm_valuation(const TwoDimElement& a, const Polynomial& f);

/// v_L(f(b + 1) - f(b)); throws DomainError when the difference vanishes (f Galois-invariant).
ValuePair oracle_break_via_norm(const TwoDimElement& a, const Polynomial& f);

/// Refined break v_L(sigma(c)/c - 1) for c = s^m (b - x_recorded), both
/// valuations taken through norms. Requires a fierce part in the form.
RamIndex2 oracle_refined_break(const TwoDimElement& a, const ASNormalForm& form);

}  // namespace ramify
