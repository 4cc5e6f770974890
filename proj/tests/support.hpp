#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ramify/filtered_group.hpp"
#include "ramify/herbrand_fn.hpp"
#include "ramify/two_dim_element.hpp"

namespace ramify::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Fq nonzero_coefficient(Rng& rng, const FieldPtr& field) {
    return static_cast<Fq>(uniform(rng, 1, field->q() - 1));
}

/// Random exact element with integer exponents, pi in [pi_lo, pi_hi], t in [t_lo, t_hi].
TwoDimElement random_element(Rng& rng, const FieldPtr& field, int terms, std::int64_t pi_lo, std::int64_t pi_hi,
                             std::int64_t t_lo, std::int64_t t_hi);

/// Random a = pi^-M u whose negative levels carry no t^0 terms, so reduction ends Fierce
/// unless every non-constant part is eaten by x^p - x.
TwoDimElement random_fierce_candidate(Rng& rng, const FieldPtr& field, std::int64_t max_depth);

/// Random rational in [lo, hi] with denominator dividing den.
Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den);

/// Random p-group of order <= max_order and rank <= max_rank.
FiniteAbelianGroup random_group(Rng& rng, std::int64_t p, std::size_t max_order, int max_rank);

/// Random lower filtration with 1..3 jumps; c-jumps precede i-jumps, or all jumps are pairs.
FilteredGroup random_filtration(Rng& rng, const FiniteAbelianGroup& g, const std::vector<Subgroup>& subgroups,
                                bool pairs);

/// Random index of A (pairs = false) or of the pair region of A_2 (pairs = true), away from -1 and 0.
RamIndex2 random_index(Rng& rng, bool pairs);

}  // namespace ramify::testing
