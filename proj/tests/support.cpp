#include "support.hpp"

#include <algorithm>

namespace ramify::testing {

TwoDimElement random_element(Rng& rng, const FieldPtr& field, int terms, std::int64_t pi_lo, std::int64_t pi_hi,
                             std::int64_t t_lo, std::int64_t t_hi) {
    TwoDimElement x = TwoDimElement::zero(field);
    for (int k = 0; k < terms; ++k)
        x += TwoDimElement::monomial(field, nonzero_coefficient(rng, field), uniform(rng, t_lo, t_hi),
                                     uniform(rng, pi_lo, pi_hi));
    return x;
}

TwoDimElement random_fierce_candidate(Rng& rng, const FieldPtr& field, std::int64_t max_depth) {
    const std::int64_t p = field->p();
    const std::int64_t depth = uniform(rng, 1, max_depth);
    auto nonzero_t = [&](std::int64_t lo, std::int64_t hi) {
        std::int64_t e = 0;
        while (e == 0) e = uniform(rng, lo, hi);
        return e;
    };
    TwoDimElement a = TwoDimElement::zero(field);
    // Leading level: a p-th power in t half of the time, so reduction has work to do.
    const bool pth_power_lead = uniform(rng, 0, 1) == 1;
    const int lead_terms = static_cast<int>(uniform(rng, 1, 3));
    for (int k = 0; k < lead_terms; ++k) {
        std::int64_t e = nonzero_t(-3, 4);
        if (pth_power_lead) e *= p;
        a += TwoDimElement::monomial(field, nonzero_coefficient(rng, field), e, -depth);
    }
    const int extra = static_cast<int>(uniform(rng, 0, 5));
    for (int k = 0; k < extra; ++k) {
        const std::int64_t level = uniform(rng, -depth + 1, 3);
        const std::int64_t e = level < 0 ? nonzero_t(-3, 5) : uniform(rng, -3, 5);
        a += TwoDimElement::monomial(field, nonzero_coefficient(rng, field), e, level);
    }
    return a;
}

Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den) {
    return Rational(uniform(rng, lo * den, hi * den), den);
}

FiniteAbelianGroup random_group(Rng& rng, std::int64_t p, std::size_t max_order, int max_rank) {
    std::vector<std::int64_t> factors;
    std::size_t order = 1;
    const int rank = static_cast<int>(uniform(rng, 1, max_rank));
    for (int k = 0; k < rank; ++k) {
        std::int64_t f = p;
        while (order * static_cast<std::size_t>(f * p) <= max_order && uniform(rng, 0, 2) == 0) f *= p;
        if (order * static_cast<std::size_t>(f) > max_order) break;
        factors.push_back(f);
        order *= static_cast<std::size_t>(f);
    }
    if (factors.empty()) factors.push_back(p);
    std::sort(factors.rbegin(), factors.rend());
    return FiniteAbelianGroup(factors);
}

FilteredGroup random_filtration(Rng& rng, const FiniteAbelianGroup& g, const std::vector<Subgroup>& subgroups,
                                bool pairs) {
    std::vector<Subgroup> chain{g.whole()};
    const int wanted = static_cast<int>(uniform(rng, 1, 3));
    while (static_cast<int>(chain.size()) < wanted) {
        std::vector<const Subgroup*> smaller;
        for (const auto& s : subgroups)
            if (s.order > 1 && s.order < chain.back().order && is_contained(s, chain.back())) smaller.push_back(&s);
        if (smaller.empty()) break;
        chain.push_back(*smaller[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(smaller.size()) - 1))]);
    }
    std::vector<FilterJump> jumps;
    if (pairs) {
        Rational second = 0;
        for (const auto& s : chain) {
            second += Rational(uniform(rng, 1, 12), 4);
            jumps.push_back({RamIndex2::pair(random_rational(rng, -3, 3, 2), second), s});
        }
    } else {
        const std::size_t c_jumps = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(chain.size())));
        Rational c = 0, i = 0;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            if (k < c_jumps) {
                c += uniform(rng, 1, 4);
                jumps.push_back({RamIndex::c(c), chain[k]});
            } else {
                i += random_rational(rng, 1, 4, 3);
                jumps.push_back({RamIndex::i(i), chain[k]});
            }
        }
    }
    return FilteredGroup(g, std::move(jumps));
}

RamIndex2 random_index(Rng& rng, bool pairs) {
    Rational depth = random_rational(rng, 0, 30, 12);
    if (depth == 0) depth = Rational(1, 12);
    if (pairs) return RamIndex2::pair(random_rational(rng, -20, 20, 6), depth);
    return uniform(rng, 0, 1) == 0 ? RamIndex2(RamIndex::c(depth)) : RamIndex2(RamIndex::i(depth));
}

}  // namespace ramify::testing
