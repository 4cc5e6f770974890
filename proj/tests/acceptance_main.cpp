#include <chrono>
#include <iostream>

#include "acceptance.hpp"

using namespace ramify;
using namespace ramify::acceptance;

namespace {

constexpr std::uint64_t kSeed = 20241017;

struct Timed {
    Outcome outcome;
    double seconds;
};

template <typename F>
Timed timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = f();
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    return {std::move(o), d.count()};
}

bool line(int n, const std::string& name, const Timed& t, double limit = 0) {
    bool pass = t.outcome.pass && (limit == 0 || t.seconds < limit);
    std::string detail = t.outcome.detail;
    if (t.outcome.pass && !pass) detail += "; over the " + std::to_string(limit) + " s budget";
    std::cout << "Criterion " << n << " [" << name << "]: " << (pass ? "PASS" : "FAIL") << "  (" << detail << "; "
              << t.seconds << " s)" << std::endl;
    return pass;
}

}  // namespace

int main() {
    const ReductionConfig base{};
    const ReductionConfig doubled{base.caps.doubled(), base.adjunction_cap};

    bool all = true;
    Timed c1 = timed([&] { return example_regression(base); });
    all &= line(1, "example regression", c1, 5.0);
    Timed c2 = timed([&] { return oracle_equivalence(base, kSeed); });
    all &= line(2, "oracle equivalence", c2, 60.0);
    Timed c3 = timed([&] { return wp_invariance(base, kSeed + 1); });
    all &= line(3, "wp-invariance", c3);
    all &= line(4, "Herbrand suite", timed([&] { return herbrand_suite(kSeed + 2); }));
    all &= line(5, "norm-index suite", timed([&] { return norm_index_suite(kSeed + 3); }));
    all &= line(6, "valuation axioms", timed([&] { return valuation_axioms(kSeed + 4); }));
    Timed c7 = timed([&] {
        Tagged before, after;
        for (const Timed* t : {&c1, &c2, &c3})
            before.insert(before.end(), t->outcome.reports.begin(), t->outcome.reports.end());
        for (const Outcome& o : {example_regression(doubled), oracle_equivalence(doubled, kSeed),
                                 wp_invariance(doubled, kSeed + 1)})
            after.insert(after.end(), o.reports.begin(), o.reports.end());
        return precision_stability(before, after);
    });
    all &= line(7, "precision stability", c7);
    return all ? 0 : 1;
}
