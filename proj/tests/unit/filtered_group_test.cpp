#include <doctest.h>

#include "ramify/errors.hpp"
#include "ramify/filtered_group.hpp"
#include "support.hpp"

using namespace ramify;

namespace {
RamIndex2 ix(const char* text) { return parse_index(text); }
}  // namespace

TEST_SUITE("filtered-group") {
    TEST_CASE("finite abelian groups") {
        FiniteAbelianGroup g({4, 2});
        CHECK(g.order() == 8);
        CHECK(g.all_subgroups().size() == 8);
        CHECK(FiniteAbelianGroup({2, 2, 2}).all_subgroups().size() == 16);
        CHECK(FiniteAbelianGroup({9}).all_subgroups().size() == 3);
        Subgroup twice = parse_subgroup("pG", g);
        CHECK(twice.order == 2);
        CHECK(parse_subgroup("<(1,0)>", g).order == 4);
        CHECK(g.is_subgroup(twice));
        Quotient q = quotient(g, twice);
        CHECK(q.group.order() == 4);
        CHECK(q.group.type() == std::vector<std::int64_t>{2, 2});
        CHECK(parse_cyclic_factors("p^2,p", 3) == std::vector<std::int64_t>{9, 3});
        CHECK_THROWS(parse_subgroup("<(1)>", g));
    }

    TEST_CASE("filtrations are validated") {
        FiniteAbelianGroup g({4});
        Subgroup half = parse_subgroup("pG", g);
        CHECK_THROWS_AS(FilteredGroup(g, {{ix("i:1"), half}, {ix("i:3"), g.whole()}}), DomainError);
        CHECK_THROWS_AS(FilteredGroup(g, {{ix("i:3"), g.whole()}, {ix("i:1"), half}}), DomainError);
        CHECK_THROWS_AS(FilteredGroup(g, {{ix("i:1"), g.whole()}, {ix("i:2"), g.whole()}}), DomainError);
        FilteredGroup fg(g, {{ix("i:1"), g.whole()}, {ix("i:3"), half}});
        CHECK(fg.at(ix("i:1")).order == 4);
        CHECK(fg.at(ix("i:2")).order == 2);
        CHECK(fg.at(ix("i:3")).order == 2);
        CHECK(fg.at(ix("(0,3)")).order == 1);
        CHECK(fg.at(ix("-1")).order == 4);
    }

    TEST_CASE("lower to upper") {
        FiniteAbelianGroup z2({2});
        FilteredGroup one(z2, {{ix("i:3/2"), z2.whole()}});
        CHECK(lower_to_upper(one).jumps().front().index == ix("i:3"));

        FiniteAbelianGroup g({4, 2});
        Subgroup s = parse_subgroup("<(1,0)>", g);
        FilteredGroup fg(g, {{ix("i:1"), g.whole()}, {ix("i:3"), s}});
        FilteredGroup up = lower_to_upper(fg);
        CHECK(up.numbering() == Numbering::Upper);
        REQUIRE(up.jumps().size() == 2);
        CHECK(up.jumps()[0].index == ix("i:8"));
        CHECK(up.jumps()[1].index == ix("i:16"));

        FiniteAbelianGroup c4({4});
        FilteredGroup f(c4, {{ix("i:1"), c4.whole()}, {ix("i:3"), parse_subgroup("pG", c4)}});
        REQUIRE(lower_to_upper(f).jumps().size() == 2);
        CHECK(lower_to_upper(f).jumps()[0].index == ix("i:4"));
        CHECK(lower_to_upper(f).jumps()[1].index == ix("i:8"));
    }

    TEST_CASE("subgroup and quotient formulas") {
        const std::int64_t p = 3;
        FiniteAbelianGroup g({p * p});
        Subgroup h = parse_subgroup("pG", g);
        FilteredGroup fg(g, {{ix("i:1"), g.whole()}, {ix("i:3"), h}});

        CHECK(subgroup_filtration(fg, g.whole()) == fg);
        FilteredGroup trivial = subgroup_filtration(fg, g.closure({}));
        CHECK(trivial.jumps().empty());

        FilteredGroup upper(g, {{ix("i:1"), g.whole()}, {ix("i:3"), h}}, Numbering::Upper);
        FilteredGroup q = quotient_upper(upper, h);
        REQUIRE(q.jumps().size() == 1);
        CHECK(q.jumps().front().index == ix("i:1"));
        CHECK(q.jumps().front().subgroup.order == p);
        CHECK_THROWS_AS(quotient_upper(fg, h), DomainError);

        for (const auto& s : g.all_subgroups()) CHECK(herbrand_quotient_check(fg, s));
    }

    TEST_CASE("quotient compatibility on random groups") {
        testing::Rng rng(23);
        for (int k = 0; k < 12; ++k) {
            FiniteAbelianGroup g = testing::random_group(rng, k % 3 == 0 ? 3 : 2, 64, 3);
            auto subgroups = g.all_subgroups();
            FilteredGroup fg = testing::random_filtration(rng, g, subgroups, k % 2 == 1);
            for (const auto& h : subgroups) {
                CHECK(herbrand_quotient_check(fg, h));
                FilteredGroup sub = subgroup_filtration(fg, h);
                for (const auto& jump : fg.jumps()) CHECK(sub.at(jump.index) == intersect(h, fg.at(jump.index)));
            }
        }
    }
}
