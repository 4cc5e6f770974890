#include <doctest.h>

#include "ramify/errors.hpp"
#include "ramify/index.hpp"
#include "support.hpp"

using namespace ramify;

namespace {
RamIndex2 ix(const char* text) { return parse_index(text); }
}  // namespace

TEST_SUITE("index-order") {
    TEST_CASE("order examples") {
        CHECK(cmp_index(ix("c:100"), ix("i:1/100")) == Cmp::LT);
        CHECK(cmp_index(ix("i:3"), ix("(5,3)")) == Cmp::LT);
        CHECK(cmp_index(ix("(7,3)"), ix("(-10,4)")) == Cmp::LT);
        CHECK(cmp_index(ix("-1"), ix("0")) == Cmp::LT);
        CHECK(cmp_index(ix("0"), ix("c:1/9")) == Cmp::LT);
        CHECK(cmp_index(ix("(1,2)"), ix("i:2")) == Cmp::GT);
        CHECK(cmp_index(ix("c:3"), ix("c:3")) == Cmp::EQ);
    }

    TEST_CASE("(i, r) is the infimum of the pairs at depth r") {
        testing::Rng rng(3);
        for (int k = 0; k < 100; ++k) {
            Rational r = testing::random_rational(rng, 1, 10, 6);
            Rational x = testing::random_rational(rng, -50, 50, 6);
            Rational lower = r - testing::random_rational(rng, 0, 1, 12) - Rational(1, 100);
            CHECK(RamIndex2(RamIndex::i(r)) < RamIndex2::pair(x, r));
            if (lower > 0) CHECK(RamIndex2::pair(x, lower) < RamIndex2(RamIndex::i(r)));
        }
    }

    TEST_CASE("total order on random triples") {
        testing::Rng rng(5);
        std::vector<RamIndex2> pool{ix("-1"), ix("0")};
        for (int k = 0; k < 60; ++k) pool.push_back(testing::random_index(rng, k % 2 == 0));
        for (const auto& a : pool)
            for (const auto& b : pool) {
                const Cmp ab = cmp_index(a, b), ba = cmp_index(b, a);
                CHECK((ab == Cmp::EQ) == (a == b));
                CHECK((ab == Cmp::LT) == (ba == Cmp::GT));
                for (const auto& c : pool)
                    if (ab == Cmp::LT && cmp_index(b, c) == Cmp::LT) CHECK(cmp_index(a, c) == Cmp::LT);
            }
    }

    TEST_CASE("scaling") {
        CHECK(scale_index(ix("(1,2)"), 3) == ix("(3,6)"));
        CHECK(scale_index(ix("0"), 5) == ix("0"));
        CHECK(scale_index(ix("i:4"), Rational(1, 2)) == ix("i:2"));
        CHECK(scale_index(ix("c:3"), 2) == ix("c:6"));
        testing::Rng rng(9);
        for (int k = 0; k < 200; ++k) {
            RamIndex2 a = testing::random_index(rng, k % 2 == 0), b = testing::random_index(rng, k % 3 == 0);
            Rational q = testing::random_rational(rng, 1, 5, 4);
            if (a < b) CHECK(scale_index(a, q) < scale_index(b, q));
        }
    }

    TEST_CASE("shifts") {
        CHECK(shift_index({0, 1}, {0, 2}) == IndexPair{0, 3});
        CHECK(shift_index({Rational(-1, 2), 3}, {Rational(1, 2), 1}) == IndexPair{0, 4});
        CHECK(shift_index({0, 4}, IndexPair{0, 1} * Rational(2 - 1)) == IndexPair{0, 5});
    }

    TEST_CASE("textual forms") {
        for (const char* text : {"-1", "0", "c:3", "i:5/2", "(1/2,3)", "(-7,1/9)"}) CHECK(to_string(ix(text)) == text);
        CHECK(ix(" ( 1/2 , 3 ) ") == RamIndex2::pair(Rational(1, 2), 3));
        CHECK_THROWS_AS(ix("c:0"), Error);
        CHECK_THROWS_AS(ix("(1,0)"), Error);
        CHECK_THROWS_AS(ix("q:1"), ParseError);
        CHECK(ix("(3,2)").forget() == RamIndex::i(2));
        CHECK(ix("c:3/2").as_index().is_integral() == false);
    }
}
