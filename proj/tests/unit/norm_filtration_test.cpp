#include <doctest.h>

#include "ramify/errors.hpp"
#include "ramify/norm_filtration.hpp"

using namespace ramify;

namespace {
RamIndex2 ix(const char* text) { return parse_index(text); }
ExtStep fierce(std::int64_t p, const char* h) { return ExtStep{StepKind::FierceDegreeP, p, ix(h)}; }
}  // namespace

TEST_SUITE("norm-filtration") {
    TEST_CASE("single steps") {
        NormIndexResult prop1 = norm_image_index({1, 2}, ExtStep{StepKind::ConstantTotallyRamified, 2, std::nullopt});
        CHECK(prop1.target == IndexPair{1, 2});
        CHECK(prop1.cofactor_exponent == 0);

        NormIndexResult above = norm_image_index({0, 4}, fierce(2, "(0,1)"));
        CHECK(above.target == IndexPair{0, 5});
        CHECK(above.cofactor_exponent == 0);

        NormIndexResult at = norm_image_index({0, 1}, fierce(2, "(0,1)"));
        CHECK(at.target == IndexPair{0, 2});
        CHECK(at.cofactor_exponent == 1);

        CHECK_THROWS_AS(norm_image_index({0, 1}, ExtStep{StepKind::FierceDegreeP, 2, std::nullopt}), DomainError);
        CHECK_THROWS_AS(norm_image_index({0, 1}, ExtStep{StepKind::FierceDegreeP, 2, ix("i:1")}), DomainError);
        CHECK_THROWS_AS(norm_image_index({0, 0}, fierce(2, "(0,1)")), DomainError);
    }

    TEST_CASE("towers") {
        NormIndexResult empty = tower_norm_index({1, 1}, {});
        CHECK(empty.target == IndexPair{1, 1});
        CHECK(empty.cofactor_exponent == 0);

        NormIndexResult two = tower_norm_index({0, 1}, {fierce(2, "(0,1)"), fierce(2, "(0,3)")});
        CHECK(two.target == IndexPair{0, 4});
        CHECK(two.cofactor_exponent == 2);
        CHECK(two.phi_check);

        NormIndexResult high = tower_norm_index({0, 10}, {fierce(2, "(0,1)"), fierce(2, "(0,3)")});
        CHECK(high.target == IndexPair{0, 14});
        CHECK(high.cofactor_exponent == 0);

        CHECK_THROWS_AS(tower_norm_index({0, 1}, {fierce(2, "(0,1)"), fierce(3, "(0,1)")}), DomainError);
    }

    TEST_CASE("fierce branches meet at h") {
        for (std::int64_t p : {2, 3, 5}) {
            const IndexPair h{Rational(1, 3), 2};
            CHECK(norm_image_index(h, ExtStep{StepKind::FierceDegreeP, p, h}).target ==
                  shift_index(h, h * Rational(p - 1)));
        }
    }

    TEST_CASE("step parsing") {
        auto steps = parse_steps("fierce:p=2,h=(0,1); constant:p=2 ;unramified:p=3");
        REQUIRE(steps.size() == 3);
        CHECK(steps[0] == fierce(2, "(0,1)"));
        CHECK(steps[1].kind == StepKind::ConstantTotallyRamified);
        CHECK(steps[2].p == 3);
        CHECK(to_string(steps[0]) == "fierce:p=2,h=(0,1)");
        CHECK_THROWS_AS(parse_steps("fierce:p=2"), DomainError);
        CHECK_THROWS_AS(parse_steps("wild:p=2"), ParseError);
        CHECK_THROWS_AS(parse_steps("constant:p=4"), DomainError);
        CHECK_THROWS_AS(parse_steps("constant:q=2"), ParseError);
    }

    TEST_CASE("filtration descriptors") {
        CHECK(FilDescriptor::minus1() < FilDescriptor::zero());
        CHECK(FilDescriptor::pair({1, 2}) < FilDescriptor::pair({0, 3}));
        CHECK(FilDescriptor::c_i(5) < FilDescriptor::pair({0, 1}));
        CHECK(FilDescriptor::c_i(500) < FilDescriptor::t_k());
        CHECK(FilDescriptor::t_k() < FilDescriptor::i_slice(Rational(1, 100)));
        CHECK(FilDescriptor::i_slice(2) < FilDescriptor::pair({-9, 2}));
        CHECK(FilDescriptor::pair({-9, 2}) < FilDescriptor::pair({1, 2}));
        CHECK(to_string(FilDescriptor::pair({1, 2})) == "fil_(1,2)");
        CHECK_THROWS_AS(FilDescriptor::c_i(0), DomainError);

        std::vector<FilDescriptor> ds{FilDescriptor::minus1(), FilDescriptor::zero(), FilDescriptor::c_i(3),
                                      FilDescriptor::i_slice(2), FilDescriptor::pair({5, 2}), FilDescriptor::pair({0, 3})};
        for (const auto& a : ds)
            for (const auto& b : ds) CHECK((a < b) == (*a.index() < *b.index()));
    }
}
