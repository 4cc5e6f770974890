#include <doctest.h>

#include "ramify/element_parser.hpp"
#include "ramify/errors.hpp"
#include "ramify/norm_oracle.hpp"
#include "support.hpp"

using namespace ramify;

namespace {

TwoDimElement el(const char* text, std::int64_t p, int f = 1) { return parse_element(text, PrimeField::make(p, f)); }

}  // namespace

TEST_SUITE("artin-schreier") {
    TEST_CASE("reduction examples") {
        ASNormalForm form = reduce_representative(el("pi^-2", 2));
        CHECK(form.kind == ExtensionKind::Constant);
        CHECK(form.a_reduced == el("pi^-1", 2));
        CHECK(form.x_recorded == el("pi^-1", 2));

        for (std::int64_t p : {2, 3, 5}) {
            auto field = PrimeField::make(p);
            TwoDimElement a = TwoDimElement::monomial(field, 1, 0, -7);
            ASNormalForm constant = reduce_representative(a);
            CHECK(constant.kind == ExtensionKind::Constant);
            CHECK(constant.a_reduced == a);
            CHECK(constant.x_recorded.is_exact_zero());

            ASNormalForm adjoined = reduce_representative(TwoDimElement::monomial(field, 1, p, -7));
            CHECK(adjoined.kind == ExtensionKind::Fierce);
            CHECK(adjoined.adjoined_pi_root_exponent == 1);
            CHECK(adjoined.a_reduced.pi_denominator() == p);
            CHECK_FALSE(pth_root_residue(residue(*adjoined.fierce_unit)).has_value());
        }
    }

    TEST_CASE("classification examples") {
        CHECK(classify_extension(el("pi^-1", 2)) == ExtensionKind::Constant);
        const TwoDimElement x = el("pi^-1*t", 3);
        CHECK(classify_extension(x.artin_schreier()) == ExtensionKind::Trivial);
        CHECK(classify_extension(el("t^-1", 3)) == ExtensionKind::Unramified);
        CHECK(classify_extension(el("1", 2)) == ExtensionKind::Unramified);
        CHECK(classify_extension(el("1", 3)) == ExtensionKind::Unramified);
        CHECK(classify_extension(el("1", 2, 2)) == ExtensionKind::Trivial);
        CHECK(classify_extension(el("g", 2, 2)) == ExtensionKind::Unramified);
        for (std::int64_t p : {2, 3}) {
            auto field = PrimeField::make(p, 2);
            for (Fq c = 1; c < field->q(); ++c)
                CHECK((classify_extension(TwoDimElement::monomial(field, c, 0, 0)) == ExtensionKind::Unramified) ==
                      (field->trace(c) != 0));
        }
    }

    TEST_CASE("a lone t is in the image of x^p - x") {
        // x = -(t + t^p + t^p^2 + ...) converges in F_q[[t]] and x^p - x = t.
        for (std::int64_t p : {2, 3}) {
            auto field = PrimeField::make(p);
            TwoDimElement x = TwoDimElement::zero(field);
            std::int64_t e = 1;
            for (int k = 0; k < 4; ++k, e *= p) x -= TwoDimElement::monomial(field, 1, e, 0);
            CHECK(x.artin_schreier() - TwoDimElement::t(field) == -TwoDimElement::monomial(field, 1, e, 0));
            CHECK(analyze_extension(TwoDimElement::t(field)).kind == ExtensionKind::Trivial);
        }
    }

    TEST_CASE("breaks of the example families") {
        for (std::int64_t p : {2, 3, 5}) {
            auto field = PrimeField::make(p);
            for (std::int64_t i : {1, 2, 4, 7, 11}) {
                if (i % p == 0) continue;
                const Rational r(i);
                CHECK(break_A(TwoDimElement::monomial(field, 1, 0, -i)) == RamIndex::c(r));
                CHECK(break_A(TwoDimElement::monomial(field, 1, 1, -p * i)) == RamIndex::i(r));
                CHECK(break_A(TwoDimElement::monomial(field, 1, 1, -i)) == RamIndex::i(r / p));
                CHECK(break_A(TwoDimElement::monomial(field, 1, p, -i)) == RamIndex::i(r / (p * p)));
            }
            CHECK(break_A2(TwoDimElement::monomial(field, 1, 1, -p)) == RamIndex2::pair(Rational(-1, p), 1));
            CHECK(break_A2(TwoDimElement::monomial(field, 1, 1, -1)) ==
                  RamIndex2::pair(Rational(-1, p), Rational(1, p)));
            CHECK_THROWS_AS(break_A2(TwoDimElement::monomial(field, 1, 0, -1)), DomainError);
        }
        CHECK(analyze_extension(el("t^-2", 2)).break_A == RamIndex::minus_one());
    }

    TEST_CASE("mixed representatives report the deeper break uncertified") {
        ExtensionReport r = analyze_extension(el("pi^-1 + pi^-2*t", 2));
        CHECK(r.kind == ExtensionKind::Mixed);
        CHECK_FALSE(r.certified);
        CHECK(r.break_A == RamIndex::i(1));
        ExtensionReport deep_constant = analyze_extension(el("pi^-5 + pi^-2*t", 2));
        CHECK(deep_constant.kind == ExtensionKind::Mixed);
        CHECK(deep_constant.break_A == RamIndex::i(1));
    }

    TEST_CASE("norm oracle examples") {
        const TwoDimElement a = el("pi^-2*t", 2);
        Polynomial f{TwoDimElement::zero(a.field()), el("pi", 2)};
        CHECK(oracle_break_via_norm(a, f) == ValuePair{0, 1});
        CHECK(resultant(artin_schreier_polynomial(a), shift_difference(f)) == el("pi^2", 2));
        CHECK_THROWS_AS(oracle_break_via_norm(a, {el("t", 2)}), DomainError);

        // Any f = s^m x + r has f(b+1) - f(b) = s^m.
        testing::Rng rng(29);
        for (int k = 0; k < 50; ++k) {
            const std::int64_t p = k % 2 ? 3 : 2;
            auto field = PrimeField::make(p);
            const TwoDimElement b = testing::random_fierce_candidate(rng, field, 8);
            ASNormalForm form = reduce_representative(b);
            if (form.kind != ExtensionKind::Fierce) continue;
            const TwoDimElement r = testing::random_element(rng, field, 3, -4, 4, -3, 3);
            CHECK(oracle_break_via_norm(b, {r, *form.fierce_scale}) == rank2_valuation(*form.fierce_scale));
            CHECK(oracle_refined_break(b, form) == analyze_extension(b).break_A2);
        }
    }

    TEST_CASE("reduction identity holds on random inputs") {
        testing::Rng rng(31);
        for (int k = 0; k < 100; ++k) {
            auto field = PrimeField::make(k % 2 ? 3 : 2);
            const TwoDimElement a = testing::random_element(rng, field, 5, -8, 3, -4, 4);
            ASNormalForm form = reduce_representative(a);
            CHECK(a - form.a_reduced == form.x_recorded.artin_schreier());
            ExtensionReport r = report_from_normal_form(form);
            CHECK(r.break_A2.forget() == r.break_A);
            if (r.kind == ExtensionKind::Constant) CHECK(r.break_A.tag() == RamIndex::Tag::C);
            if (r.kind == ExtensionKind::Fierce) CHECK(r.break_A.tag() == RamIndex::Tag::I);
        }
    }

    TEST_CASE("twisting the fierce unit by a p-th power of w-value zero") {
        testing::Rng rng(37);
        for (int k = 0; k < 40; ++k) {
            const std::int64_t p = k % 2 ? 3 : 2;
            auto field = PrimeField::make(p);
            // Negative levels only carry t-exponents prime to p, so the twist creates no constants.
            auto prime_to_p = [&] {
                std::int64_t e = 0;
                while (e % p == 0) e = testing::uniform(rng, -4, 4);
                return e;
            };
            const std::int64_t depth = testing::uniform(rng, 1, 10);
            TwoDimElement a = TwoDimElement::monomial(field, testing::nonzero_coefficient(rng, field), prime_to_p(), -depth);
            for (int j = 0; j < 3; ++j)
                a += TwoDimElement::monomial(field, testing::nonzero_coefficient(rng, field), prime_to_p(),
                                             testing::uniform(rng, -depth, -1));
            const ExtensionReport before = analyze_extension(a);
            if (before.kind != ExtensionKind::Fierce) continue;
            const TwoDimElement y = TwoDimElement::one(field) + testing::random_element(rng, field, 2, 0, 0, 1, 3) +
                                    testing::random_element(rng, field, 2, 1, 3, -3, 3);
            const ExtensionReport after = analyze_extension(a * y.frobenius());
            CHECK(after.kind == before.kind);
            CHECK(after.break_A == before.break_A);
            CHECK(after.break_A2 == before.break_A2);
        }
    }

    TEST_CASE("deeper representatives have larger breaks") {
        for (std::int64_t p : {2, 3}) {
            auto field = PrimeField::make(p);
            for (std::int64_t i = 1; i < 10; ++i)
                for (std::int64_t j = i + 1; j <= 10; ++j) {
                    if (i % p == 0 || j % p == 0) continue;
                    CHECK(RamIndex2(break_A(TwoDimElement::monomial(field, 1, 0, -i))) <
                          RamIndex2(break_A(TwoDimElement::monomial(field, 1, 0, -j))));
                    CHECK(RamIndex2(break_A(TwoDimElement::monomial(field, 1, 1, -i))) <
                          RamIndex2(break_A(TwoDimElement::monomial(field, 1, 1, -j))));
                }
        }
    }

    TEST_CASE("errors") {
        ReductionConfig no_roots;
        no_roots.adjunction_cap = 0;
        CHECK_THROWS_AS(reduce_representative(el("pi^-1*t^2", 2), no_roots), DomainError);
        auto field = PrimeField::make(2);
        TwoDimElement truncated = TwoDimElement::from_levels(
            field, 1, 1, {{-2, InnerSeries::monomial(field, 1, 2)}}, -1);
        CHECK_THROWS_AS(reduce_representative(truncated), PrecisionExhausted);
        CHECK(to_string(parse_extension_kind("Fierce")) == "Fierce");
        CHECK_THROWS_AS(parse_extension_kind("Wild"), ParseError);
    }
}
