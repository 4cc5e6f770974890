#include <doctest.h>

#include <sstream>

#include "ramify/cli.hpp"
#include "ramify/element_parser.hpp"
#include "ramify/errors.hpp"
#include "ramify/json_io.hpp"
#include "support.hpp"

using namespace ramify;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename F>
Run run(F&& f) {
    std::ostringstream out, err;
    int code = f(out, err);
    return {code, out.str(), err.str()};
}

RamIndex2 ix(const char* text) { return parse_index(text); }

}  // namespace

TEST_SUITE("json-cli") {
    TEST_CASE("extension reports round trip") {
        testing::Rng rng(41);
        for (int k = 0; k < 40; ++k) {
            auto field = PrimeField::make(k % 2 ? 3 : 2);
            ExtensionReport r = analyze_extension(testing::random_element(rng, field, 4, -6, 2, -3, 3));
            CHECK(parse_extension_report(Json::parse(render(r).dump())) == r);
        }
        Json j = render(analyze_extension(parse_element("pi^-2*t", PrimeField::make(2))));
        CHECK(j["kind"] == "Fierce");
        CHECK(j["break_A"] == "i:1");
        CHECK(j["break_A2"] == "(-1/2,1)");
        CHECK(j["certified"] == true);
    }

    TEST_CASE("Herbrand functions and filtered groups round trip") {
        testing::Rng rng(43);
        for (int k = 0; k < 20; ++k) {
            FiniteAbelianGroup g = testing::random_group(rng, k % 3 ? 2 : 3, 64, 3);
            auto subgroups = g.all_subgroups();
            FilteredGroup fg = testing::random_filtration(rng, g, subgroups, k % 2 == 0);
            HerbrandFn phi = build_phi(fg);
            CHECK(parse_herbrand_fn(Json::parse(render(phi).dump())) == phi);
            CHECK(parse_herbrand_fn(render(phi.inverse())) == phi.inverse());
            CHECK(parse_filtered_group(render(fg)) == fg);
            FilteredGroup up = lower_to_upper(fg);
            CHECK(parse_filtered_group(render(up)) == up);
            FilteredGroup sub = subgroup_filtration(fg, subgroups[subgroups.size() / 2]);
            CHECK(parse_filtered_group(render(sub)) == sub);
        }
        Json j = render(build_phi(FilteredGroup(FiniteAbelianGroup({2}), {{ix("i:1"), FiniteAbelianGroup({2}).whole()}})));
        REQUIRE(j["i_branch"].size() == 2);
        CHECK(j["i_branch"][0]["from"] == "0");
        CHECK(j["i_branch"][0]["to"] == "i:1");
        CHECK(j["i_branch"][0]["slope"] == "2");
        CHECK(j["i_branch"][1]["to"] == "inf");
    }

    TEST_CASE("norm index results round trip") {
        NormIndexResult r = tower_norm_index({0, 1}, parse_steps("fierce:p=2,h=(0,1);constant:p=2;fierce:p=2,h=(1/2,3)"));
        Json j = render(r);
        CHECK(parse_norm_index_result(Json::parse(j.dump())) == r);
        CHECK(j["index_exponent"] == 2);
        CHECK(j["steps"][1]["jump"].is_null());
        CHECK_THROWS_AS(parse_norm_index_result(Json{{"alpha", "(0,1)"}}), ParseError);
    }

    TEST_CASE("analyze command") {
        cli::RunConfig config;
        Run fierce = run([&](auto& o, auto& e) { return cli::cmd_analyze({"pi^-2 * t"}, config, o, e); });
        CHECK(fierce.code == 0);
        CHECK(fierce.out.find("Fierce") != std::string::npos);
        CHECK(fierce.out.find("i:1\n") != std::string::npos);
        CHECK(fierce.err.empty());

        config.json = true;
        Run quarter = run([&](auto& o, auto& e) { return cli::cmd_analyze({"pi^-1 * t^2"}, config, o, e); });
        CHECK(parse_extension_report(Json::parse(quarter.out)).break_A == RamIndex::i(Rational(1, 4)));

        Run mixed = run([&](auto& o, auto& e) { return cli::cmd_analyze({"pi^-1 + pi^-2*t"}, config, o, e); });
        CHECK(mixed.code == 2);
        Run bad = run([&](auto& o, auto& e) { return cli::cmd_analyze({"pi^"}, config, o, e); });
        CHECK(bad.code == 1);
        CHECK(bad.err.find("parse error") != std::string::npos);

        config.p = 4;
        CHECK(run([&](auto& o, auto& e) { return cli::cmd_analyze({"t"}, config, o, e); }).code == 1);
        config.p = 3;
        config.adjunction_cap = 1;
        Run capped = run([&](auto& o, auto& e) { return cli::cmd_analyze({"pi^-1*t^9"}, config, o, e); });
        CHECK(capped.code == 1);
        CHECK(capped.err.find("adjunction cap") != std::string::npos);
    }

    TEST_CASE("batch analysis keeps input order") {
        cli::RunConfig config;
        config.json = true;
        config.threads = 4;
        std::ostringstream text;
        std::vector<std::string> inputs;
        for (int i = 1; i <= 30; ++i) inputs.push_back("pi^-" + std::to_string(i) + "*t");
        for (const auto& s : inputs) text << s << "\n# comment\n\n";
        std::istringstream in(text.str());
        Run batch = run([&](auto& o, auto& e) { return cli::cmd_analyze_batch(in, config, o, e); });
        CHECK(batch.code == 0);
        std::istringstream lines(batch.out);
        std::string line;
        std::size_t n = 0;
        for (; std::getline(lines, line); ++n) {
            Json j = Json::parse(line);
            REQUIRE(n < inputs.size());
            CHECK(j["input"] == inputs[n]);
            CHECK(parse_extension_report(j) ==
                  analyze_extension(parse_element(inputs[n], PrimeField::make(2))));
        }
        CHECK(n == inputs.size());
    }

    TEST_CASE("herbrand, tower and group commands") {
        cli::RunConfig config;
        Run h = run([&](auto& o, auto& e) { return cli::cmd_herbrand("i:1,order=2", config, o, e); });
        CHECK(h.code == 0);
        CHECK(h.out.find("(0, i:1)  slope 2") != std::string::npos);
        CHECK(h.out.find("(i:1, inf)  slope 1") != std::string::npos);

        config.json = true;
        Run hj = run([&](auto& o, auto& e) { return cli::cmd_herbrand("i:1,order=4;i:3,order=2", config, o, e); });
        Json phi = Json::parse(hj.out)["phi"];
        CHECK(parse_herbrand_fn(phi).eval(ix("i:3")) == ix("i:8"));
        CHECK(run([&](auto& o, auto& e) { return cli::cmd_herbrand("i:1", config, o, e); }).code == 1);

        Run t = run([&](auto& o, auto& e) { return cli::cmd_tower("fierce:p=2,h=(0,1)", "(0,1)", config, o, e); });
        CHECK(t.code == 0);
        NormIndexResult r = parse_norm_index_result(Json::parse(t.out));
        CHECK(r.target == IndexPair{0, 2});
        CHECK(r.cofactor_exponent == 1);

        config.json = false;
        Run g = run([&](auto& o, auto& e) {
            return cli::cmd_group("p^2", "i:1=G;i:3=pG", "pG", false, config, o, e);
        });
        CHECK(g.code == 0);
        CHECK(g.out.find("check PASS") != std::string::npos);
        Run gu = run([&](auto& o, auto& e) { return cli::cmd_group("p^2", "i:1=G;i:3=pG", "pG", true, config, o, e); });
        CHECK(gu.out.find("upper jumps of G/H: i:1[2]") != std::string::npos);
        CHECK(run([&](auto& o, auto& e) { return cli::cmd_group("p^2", "i:1=pG", "G", false, config, o, e); }).code == 1);
    }
}
