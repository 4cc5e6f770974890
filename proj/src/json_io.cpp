#include "ramify/json_io.hpp"

#include "ramify/errors.hpp"

namespace ramify {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
}

Json coordinates_json(const FiniteAbelianGroup& g, const Subgroup& s) {
    Json gens = Json::array();
    for (std::size_t x : g.generators(s)) gens.push_back(g.coordinates(x));
    return gens;
}

Subgroup subgroup_from_json(const FiniteAbelianGroup& g, const Json& gens) {
    std::vector<std::size_t> ids;
    for (const auto& c : gens) ids.push_back(g.element(c.get<Coordinates>()));
    return g.closure(ids);
}

}  // namespace

Json render(const ExtensionReport& r) {
    return Json{{"kind", to_string(r.kind)},
                {"break_A", to_string(r.break_A)},
                {"break_A2", to_string(r.break_A2)},
                {"adjoined_root_exponent", r.adjoined_root_exponent},
                {"certified", r.certified},
                {"trace", r.trace}};
}

ExtensionReport parse_extension_report(const Json& j) {
    return guarded("extension report", [&] {
        ExtensionReport r;
        r.kind = parse_extension_kind(j.at("kind").get<std::string>());
        r.break_A = parse_index(j.at("break_A").get<std::string>()).as_index();
        r.break_A2 = parse_index(j.at("break_A2").get<std::string>());
        r.adjoined_root_exponent = j.at("adjoined_root_exponent").get<int>();
        r.certified = j.at("certified").get<bool>();
        r.trace = j.at("trace").get<std::vector<std::string>>();
        return r;
    });
}

Json render(const ExtStep& s) {
    Json j{{"kind", to_string(s.kind)}, {"p", s.p}};
    j["jump"] = s.jump ? Json(to_string(*s.jump)) : Json(nullptr);
    return j;
}

ExtStep parse_ext_step(const Json& j) {
    return guarded("step", [&] {
        ExtStep s;
        s.kind = parse_step_kind(j.at("kind").get<std::string>());
        s.p = j.at("p").get<std::int64_t>();
        if (j.contains("jump") && !j.at("jump").is_null()) s.jump = parse_index(j.at("jump").get<std::string>());
        return s;
    });
}

Json render(const NormIndexResult& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) steps.push_back(render(s));
    return Json{{"alpha", to_string(r.alpha)},
                {"steps", steps},
                {"target", to_string(r.target)},
                {"index_exponent", r.cofactor_exponent},
                {"phi_check", r.phi_check}};
}

NormIndexResult parse_norm_index_result(const Json& j) {
    return guarded("norm index result", [&] {
        NormIndexResult r;
        r.alpha = parse_pair(j.at("alpha").get<std::string>());
        for (const auto& s : j.at("steps")) r.steps.push_back(parse_ext_step(s));
        r.target = parse_pair(j.at("target").get<std::string>());
        r.cofactor_exponent = j.at("index_exponent").get<int>();
        r.phi_check = j.at("phi_check").get<bool>();
        return r;
    });
}

Json render(const HerbrandFn& fn) {
    Json c = Json::array();
    for (std::size_t k = 0; k < fn.c_segments().size(); ++k) {
        const auto& seg = fn.c_segments()[k];
        c.push_back({{"from", k == 0 ? "0" : to_string(fn.c_breaks()[k - 1])},
                     {"to", k < fn.c_breaks().size() ? to_string(fn.c_breaks()[k]) : "inf"},
                     {"slope", to_string(seg.slope)},
                     {"offset", to_string(seg.offset)}});
    }
    Json i = Json::array();
    for (std::size_t k = 0; k < fn.i_segments().size(); ++k) {
        const auto& seg = fn.i_segments()[k];
        i.push_back({{"from", k == 0 ? "0" : to_string(fn.i_breaks()[k - 1])},
                     {"to", k < fn.i_breaks().size() ? to_string(fn.i_breaks()[k]) : "inf"},
                     {"slope", to_string(seg.slope)},
                     {"offset", Json::array({to_string(seg.offset_first), to_string(seg.offset_second)})}});
    }
    return Json{{"mode", to_string(fn.mode())}, {"c_branch", c}, {"i_branch", i}};
}

HerbrandFn parse_herbrand_fn(const Json& j) {
    return guarded("Herbrand function", [&] {
        const std::string mode_text = j.at("mode").get<std::string>();
        if (mode_text != "A" && mode_text != "A2") throw ParseError("unknown mode '" + mode_text + "'");
        const HerbrandMode mode = mode_text == "A" ? HerbrandMode::A : HerbrandMode::A2;
        std::vector<Rational> c_breaks;
        std::vector<CSegment> c_segments;
        const Json& c = j.at("c_branch");
        for (std::size_t k = 0; k < c.size(); ++k) {
            c_segments.push_back({parse_rational(c[k].at("slope").get<std::string>()),
                                  parse_rational(c[k].at("offset").get<std::string>())});
            if (k + 1 < c.size()) c_breaks.push_back(parse_rational(c[k].at("to").get<std::string>()));
        }
        std::vector<RamIndex2> i_breaks;
        std::vector<ISegment> i_segments;
        const Json& i = j.at("i_branch");
        for (std::size_t k = 0; k < i.size(); ++k) {
            const Json& off = i[k].at("offset");
            i_segments.push_back({parse_rational(i[k].at("slope").get<std::string>()),
                                  parse_rational(off.at(0).get<std::string>()),
                                  parse_rational(off.at(1).get<std::string>())});
            if (k + 1 < i.size()) i_breaks.push_back(parse_index(i[k].at("to").get<std::string>()));
        }
        return HerbrandFn::from_segments(mode, std::move(c_breaks), std::move(c_segments), std::move(i_breaks),
                                         std::move(i_segments));
    });
}

Json render(const FilteredGroup& fg) {
    const FiniteAbelianGroup& g = fg.group();
    Json jumps = Json::array();
    for (const auto& jump : fg.jumps())
        jumps.push_back({{"index", to_string(jump.index)}, {"generators", coordinates_json(g, jump.subgroup)}});
    Json j{{"cyclic_factors", g.factors()}, {"modulo", g.modulo()}, {"numbering", to_string(fg.numbering())}};
    if (!(fg.carrier() == g.whole())) j["carrier"] = coordinates_json(g, fg.carrier());
    j["jumps"] = jumps;
    return j;
}

FilteredGroup parse_filtered_group(const Json& j) {
    return guarded("filtered group", [&] {
        FiniteAbelianGroup g(j.at("cyclic_factors").get<std::vector<std::int64_t>>(),
                             j.value("modulo", std::vector<Coordinates>{}));
        const std::string numbering = j.value("numbering", std::string("lower"));
        if (numbering != "lower" && numbering != "upper") throw ParseError("unknown numbering '" + numbering + "'");
        std::optional<Subgroup> carrier;
        if (j.contains("carrier")) carrier = subgroup_from_json(g, j.at("carrier"));
        std::vector<FilterJump> jumps;
        for (const auto& jump : j.at("jumps"))
            jumps.push_back({parse_index(jump.at("index").get<std::string>()), subgroup_from_json(g, jump.at("generators"))});
        return FilteredGroup(std::move(g), std::move(jumps), numbering == "lower" ? Numbering::Lower : Numbering::Upper,
                             carrier);
    });
}

}  // namespace ramify
