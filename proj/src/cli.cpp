#include "ramify/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <istream>
#include <ostream>
#include <thread>

#include "ramify/element_parser.hpp"
#include "ramify/errors.hpp"
#include "ramify/filtered_group.hpp"
#include "ramify/json_io.hpp"
#include "ramify/norm_filtration.hpp"
#include "ramify/prime_field.hpp"

namespace ramify::cli {

namespace {

std::string error_label(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse error";
    if (dynamic_cast<const PrecisionExhausted*>(&e)) return "precision exhausted";
    if (dynamic_cast<const DomainError*>(&e)) return "domain error";
    if (dynamic_cast<const DivisionByZero*>(&e)) return "division by zero";
    if (dynamic_cast<const ConsistencyError*>(&e)) return "internal consistency failure";
    return "error";
}

void report_error(std::ostream& err, const std::string& context, const std::exception& e) {
    err << "ramify: " << error_label(e);
    if (!context.empty()) err << " in '" << context << "'";
    err << ": " << e.what() << '\n';
}

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        std::string part = trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (!part.empty()) parts.push_back(part);
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

struct Outcome {
    std::string input;
    std::optional<ExtensionReport> report;
    std::string error;
};

Outcome analyze_one(const std::string& input, const FieldPtr& field, const ReductionConfig& rc) {
    Outcome o{input, std::nullopt, {}};
    try {
        o.report = analyze_extension(parse_element(input, field), rc);
    } catch (const Error& e) {
        o.error = error_label(e) + ": " + e.what();
    }
    return o;
}

int emit(const std::vector<Outcome>& outcomes, const RunConfig& config, std::ostream& out, std::ostream& err) {
    int code = 0;
    for (const auto& o : outcomes) {
        if (!o.report) {
            err << "ramify: " << o.error << " (input '" << o.input << "')\n";
            if (config.json) out << Json{{"input", o.input}, {"error", o.error}}.dump() << '\n';
            code = 1;
            continue;
        }
        const ExtensionReport& r = *o.report;
        if (!r.certified && code == 0) code = 2;
        if (config.json) {
            Json j{{"input", o.input}};
            j.update(render(r));
            out << j.dump() << '\n';
            continue;
        }
        out << std::left << std::setw(12) << "input" << o.input << '\n'
            << std::setw(12) << "kind" << to_string(r.kind) << '\n'
            << std::setw(12) << "break_A" << to_string(r.break_A) << '\n'
            << std::setw(12) << "break_A2" << to_string(r.break_A2) << '\n'
            << std::setw(12) << "adjoined" << "pi^(1/p^" << r.adjoined_root_exponent << ")\n"
            << std::setw(12) << "certified" << (r.certified ? "yes" : "no") << '\n'
            << "trace\n";
        for (std::size_t k = 0; k < r.trace.size(); ++k) out << "  " << k + 1 << ". " << r.trace[k] << '\n';
        if (&o != &outcomes.back()) out << '\n';
    }
    return code;
}

int checked(std::ostream& err, const std::string& context, auto&& body) {
    try {
        return body();
    } catch (const Error& e) {
        report_error(err, context, e);
        return 1;
    }
}

void print_segments(std::ostream& out, const std::string& name, const HerbrandFn& fn) {
    out << name << " (" << to_string(fn.mode()) << ")\n";
    const Json j = render(fn);
    for (const char* branch : {"c_branch", "i_branch"}) {
        out << "  " << (branch[0] == 'c' ? "c" : "i") << "-branch\n";
        for (const auto& seg : j.at(branch)) {
            std::string offset = !seg.at("offset").is_array() ? seg.at("offset").get<std::string>()
                                 : fn.mode() == HerbrandMode::A ? seg.at("offset")[1].get<std::string>()
                                 : "(" + seg.at("offset")[0].get<std::string>() + "," +
                                           seg.at("offset")[1].get<std::string>() + ")";
            out << "    (" << seg.at("from").get<std::string>() << ", " << seg.at("to").get<std::string>()
                << ")  slope " << seg.at("slope").get<std::string>() << "  offset " << offset << '\n';
        }
    }
}

FilteredGroup filtration_from_orders(const std::string& text) {
    std::vector<std::pair<RamIndex2, std::int64_t>> parsed;
    for (const auto& part : split(text, ';')) {
        auto comma = part.rfind(',');
        if (comma == std::string::npos || trim(part.substr(comma + 1)).rfind("order=", 0) != 0)
            throw ParseError("expected 'index,order=n' in '" + part + "'");
        Rational order = parse_rational(trim(part.substr(comma + 1)).substr(6));
        if (order.denominator() != 1 || order < 2) throw ParseError("order must be an integer >= 2 in '" + part + "'");
        parsed.emplace_back(parse_index(trim(part.substr(0, comma))), order.numerator());
    }
    if (parsed.empty()) throw ParseError("no jumps given");
    const std::int64_t n = parsed.front().second;
    FiniteAbelianGroup g({n});
    std::vector<FilterJump> jumps;
    for (const auto& [index, order] : parsed) {
        if (n % order != 0) throw DomainError("jump orders must divide the first order");
        jumps.push_back({index, g.closure({g.element({n / order})})});
    }
    return FilteredGroup(std::move(g), std::move(jumps));
}

}  // namespace

void RunConfig::validate() const {
    if (!is_prime(p)) throw DomainError("p must be prime");
    if (f < 1) throw DomainError("f must be positive");
    if (precision_t <= 0 || precision_pi <= 0) throw DomainError("precision caps must be positive");
    if (adjunction_cap < 1) throw DomainError("the adjunction cap must be positive");
}

ReductionConfig RunConfig::reduction() const { return {PrecisionCaps{precision_t, precision_pi}, adjunction_cap}; }

int cmd_analyze(const std::vector<std::string>& inputs, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return checked(err, "", [&] {
        config.validate();
        auto field = PrimeField::make(config.p, config.f);
        std::vector<Outcome> outcomes;
        for (const auto& input : inputs) outcomes.push_back(analyze_one(input, field, config.reduction()));
        return emit(outcomes, config, out, err);
    });
}

int cmd_analyze_batch(std::istream& in, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return checked(err, "", [&] {
        config.validate();
        std::vector<std::string> inputs;
        for (std::string line; std::getline(in, line);) {
            std::string s = trim(line);
            if (!s.empty() && s[0] != '#') inputs.push_back(s);
        }
        auto field = PrimeField::make(config.p, config.f);
        const ReductionConfig rc = config.reduction();
        std::vector<Outcome> outcomes(inputs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k = next++; k < inputs.size(); k = next++) outcomes[k] = analyze_one(inputs[k], field, rc);
        };
        unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
        n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(inputs.size(), 1)));
        std::vector<std::jthread> pool;
        for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
        worker();
        pool.clear();
        return emit(outcomes, config, out, err);
    });
}

int cmd_herbrand(const std::string& jumps, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return checked(err, jumps, [&] {
        FilteredGroup fg = filtration_from_orders(jumps);
        HerbrandFn phi = build_phi(fg);
        HerbrandFn psi = phi.inverse();
        if (config.json) {
            out << Json{{"phi", render(phi)}, {"psi", render(psi)}}.dump() << '\n';
            return 0;
        }
        print_segments(out, "Phi", phi);
        print_segments(out, "Psi", psi);
        out << "samples\n";
        for (const auto& jump : fg.jumps()) {
            RamIndex2 up = phi.eval(jump.index);
            out << "  Phi(" << to_string(jump.index) << ") = " << to_string(up) << "   Psi(" << to_string(up)
                << ") = " << to_string(psi.eval(up)) << '\n';
        }
        return 0;
    });
}

int cmd_tower(const std::string& steps, const std::string& alpha, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
    return checked(err, steps, [&] {
        const IndexPair a = parse_pair(alpha);
        const std::vector<ExtStep> parsed = parse_steps(steps);
        NormIndexResult r = tower_norm_index(a, parsed);
        if (config.json) {
            out << render(r).dump() << '\n';
            return 0;
        }
        out << "alpha  " << to_string(a) << '\n';
        IndexPair cur = a;
        for (const auto& step : parsed) {
            NormIndexResult one = norm_image_index(cur, step);
            out << "  N[" << to_string(step) << "]: " << to_string(cur) << " -> " << to_string(one.target)
                << "  index p^" << one.cofactor_exponent << '\n';
            cur = one.target;
        }
        const std::int64_t p = parsed.empty() ? config.p : parsed.front().p;
        out << "target " << to_string(r.target) << ", index " << p << "^" << r.cofactor_exponent << '\n'
            << "Phi_2 cross-check " << (r.phi_check ? "PASS" : "FAIL") << '\n';
        return r.phi_check ? 0 : 3;
    });
}

int cmd_group(const std::string& cyclic, const std::string& jumps, const std::string& subgroup, bool upper,
              const RunConfig& config, std::ostream& out, std::ostream& err) {
    return checked(err, jumps, [&] {
        if (!is_prime(config.p)) throw DomainError("p must be prime");
        FiniteAbelianGroup g(parse_cyclic_factors(cyclic, config.p));
        std::vector<FilterJump> parsed;
        for (const auto& part : split(jumps, ';')) {
            auto eq = part.find('=');
            if (eq == std::string::npos) throw ParseError("expected 'index=subgroup' in '" + part + "'");
            parsed.push_back({parse_index(trim(part.substr(0, eq))), parse_subgroup(trim(part.substr(eq + 1)), g)});
        }
        const Subgroup h = parse_subgroup(subgroup, g);
        FilteredGroup fg(g, std::move(parsed), upper ? Numbering::Upper : Numbering::Lower);

        FilteredGroup up = upper ? fg : lower_to_upper(fg);
        FilteredGroup q = quotient_upper(up, h);
        bool pass = true;
        bool herbrand = true;
        if (!upper) {
            herbrand = herbrand_quotient_check(fg, h);
            FilteredGroup sub = subgroup_filtration(fg, h);
            for (const auto& jump : fg.jumps()) pass = pass && sub.at(jump.index) == intersect(h, fg.at(jump.index));
        }
        const Quotient qq = quotient(g, h);
        for (const auto& jump : up.jumps()) {
            pass = pass && q.at(jump.index) == project(qq, up.at(jump.index));
        }
        pass = pass && herbrand;

        if (config.json) {
            out << Json{{"filtration", render(fg)}, {"quotient_upper", render(q)}, {"check", pass ? "PASS" : "FAIL"}}.dump()
                << '\n';
            return pass ? 0 : 3;
        }
        out << "G = " << cyclic << " (order " << g.order() << "), H of order " << h.order << '\n'
            << (upper ? "upper" : "lower") << " jumps:";
        for (const auto& jump : fg.jumps()) out << ' ' << to_string(jump.index) << "[" << jump.subgroup.order << "]";
        out << "\nupper jumps of G/H:";
        for (const auto& jump : q.jumps()) out << ' ' << to_string(jump.index) << "[" << jump.subgroup.order << "]";
        if (q.jumps().empty()) out << " none";
        out << '\n';
        if (!upper) out << "Psi/Phi quotient compatibility " << (herbrand ? "PASS" : "FAIL") << '\n';
        out << "(G/H)^a = G^a H/H check " << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? 0 : 3;
    });
}

}  // namespace ramify::cli
