#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ramify/cli.hpp"
#include "ramify/errors.hpp"

namespace {

ramify::Rational cap_value(const std::string& text) { return ramify::parse_rational(text); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramification invariants of two-dimensional local fields F_q((t))((pi))"};
    app.require_subcommand(1);
    app.fallthrough();

    ramify::cli::RunConfig config;
    std::string prec_t = "40", prec_pi = "40", out_path;
    app.add_option("-p", config.p, "Characteristic")->capture_default_str();
    app.add_option("-f", config.f, "Residue degree: q = p^f")->capture_default_str();
    app.add_option("--prec-t", prec_t, "t-precision cap")->capture_default_str();
    app.add_option("--prec-pi", prec_pi, "pi-precision cap")->capture_default_str();
    app.add_option("--adjunction-cap", config.adjunction_cap, "Maximal number of adjoined p-th roots of pi")
        ->capture_default_str();
    app.add_flag("--json", config.json, "Emit JSON");
    app.add_option("--out", out_path, "Write results to a file instead of stdout");

    auto* analyze = app.add_subcommand("analyze", "Ramification break of x^p - x = a");
    std::vector<std::string> elements;
    std::string batch;
    analyze->add_option("elements", elements, "Elements such as \"pi^-2 * t\"");
    analyze->add_option("--batch", batch, "File with one element per line ('-' for stdin)");
    analyze->add_option("--threads", config.threads, "Batch worker threads (0: all cores)");

    auto* herbrand = app.add_subcommand("herbrand", "Phi and Psi of a filtration given by jump orders");
    std::string jump_text;
    herbrand->add_option("--jump", jump_text, "Jumps \"i:1,order=4;i:3,order=2\"")->required();

    auto* tower = app.add_subcommand("tower", "Norm index of S_alpha through a tower of degree-p steps");
    std::string steps, alpha;
    tower->add_option("--steps", steps, "Steps \"fierce:p=2,h=(0,1);constant:p=2\"")->required();
    tower->add_option("--alpha", alpha, "Pair index such as \"(0,1)\"")->required();

    auto* group = app.add_subcommand("group", "Check the quotient upper-numbering rule on a filtered group");
    std::string cyclic, jumps, quotient;
    bool upper = false;
    group->add_option("--cyclic", cyclic, "Cyclic factors \"p^2,p\"")->required();
    group->add_option("--jumps", jumps, "Filtration \"i:1=G;i:3=pG\"")->required();
    group->add_option("--quotient", quotient, "Subgroup H: G, 1, pG, p^kG or <(a,b),(c,d)>")->required();
    group->add_flag("--upper", upper, "Jumps are given in upper numbering");

    CLI11_PARSE(app, argc, argv);

    try {
        config.precision_t = cap_value(prec_t);
        config.precision_pi = cap_value(prec_pi);
    } catch (const ramify::Error& e) {
        std::cerr << "ramify: bad precision cap: " << e.what() << '\n';
        return 1;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "ramify: cannot open " << out_path << '\n';
            return 1;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (analyze->parsed()) {
        if (batch.empty() == elements.empty()) {
            std::cerr << "ramify: give either elements or --batch\n";
            return 1;
        }
        if (elements.empty()) {
            if (batch == "-") return ramify::cli::cmd_analyze_batch(std::cin, config, out, std::cerr);
            std::ifstream in(batch);
            if (!in) {
                std::cerr << "ramify: cannot open " << batch << '\n';
                return 1;
            }
            return ramify::cli::cmd_analyze_batch(in, config, out, std::cerr);
        }
        return ramify::cli::cmd_analyze(elements, config, out, std::cerr);
    }
    if (herbrand->parsed()) return ramify::cli::cmd_herbrand(jump_text, config, out, std::cerr);
    if (tower->parsed()) return ramify::cli::cmd_tower(steps, alpha, config, out, std::cerr);
    return ramify::cli::cmd_group(cyclic, jumps, quotient, upper, config, out, std::cerr);
}
