#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramify/artin_schreier.hpp"

namespace ramify::cli {

struct RunConfig {
    std::int64_t p = 2;
    int f = 1;
    Rational precision_t{40};
    Rational precision_pi{40};
    int adjunction_cap = 16;
    bool json = false;
    /// Worker threads for batch analysis; 0 picks the hardware count.
    unsigned threads = 0;

    /// Throws DomainError unless p is prime and every cap is positive.
    void validate() const;
    ReductionConfig reduction() const;
};

// Each command writes results to `out`, diagnostics to `err`, and returns the exit code.

/// Exit 0 when every report is certified, 2 when some is not, 1 on any error.
int cmd_analyze(const std::vector<std::string>& inputs, const RunConfig& config, std::ostream& out, std::ostream& err);
/// Reads one element per line; blank lines and lines starting with '#' are skipped.
int cmd_analyze_batch(std::istream& in, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Jumps as "i:1,order=4;i:3,order=2": |G_a| = order up to each index.
int cmd_herbrand(const std::string& jumps, const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_tower(const std::string& steps, const std::string& alpha, const RunConfig& config, std::ostream& out,
              std::ostream& err);

/// Filtration "i:1=G;i:3=pG" on the group with cyclic factors `cyclic`;
/// checks (G/H)^a = G^a H/H and H_a = H n G_a for H = `quotient`.
/// Exit 0 on PASS, 3 on FAIL, 1 on error.
int cmd_group(const std::string& cyclic, const std::string& jumps, const std::string& quotient, bool upper,
              const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ramify::cli
