#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ramify/herbrand_fn.hpp"
#include "ramify/index.hpp"

namespace ramify {

enum class StepKind { Unramified, ConstantTotallyRamified, FierceDegreeP };

std::string to_string(StepKind kind);
StepKind parse_step_kind(std::string_view text);

/// One cyclic degree-p layer of a tower.
struct ExtStep {
    StepKind kind = StepKind::Unramified;
    std::int64_t p = 2;
    /// Lower ramification jump; a pair, required for fierce steps.
    std::optional<RamIndex2> jump;

    bool operator==(const ExtStep&) const = default;
};

struct NormIndexResult {
    IndexPair alpha;
    std::vector<ExtStep> steps;
    IndexPair target;
    /// The norm image has index p^cofactor_exponent in S_target.
    int cofactor_exponent = 0;
    /// Target and exponent agree with the composed Herbrand function.
    bool phi_check = false;

    bool operator==(const NormIndexResult&) const = default;
};

/// Norm of S_alpha through one step: unchanged for unramified and constant
/// steps; for a fierce step with jump h, alpha + (p-1)h when alpha > h and
/// p alpha with index p otherwise.
NormIndexResult norm_image_index(const IndexPair& alpha, const ExtStep& step);

/// Phi of one step on the pair region: identity, or slope p up to h and slope 1 after.
HerbrandFn step_phi(const ExtStep& step);

/// Folds norm_image_index over the steps in the order given (the first step
/// is the first norm applied) and checks the result against the composition
/// of the step Phis: the target must equal its value at alpha and p^exponent
/// its slope there. A mismatch raises ConsistencyError.
NormIndexResult tower_norm_index(const IndexPair& alpha, const std::vector<ExtStep>& steps);

/// Parses "fierce:p=2,h=(0,1)", "unramified:p=3", "constant:p=2"; several steps joined by ';'.
std::vector<ExtStep> parse_steps(std::string_view text);
std::string to_string(const ExtStep& step);

/// Label of a member of the filtration on K_2: fil_{-1}, fil_0, fil_{c,i},
/// T_K, fil_{i,i2} and fil_alpha for pairs. Ordered from coarsest to finest,
/// consistently with the index order; T_K sits after every fil_{c,i} and
/// before every fil_{i,i2}.
class FilDescriptor {
public:
    enum class Label { Minus1, Zero, CI, TK, ISlice, Pair };

    static FilDescriptor minus1() { return FilDescriptor(Label::Minus1); }
    static FilDescriptor zero() { return FilDescriptor(Label::Zero); }
    static FilDescriptor c_i(const Rational& i);
    static FilDescriptor t_k() { return FilDescriptor(Label::TK); }
    static FilDescriptor i_slice(const Rational& i2);
    static FilDescriptor pair(const IndexPair& alpha);

    Label label() const { return label_; }
    /// Underlying index; none for T_K.
    std::optional<RamIndex2> index() const;

    bool operator==(const FilDescriptor&) const = default;
    std::strong_ordering operator<=>(const FilDescriptor& o) const;

private:
    explicit FilDescriptor(Label label) : label_(label) {}

    Label label_;
    Rational a_{0};
    Rational b_{0};
};

FilDescriptor fil_descriptor(FilDescriptor::Label label, const Rational& i = 0, const IndexPair& alpha = {0, 1});
std::string to_string(const FilDescriptor& d);

}  // namespace ramify
