#pragma once

#include <optional>
#include <vector>

#include "ramify/abelian_group.hpp"
#include "ramify/herbrand_fn.hpp"
#include "ramify/index.hpp"

namespace ramify {

enum class Numbering { Lower, Upper };

struct FilterJump {
    RamIndex2 index;
    Subgroup subgroup;
};

/// Decreasing filtration of a finite abelian group by finitely many jumps.
///
/// With jumps (j_1, S_1), ..., (j_n, S_n): G_a = S_k for j_{k-1} < a <= j_k
/// (j_0 = -infinity) and G_a = 1 for a > j_n. S_1 is the whole group, the
/// S_k strictly decrease, S_n is nontrivial, and indices strictly increase.
/// The filtered group is `carrier`, a subgroup of `group` (all of it unless
/// given), so subgroup filtrations share element ids with the parent. A
/// trivial carrier has no jumps.
class FilteredGroup {
public:
    /// Validates; throws DomainError when the data is not a filtration.
    FilteredGroup(FiniteAbelianGroup group, std::vector<FilterJump> jumps, Numbering numbering = Numbering::Lower,
                  std::optional<Subgroup> carrier = std::nullopt);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<FilterJump>& jumps() const { return jumps_; }
    Numbering numbering() const { return numbering_; }
    const Subgroup& carrier() const { return carrier_; }

    /// G_a (or G^a for upper numbering).
    Subgroup at(const RamIndex2& a) const;
    bool has_pair_jumps() const;

    bool operator==(const FilteredGroup& o) const;

private:
    FiniteAbelianGroup group_;
    std::vector<FilterJump> jumps_;
    Numbering numbering_;
    Subgroup carrier_;
};

/// Phi integrating |G_t|: slope |G_{c,t}| / (|G_{c,inf}| e_LK) on the
/// c-branch, where G_{c,inf} is the group left after the last c-jump, and
/// |G_{i,t}| on the i-branch. Without c-jumps the c-branch is the identity
/// whatever e_LK is. A2 mode when some jump is a pair.
HerbrandFn build_phi(const FilteredGroup& fg, std::int64_t e_LK = 1);

/// Reindexes a lower filtration through its own Phi.
FilteredGroup lower_to_upper(const FilteredGroup& fg);
/// Lower filtration H_a = H n G_a.
FilteredGroup subgroup_filtration(const FilteredGroup& fg, const Subgroup& h);
/// Lower filtration on G/H: (G/H)_{Phi_H(a)} = G_a H / H.
FilteredGroup quotient_lower(const FilteredGroup& fg, const Subgroup& h);
/// Upper filtration on G/H: (G/H)^a = G^a H / H. fg must be upper-numbered.
FilteredGroup quotient_upper(const FilteredGroup& fg, const Subgroup& h);

/// lower_to_upper(quotient_lower(fg, h)) == quotient_upper(lower_to_upper(fg), h).
bool herbrand_quotient_check(const FilteredGroup& fg, const Subgroup& h);

std::string to_string(Numbering n);

}  // namespace ramify
