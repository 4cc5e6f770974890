#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ramify {

constexpr std::size_t kMaxGroupOrder = 1024;

using Coordinates = std::vector<std::int64_t>;

/// Subset of a finite abelian group, stored as a membership bitset over element ids.
struct Subgroup {
    std::bitset<kMaxGroupOrder> members;
    std::size_t order = 0;

    bool contains(std::size_t element) const { return members.test(element); }
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

struct SubgroupHash {
    std::size_t operator()(const Subgroup& s) const { return std::hash<std::bitset<kMaxGroupOrder>>{}(s.members); }
};

/// Finite abelian p-group with explicitly enumerated elements.
///
/// The group is Z/p^{a_1} x ... x Z/p^{a_k}, optionally divided by the
/// subgroup generated by `modulo` (given in product coordinates). Element
/// ids run over 0..order()-1; for a quotient, each id is a coset and its
/// representative is the smallest product element in it.
class FiniteAbelianGroup {
public:
    /// factors are the cyclic orders p^{a_i}; throws DomainError unless all are powers of one prime
    /// and the product is at most kMaxGroupOrder.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors, std::vector<Coordinates> modulo = {});

    std::int64_t p() const { return p_; }
    std::size_t order() const { return order_; }
    /// Cyclic factors of the ambient product.
    const std::vector<std::int64_t>& factors() const { return factors_; }
    const std::vector<Coordinates>& modulo() const { return modulo_; }
    /// Cyclic orders of this group itself (for a quotient, its isomorphism type), descending.
    const std::vector<std::int64_t>& type() const { return type_; }

    std::size_t add(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
    std::size_t neg(std::size_t a) const { return neg_[a]; }
    std::size_t multiple(std::size_t a, std::int64_t k) const;
    std::size_t element_order(std::size_t a) const;

    /// Element id of the coset containing the given product coordinates.
    std::size_t element(const Coordinates& c) const;
    /// Product coordinates of the representative of an element.
    Coordinates coordinates(std::size_t a) const;

    Subgroup trivial() const;
    Subgroup whole() const;
    Subgroup closure(const std::vector<std::size_t>& generators) const;
    /// A small generating set (greedy).
    std::vector<std::size_t> generators(const Subgroup& s) const;
    /// Checks closure under addition and negation; nonempty.
    bool is_subgroup(const Subgroup& s) const;
    /// { p^k x : x in s }.
    Subgroup p_power_multiple(const Subgroup& s, int k) const;

    /// Every subgroup, by breadth-first extension through index-p overgroups.
    std::vector<Subgroup> all_subgroups() const;

    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_ && modulo_ == o.modulo_; }

private:
    std::size_t product_index(const Coordinates& c) const;
    Coordinates product_coordinates(std::size_t idx) const;

    std::int64_t p_ = 0;
    std::vector<std::int64_t> factors_;
    std::vector<Coordinates> modulo_;
    std::vector<std::int64_t> type_;
    std::size_t order_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::size_t> rep_;            // element id -> product index of representative
    std::vector<std::uint16_t> coset_of_;     // product index -> element id
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// a + b inside the group.
Subgroup subgroup_sum(const FiniteAbelianGroup& g, const Subgroup& a, const Subgroup& b);
bool is_contained(const Subgroup& a, const Subgroup& b);

/// Quotient of g by h: the group g/h (as a FiniteAbelianGroup over the same
/// ambient product) and the projection from g's element ids to its ids.
struct Quotient {
    FiniteAbelianGroup group;
    std::vector<std::size_t> projection;
};
Quotient quotient(const FiniteAbelianGroup& g, const Subgroup& h);
/// Image of a subgroup of g in the quotient.
Subgroup project(const Quotient& q, const Subgroup& s);

/// Parses "G", "1", "pG", "p^kG", or "<(a,b,..),(c,d,..)>" (generators in product coordinates).
Subgroup parse_subgroup(std::string_view text, const FiniteAbelianGroup& g);
/// Parses "p^2,p", "4,2", "p^3" into cyclic orders.
std::vector<std::int64_t> parse_cyclic_factors(std::string_view text, std::int64_t p);

}  // namespace ramify
