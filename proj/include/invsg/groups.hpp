#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsg/core.hpp"

namespace invsg {

/// A finite group by its Cayley table; element 0 is the identity.
struct FiniteGroup {
    std::string name;
    std::size_t order = 0;
    std::vector<std::uint32_t> table;  ///< row-major, table[g*order+h] = g·h
    std::vector<std::uint32_t> inverse;

    std::uint32_t mul(std::uint32_t g, std::uint32_t h) const { return table[g * order + h]; }
};

/// Largest group the coset machinery accepts.
inline constexpr std::size_t kMaxGroupOrder = 24;

/// Subset of a group, one bit per element.
using GroupSet = std::uint32_t;

/// Groups by name: C<n> (cyclic), D<n> (dihedral of order 2n, n >= 3), Q8,
/// S<n>/A<n> (n <= 4), and direct products written "AxB", e.g. "C2xC2".
/// Throws InvalidInput on unknown names or orders above kMaxGroupOrder.
FiniteGroup group_by_name(std::string const& name);

/// One representative of every isomorphism class of groups of order <= 8.
std::vector<std::string> small_group_names();

std::vector<GroupSet> subgroups(FiniteGroup const& g);

/// Every right coset Hg of every subgroup, sorted and without repeats.
std::vector<GroupSet> cosets(FiniteGroup const& g);

/// Smallest coset containing the setwise product. Throws InvalidInput
/// ("NotACoset") when an argument is not a coset.
GroupSet coset_product(FiniteGroup const& g, GroupSet c, GroupSet d);

/// The cosets of g under coset_product; element order follows cosets(g)
/// and names list the members, e.g. "{0,3}".
FiniteInvSemigroup coset_monoid(FiniteGroup const& g);

std::string format_group_set(GroupSet s, std::size_t order);

} // namespace invsg
