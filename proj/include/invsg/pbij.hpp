#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsg/core.hpp"

namespace invsg {

/// Largest ground set a PartialBijection can act on.
inline constexpr int kMaxGround = 8;

/// Subset of a ground set {0..n-1}, one bit per point.
using PointSet = std::uint8_t;

inline PointSet full_set(int ground)
{
    return PointSet((1u << ground) - 1u);
}

/// Injective partial map from a subset of {0..n-1} into {0..n-1}.
class PartialBijection {
public:
    explicit PartialBijection(int ground = 0);

    /// Throws InvalidInput when two pairs share a source or a target, or a
    /// point lies outside the ground set.
    static PartialBijection from_pairs(int ground, std::vector<std::pair<int, int>> const& pairs);

    /// id_U for U = `domain`.
    static PartialBijection identity(int ground, PointSet domain);
    static PartialBijection identity(int ground) { return identity(ground, full_set(ground)); }

    int ground() const { return ground_; }

    /// Image of x, or -1 when x is outside the domain.
    int operator()(int x) const { return map_[x]; }

    PointSet domain() const;
    PointSet image() const;
    PointSet image_of(PointSet u) const;
    int rank() const;
    bool is_partial_identity() const;

    std::vector<std::pair<int, int>> pairs() const;
    std::string to_string() const;

    friend auto operator<=>(PartialBijection const&, PartialBijection const&) = default;
    friend bool operator==(PartialBijection const&, PartialBijection const&) = default;

private:
    std::int8_t ground_;
    std::array<std::int8_t, kMaxGround> map_;
};

/// a·b: apply b, then a. This is the product stored in carrier tables.
PartialBijection operator*(PartialBijection const& a, PartialBijection const& b);

/// Apply f, then f1; the result is f1·f, defined on f^-1(image(f) ∩ dom(f1)).
PartialBijection compose(PartialBijection const& f, PartialBijection const& f1);

PartialBijection invert(PartialBijection const& f);

/// f <= g in the symmetric inverse monoid: f is a restriction of g.
bool restricts(PartialBijection const& f, PartialBijection const& g);

/// A finite inverse semigroup together with a faithful representation by
/// partial bijections: rep[s·t] == rep[s]*rep[t], rep[s*] == invert(rep[s]).
struct GeneratedSemigroup {
    FiniteInvSemigroup carrier;
    std::vector<PartialBijection> rep;

    std::optional<ElementId> find(PartialBijection const& f) const;
};

/// Builds the carrier of a set of partial bijections that is already closed
/// under product and inversion; the element order is the sorted order of
/// `elements`. Throws InvalidInput if the set is not closed.
GeneratedSemigroup from_closed_set(std::vector<PartialBijection> elements);

/// All partial bijections of an n-set (1 <= n <= 5). Throws LimitExceeded
/// outside that range.
GeneratedSemigroup symmetric_inverse_monoid(int n);

/// Smallest set containing `gens` closed under product and inversion.
GeneratedSemigroup closure(int ground, std::vector<PartialBijection> const& gens);

/// Every inverse subsemigroup of I_n with at most `max_order` elements, up
/// to isomorphism, in canonical form. Emission order is deterministic.
/// Requires n <= 3 and max_order <= 10.
void enumerate_inverse_subsemigroups(int n, int max_order,
                                     std::function<void(FiniteInvSemigroup const&)> const& emit);
std::vector<FiniteInvSemigroup> enumerate_inverse_subsemigroups(int n, int max_order);

/// A topology on {0..points-1}: a family of open sets containing the empty
/// set and the whole set, closed under binary union and intersection.
class FiniteTopology {
public:
    /// Throws InvalidInput ("NotATopology") on any violated axiom.
    static FiniteTopology validate(int points, std::vector<PointSet> opens);

    static FiniteTopology discrete(int points);
    static FiniteTopology indiscrete(int points);

    int points() const { return points_; }
    std::vector<PointSet> const& opens() const { return opens_; }
    bool is_open(PointSet u) const;
    std::vector<PointSet> closed_sets() const;

private:
    FiniteTopology(int points, std::vector<PointSet> opens) : points_(points), opens_(std::move(opens)) {}

    int points_;
    std::vector<PointSet> opens_;
};

/// Every topology on a set of `points` points (points <= 4), in a fixed order.
std::vector<FiniteTopology> all_topologies(int points);

/// The partial homeomorphisms between open sets of a space (|X| <= 4).
GeneratedSemigroup pseudogroup_of_space(FiniteTopology const& t);

/// i(F) = id_{X\F} from closed sets to the idempotents of the pseudogroup,
/// and j(f) = X \ dom(f) back.
struct ClosedSetAdjunction {
    std::vector<PointSet> closed;  ///< closed sets of the space
    std::vector<ElementId> i;      ///< i[k] is the idempotent for closed[k]
    std::vector<ElementId> idempotents;
    std::vector<PointSet> j;       ///< j[k] is the closed set for idempotents[k]
};

ClosedSetAdjunction closed_set_adjunction(FiniteTopology const& t, GeneratedSemigroup const& p);

/// Checks that closed sets ordered by reverse inclusion and the idempotents
/// ordered intrinsically are isomorphic through i and j: i(F) <= f iff
/// j(f) ⊆ F, f <= i(F) iff F ⊆ j(f), and i, j are mutually inverse.
/// Returns a description of the first failure, or nothing.
std::optional<std::string> verify_adjunction(FiniteTopology const& t, GeneratedSemigroup const& p,
                                             ClosedSetAdjunction const& adj);

} // namespace invsg
