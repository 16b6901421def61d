#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invsg/core.hpp"

namespace invsg {

/// Finite poset stored as a full boolean matrix.
class FinitePoset {
public:
    /// Verifies reflexivity, antisymmetry and transitivity; throws
    /// InvalidInput naming the first violated triple otherwise.
    static FinitePoset from_relation(std::size_t n, std::vector<std::uint8_t> le);

    /// The intrinsic order of a carrier.
    static FinitePoset of(FiniteInvSemigroup const& s);

    std::size_t size() const { return n_; }
    bool le(std::size_t a, std::size_t b) const { return le_[a * n_ + b] != 0; }
    bool lt(std::size_t a, std::size_t b) const { return a != b && le(a, b); }

    /// {x : x <= m}
    std::vector<std::size_t> down_set(std::size_t m) const;

private:
    FinitePoset(std::size_t n, std::vector<std::uint8_t> le) : n_(n), le_(std::move(le)) {}

    std::size_t n_ = 0;
    std::vector<std::uint8_t> le_;
};

/// The idempotents of a carrier as a sub-poset, with the embedding back
/// into the carrier (embedding[i] is the carrier id of poset element i).
struct IdempotentPoset {
    FinitePoset poset;
    std::vector<ElementId> embedding;

    std::optional<std::size_t> index_of(ElementId e) const;
};

IdempotentPoset idempotent_poset(FiniteInvSemigroup const& s);

/// Nonempty, and every pair has an upper bound inside the set.
bool is_directed(FinitePoset const& p, std::span<const std::size_t> a);

std::optional<std::size_t> sup(FinitePoset const& p, std::span<const std::size_t> a);
std::optional<std::size_t> inf(FinitePoset const& p, std::span<const std::size_t> a);

/// Largest poset on which way_below_def enumerates every subset.
inline constexpr std::size_t kDefinitionalLimit = 12;

/// Largest principal ideal whose subsets the ideal-based enumerations visit.
inline constexpr std::size_t kIdealLimit = 20;

/// x way-below y by quantifying over every directed subset with a supremum.
/// Throws LimitExceeded when p.size() > kDefinitionalLimit.
bool way_below_def(FinitePoset const& p, std::size_t x, std::size_t y);

/// Finite collapse: on a finite poset way-below coincides with <=.
bool way_below_fast(FinitePoset const& p, std::size_t x, std::size_t y);

/// Calls `f(members)` for every directed subset of `p`. A finite directed set
/// has a maximum m and lies inside the principal ideal of m, so the subsets
/// are produced ideal by ideal; `members` always holds m last. Throws
/// LimitExceeded if some ideal has more than kIdealLimit elements.
void for_each_directed_subset(FinitePoset const& p,
                              std::function<void(std::span<const std::size_t>)> const& f);

/// Calls `f(members)` for every nonempty subset of every principal ideal,
/// i.e. every nonempty subset that is bounded above, possibly more than once.
void for_each_bounded_subset(FinitePoset const& p,
                             std::function<void(std::size_t top, std::span<const std::size_t>)> const& f);

/// The full way-below matrix computed by quantification over directed
/// subsets: every subset when the poset is small enough for way_below_def,
/// the ideal-wise enumeration otherwise.
struct WayBelow {
    std::size_t n = 0;
    std::vector<std::uint8_t> rel;
    bool exhaustive_subsets = false;

    bool operator()(std::size_t x, std::size_t y) const { return rel[x * n + y] != 0; }
};

WayBelow way_below_relation(FinitePoset const& p);

std::vector<std::size_t> compacts(FinitePoset const& p);
std::vector<std::size_t> compacts(FinitePoset const& p, WayBelow const& wb);

/// For every s, {t : t << s} is directed with supremum s.
bool is_continuous(FinitePoset const& p);
bool is_continuous(FinitePoset const& p, WayBelow const& wb);

/// For every s, the compacts below s form a directed set with supremum s.
bool is_algebraic(FinitePoset const& p);
bool is_algebraic(FinitePoset const& p, WayBelow const& wb);

/// Every directed D with a sup and every e satisfy e ^ sup D == sup(e ^ D).
/// Throws InvalidInput if some pair has no meet.
bool is_meet_continuous(FinitePoset const& p);

/// a << b and c << d imply op(a,c) << op(b,d), over all 4-tuples.
bool way_below_multiplicative(FinitePoset const& p, WayBelow const& wb,
                              std::function<std::size_t(std::size_t, std::size_t)> const& op);
bool way_below_multiplicative(FinitePoset const& p,
                              std::function<std::size_t(std::size_t, std::size_t)> const& op);

/// Covering pairs (a, b): a < b with nothing strictly in between.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(FinitePoset const& p);

/// Hasse diagram in Graphviz DOT, edges pointing upwards.
std::string hasse_dot(FinitePoset const& p, std::vector<std::string> const& labels,
                      std::string const& graph_name = "hasse");

} // namespace invsg
