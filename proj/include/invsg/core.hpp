#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invsg/errors.hpp"

namespace invsg {

/// Dense index of an element inside its parent carrier, in [0, size()).
using ElementId = std::uint32_t;

/// Sorted ids of the elements with s*s == s.
struct IdempotentSet {
    std::vector<ElementId> members;

    bool contains(ElementId e) const;
    std::size_t size() const { return members.size(); }
};

/// Why a table was rejected. `witness` holds the offending ids in the order
/// named by the kind (s,t,u for associativity; s,t1,t2 for non-unique
/// inverses; e,f for non-commuting idempotents).
class ValidationError : public InvalidInput {
public:
    enum class Kind {
        Empty,
        NotSquare,
        EntryOutOfRange,
        NotAssociative,
        NoInverse,
        NonUniqueInverse,
        IdempotentsDontCommute,
    };

    ValidationError(Kind kind, std::vector<ElementId> witness, std::string const& msg)
        : InvalidInput(msg), kind_(kind), witness_(std::move(witness)) {}

    Kind kind() const { return kind_; }
    std::vector<ElementId> const& witness() const { return witness_; }

private:
    Kind kind_;
    std::vector<ElementId> witness_;
};

std::string to_string(ValidationError::Kind kind);

/// A finite inverse semigroup given by its multiplication table.
///
/// Values are immutable once built. The intrinsic order, the idempotents and
/// the identity are derived from the table at construction time and cached;
/// nothing but the table is authoritative.
///
/// Table convention: mul(s, t) == table[s][t] == s·t.
class FiniteInvSemigroup {
public:
    /// Checks associativity, existence and uniqueness of inverses and
    /// commutation of idempotents, failing on the first counterexample.
    static FiniteInvSemigroup validate(std::vector<std::vector<ElementId>> const& table,
                                       std::vector<std::string> names = {});

    /// Same as validate() for a row-major table of size n*n.
    static FiniteInvSemigroup validate_flat(std::size_t n, std::vector<ElementId> table,
                                            std::vector<std::string> names = {});

    /// Builds a carrier without any axiom check. Only meant for exercising
    /// the property suites on deliberately broken data.
    static FiniteInvSemigroup unchecked(std::size_t n, std::vector<ElementId> table,
                                        std::vector<ElementId> inverse,
                                        std::vector<std::string> names = {});

    std::size_t size() const { return n_; }

    ElementId mul(ElementId s, ElementId t) const { return table_[std::size_t(s) * n_ + t]; }
    ElementId inverse(ElementId s) const { return inv_[s]; }
    std::optional<ElementId> identity() const { return identity_; }

    bool is_idempotent(ElementId s) const { return mul(s, s) == s; }
    IdempotentSet const& idempotents() const { return idempotents_; }

    /// Intrinsic order: s <= t iff s == t·s*·s.
    bool le(ElementId s, ElementId t) const { return le_[std::size_t(s) * n_ + t] != 0; }

    /// Source map s -> s*·s.
    ElementId source(ElementId s) const { return mul(inv_[s], s); }

    /// Least upper bound of a nonempty set under le(), if it exists.
    std::optional<ElementId> sup(std::span<const ElementId> a) const;

    /// All s with s*·s == e. Throws NotIdempotent if e is not idempotent.
    std::vector<ElementId> h_class(ElementId e) const;

    /// True iff every element above an idempotent is itself idempotent.
    bool is_reduced() const;

    bool is_commutative() const;
    bool is_group() const { return idempotents_.size() == 1; }

    std::vector<ElementId> const& flat_table() const { return table_; }
    std::vector<std::vector<ElementId>> rows() const;

    std::vector<std::string> const& names() const { return names_; }
    std::string name_of(ElementId s) const;

    friend bool operator==(FiniteInvSemigroup const& a, FiniteInvSemigroup const& b)
    {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    FiniteInvSemigroup(std::size_t n, std::vector<ElementId> table, std::vector<ElementId> inverse,
                       std::vector<std::string> names);

    std::size_t n_ = 0;
    std::vector<ElementId> table_;
    std::vector<ElementId> inv_;
    std::vector<std::uint8_t> le_;
    IdempotentSet idempotents_;
    std::optional<ElementId> identity_;
    std::vector<std::string> names_;
};

/// Relabels `s` into a canonical representative of its isomorphism class.
/// Elements are first split into classes by an iterated invariant
/// refinement; the lexicographically least table among the relabelings that
/// respect the class order is returned. Throws LimitExceeded when the
/// number of candidate relabelings exceeds `max_permutations`.
FiniteInvSemigroup canonical_form(FiniteInvSemigroup const& s,
                                  std::uint64_t max_permutations = 50'000'000);

bool isomorphic(FiniteInvSemigroup const& a, FiniteInvSemigroup const& b);

} // namespace invsg
