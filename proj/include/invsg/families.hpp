#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invsg/core.hpp"
#include "invsg/rational.hpp"

namespace invsg {

/// An element of a symbolic family: a short vector of exact rationals whose
/// meaning is fixed by the family (see each family's format()).
struct Elem {
    std::vector<Rational> c;

    friend bool operator==(Elem const&, Elem const&) = default;
};

/// A chain of elements given by a rule, together with what the family
/// claims about its supremum. Members must increase under the order.
struct ChainWitness {
    enum class Kind { FiniteList, OmegaChain };

    Kind kind = Kind::OmegaChain;
    std::string label;
    std::function<Elem(std::size_t)> generator;
    std::size_t length = 0;  ///< number of members of a FiniteList

    std::optional<Elem> claimed_sup_in_sigma;
    std::optional<Elem> claimed_sup_in_s;
    std::vector<Elem> claimed_upper_bounds;

    /// Members 0..n-1 with n = min(depth, length) for lists, depth otherwise.
    std::vector<Elem> members(std::size_t depth) const;

    static ChainWitness finite(std::string label, std::vector<Elem> elems);
    static ChainWitness omega(std::string label, std::function<Elem(std::size_t)> gen);
};

/// y fails to be the sup of the compacts below it: either no compacts are
/// below y at all, or `bound` is an upper bound of them not above y.
struct NonAlgebraicWitness {
    Elem y;
    std::optional<Elem> bound;
};

/// Sampling parameters shared by every family-side check.
struct FamilyOptions {
    std::uint64_t seed = 1;
    std::size_t depth = 64;
    std::size_t budget = 10000;
};

/// FamilyOptions with `budget` replaced by $INVSG_BUDGET when set.
FamilyOptions options_from_env(FamilyOptions base = {});

/// An infinite inverse semigroup with exact oracles and the chains that
/// exercise its order. All members are pure.
class SymbolicFamily {
public:
    virtual ~SymbolicFamily() = default;

    virtual std::string name() const = 0;
    virtual std::string format(Elem const& x) const = 0;

    virtual Elem op(Elem const& x, Elem const& y) const = 0;
    virtual Elem inv(Elem const& x) const = 0;
    virtual bool le(Elem const& x, Elem const& y) const = 0;
    virtual bool is_idempotent(Elem const& x) const { return op(x, x) == x; }
    Elem sigma(Elem const& x) const { return op(inv(x), x); }
    virtual std::optional<Elem> identity() const { return std::nullopt; }

    virtual Elem sample(Rng& rng) const = 0;
    virtual Elem sample_idempotent(Rng& rng) const = 0;
    /// Elements known to matter for sup checks (bounds, extreme points).
    virtual std::vector<Elem> landmarks() const = 0;

    /// Whether the family ships way-below oracles. Families without them
    /// leave every member of this group at its default, which throws
    /// std::logic_error.
    virtual bool has_way_below() const { return true; }
    virtual bool wb(Elem const& x, Elem const& y) const;
    /// Way-below on the idempotents. Throws NotIdempotent otherwise.
    virtual bool wb_sigma(Elem const& e, Elem const& f) const;

    /// An increasing chain of elements way-below y whose sup is y.
    virtual ChainWitness approximants(Elem const& y) const;
    virtual ChainWitness sigma_approximants(Elem const& e) const;

    /// A chain of compact elements with sup y, when y has one.
    virtual std::optional<ChainWitness> compact_approximants(Elem const& y) const;
    virtual std::optional<ChainWitness> sigma_compact_approximants(Elem const& e) const;
    virtual std::optional<NonAlgebraicWitness> non_algebraic_witness() const;
    virtual std::optional<NonAlgebraicWitness> sigma_non_algebraic_witness() const;

    /// A chain whose sup is at least y and which has no member above x;
    /// present whenever x is not way-below y.
    virtual std::optional<ChainWitness> wb_refuter(Elem const& x, Elem const& y) const;
    virtual std::optional<ChainWitness> wb_sigma_refuter(Elem const& e, Elem const& f) const;

    /// Canonical increasing chains with sup y; a claimed x << y must meet
    /// every one of them above x.
    virtual std::vector<ChainWitness> chains_reaching(Elem const& y) const;

    /// Some elements s with s*s == e (all of them when there are few).
    virtual std::vector<Elem> h_class_sample(Elem const& e, Rng& rng, std::size_t count) const;

    /// Directed subsets of the idempotents with a sup among the
    /// idempotents, each with the family's claim about the sup in S.
    virtual std::vector<ChainWitness> sigma_chains() const = 0;

    /// An order-preserving retraction of S onto its idempotents, with
    /// j(s) <= s, when the family has one.
    virtual std::optional<Elem> projection(Elem const&) const { return std::nullopt; }

    /// A finite inverse subsemigroup standing in for the family when it has
    /// no way-below oracles; continuity evidence drawn from it is partial.
    virtual std::optional<FiniteInvSemigroup> finite_shadow() const { return std::nullopt; }
};

using FamilyPtr = std::shared_ptr<const SymbolicFamily>;

// Bicyclic monoid over a positive cone P.

enum class Cone { Naturals, Dyadic };

struct BicyclicElem {
    Rational a, b;

    friend bool operator==(BicyclicElem const&, BicyclicElem const&) = default;
};

BicyclicElem bicyclic_op(BicyclicElem const& x, BicyclicElem const& y);
BicyclicElem bicyclic_inv(BicyclicElem const& x);
bool bicyclic_le(BicyclicElem const& x, BicyclicElem const& y);
/// Way-below between idempotents (a,a), (b,b). Throws NotIdempotent.
bool bicyclic_wb(Cone p, BicyclicElem const& eps, BicyclicElem const& delta);

FamilyPtr make_bicyclic(Cone p);

// Rotation semigroup: the closed unit disk under z z' = min(r, r') e^{i(θ+θ')},
// angles in turns.

struct RotationElem {
    Rational r, turn;

    friend bool operator==(RotationElem const&, RotationElem const&) = default;
};

/// Canonical element; throws InvalidInput ("OutOfRange") unless r in [0,1]
/// and turn in [0,1). The angle of the origin is forced to 0.
RotationElem rotation(Rational r, Rational turn);
RotationElem rotation_op(RotationElem const& x, RotationElem const& y);
RotationElem rotation_inv(RotationElem const& x);
bool rotation_le(RotationElem const& x, RotationElem const& y);
bool rotation_wb(RotationElem const& x, RotationElem const& y);
/// Way-below on the idempotent radii in [0,1].
bool rotation_wb_sigma(Rational const& eps, Rational const& delta);

FamilyPtr make_rotation();

// [0,1] under min with an extra element ω, a square root of 1.

struct CexElem {
    bool omega = false;
    Rational v;  ///< value when !omega

    static CexElem real(Rational v) { return {false, std::move(v)}; }
    static CexElem w() { return {true, Rational(1)}; }

    friend bool operator==(CexElem const&, CexElem const&) = default;
};

CexElem cex_op(CexElem const& x, CexElem const& y);
bool cex_le(CexElem const& x, CexElem const& y);
Elem cex_encode(CexElem const& x);
CexElem cex_decode(Elem const& x);

/// The chain 1 - 2^-k of idempotents: sup 1 among the idempotents, no sup
/// in S, two incomparable upper bounds 1 and ω.
ChainWitness cex_mirror_witness();

FamilyPtr make_cex();

// Characters of a finite commutative inverse monoid into the rotation
// semigroup, under the pointwise product.

/// chi[s] is the value at element s.
using Character = std::vector<RotationElem>;

/// Throws InvalidInput ("NotACharacter") naming the first pair s,t with
/// chi(st) != chi(s) chi(t), or the identity when chi(1) != 1.
void validate_character(FiniteInvSemigroup const& s, Character const& chi);
Character character_op(FiniteInvSemigroup const& s, Character const& chi, Character const& psi);
Character trivial_character(FiniteInvSemigroup const& s);
bool character_is_idempotent(Character const& chi);

/// Requires a commutative inverse monoid; throws InvalidInput otherwise.
FamilyPtr make_characters(FiniteInvSemigroup carrier, std::string label);

Elem encode_character(Character const& chi);
Character decode_character(Elem const& x);

/// Looks up "bicyclic-nat", "bicyclic-dyadic", "rotation", "cex" and
/// "characters:<carrier-file>". Throws InvalidInput for unknown names.
FamilyPtr family_by_name(std::string const& name);

} // namespace invsg
