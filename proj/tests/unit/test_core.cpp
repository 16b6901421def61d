#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "invsg/errors.hpp"
#include "invsg/pbij.hpp"

using namespace invsg;

namespace {

ValidationError::Kind kind_of(std::vector<std::vector<ElementId>> const& table)
{
    try {
        FiniteInvSemigroup::validate(table);
    } catch (ValidationError const& e) {
        return e.kind();
    }
    FAIL("table unexpectedly valid");
    return ValidationError::Kind::Empty;
}

// sum_k C(n,k)^2 k!: choose domain, image, and a bijection between them.
std::size_t partial_bijection_count(int n)
{
    std::size_t total = 0;
    for (int k = 0; k <= n; ++k) {
        std::size_t c = 1, f = 1;
        for (int i = 0; i < k; ++i) {
            c = c * std::size_t(n - i) / std::size_t(i + 1);
            f *= std::size_t(i + 1);
        }
        total += c * c * f;
    }
    return total;
}

FiniteInvSemigroup relabel(FiniteInvSemigroup const& s, std::vector<ElementId> const& perm)
{
    std::size_t n = s.size();
    std::vector<std::vector<ElementId>> t(n, std::vector<ElementId>(n));
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            t[perm[a]][perm[b]] = perm[s.mul(a, b)];
    return FiniteInvSemigroup::validate(t);
}

} // namespace

TEST_SUITE("core")
{
    TEST_CASE("one-element table")
    {
        auto s = FiniteInvSemigroup::validate({{0}});
        CHECK(s.size() == 1);
        CHECK(s.identity() == ElementId(0));
        CHECK(s.is_idempotent(0));
        CHECK(s.is_reduced());
    }

    TEST_CASE("validation failures name the violated axiom")
    {
        CHECK(kind_of({}) == ValidationError::Kind::Empty);
        CHECK(kind_of({{0, 1}}) == ValidationError::Kind::NotSquare);
        CHECK(kind_of({{0, 2}, {1, 0}}) == ValidationError::Kind::EntryOutOfRange);
        // (0·0)·1 = 0 but 0·(0·1) = 1
        CHECK(kind_of({{1, 0}, {0, 0}}) == ValidationError::Kind::NotAssociative);
        // null semigroup: a·x·a = 0 for every x
        CHECK(kind_of({{0, 0}, {0, 0}}) == ValidationError::Kind::NoInverse);
        // left-zero band: every element is an inverse of every other
        CHECK(kind_of({{0, 0}, {1, 1}}) == ValidationError::Kind::NonUniqueInverse);
    }

    TEST_CASE("validation error carries a witness")
    {
        try {
            FiniteInvSemigroup::validate({{1, 0}, {0, 0}});
            FAIL("expected failure");
        } catch (ValidationError const& e) {
            CHECK(!e.witness().empty());
        }
    }

    TEST_CASE("symmetric inverse monoid sizes")
    {
        CHECK(partial_bijection_count(2) == 7);
        CHECK(partial_bijection_count(3) == 34);
        for (int n = 1; n <= 4; ++n)
            CHECK(symmetric_inverse_monoid(n).carrier.size() == partial_bijection_count(n));
    }

    TEST_CASE("intrinsic order of I_3 is restriction of maps")
    {
        auto g = symmetric_inverse_monoid(3);
        auto const& s = g.carrier;
        for (ElementId a = 0; a < s.size(); ++a)
            for (ElementId b = 0; b < s.size(); ++b)
                CHECK(s.le(a, b) == restricts(g.rep[a], g.rep[b]));
    }

    TEST_CASE("inverses in I_3 are inverse maps")
    {
        auto g = symmetric_inverse_monoid(3);
        for (ElementId a = 0; a < g.carrier.size(); ++a)
            CHECK(g.rep[g.carrier.inverse(a)] == invert(g.rep[a]));
        auto f = PartialBijection::from_pairs(3, {{0, 1}});
        auto fi = g.find(f);
        REQUIRE(fi);
        CHECK(g.rep[g.carrier.inverse(*fi)] == PartialBijection::from_pairs(3, {{1, 0}}));
    }

    TEST_CASE("sup in a two-element chain")
    {
        auto s = data_carrier("chain2.json");
        std::vector<ElementId> both{0, 1};
        CHECK(s.sup(both) == ElementId(0));
        std::vector<ElementId> bottom{1};
        CHECK(s.sup(bottom) == ElementId(1));
    }

    TEST_CASE("h-classes of the Clifford carrier")
    {
        auto s = data_carrier("clifford3.json");
        CHECK(s.h_class(0) == std::vector<ElementId>{0});
        CHECK(s.h_class(1) == std::vector<ElementId>{1, 2});
        CHECK_THROWS_AS(s.h_class(2), NotIdempotent);
        CHECK(s.is_reduced());  // nothing sits below g
    }

    TEST_CASE("canonical form ignores labels")
    {
        std::mt19937 rng(7);
        auto s = data_carrier("brandt2.json");
        auto c = canonical_form(s);
        for (int round = 0; round < 10; ++round) {
            std::vector<ElementId> perm(s.size());
            std::iota(perm.begin(), perm.end(), ElementId(0));
            std::shuffle(perm.begin(), perm.end(), rng);
            auto r = relabel(s, perm);
            CHECK(canonical_form(r) == c);
            CHECK(isomorphic(r, s));
        }
        CHECK_FALSE(isomorphic(data_carrier("c2.json"), data_carrier("chain2.json")));
    }
}
