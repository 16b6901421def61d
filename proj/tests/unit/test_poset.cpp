#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "invsg/errors.hpp"
#include "invsg/poset.hpp"

using namespace invsg;

namespace {

// Random order on n points: random upward edges, transitively closed.
FinitePoset random_poset(std::mt19937& rng, std::size_t n, double density)
{
    std::vector<std::uint8_t> le(n * n, 0);
    std::bernoulli_distribution edge(density);
    for (std::size_t a = 0; a < n; ++a) {
        le[a * n + a] = 1;
        for (std::size_t b = a + 1; b < n; ++b)
            le[a * n + b] = edge(rng);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (le[a * n + k] && le[k * n + b])
                    le[a * n + b] = 1;
    return FinitePoset::from_relation(n, le);
}

FinitePoset chain(std::size_t n)
{
    std::vector<std::uint8_t> le(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            le[a * n + b] = 1;
    return FinitePoset::from_relation(n, le);
}

} // namespace

TEST_SUITE("poset")
{
    TEST_CASE("relation axioms are enforced")
    {
        CHECK_THROWS_AS(FinitePoset::from_relation(2, {1, 1, 1, 1}), InvalidInput);  // not antisymmetric
        CHECK_THROWS_AS(FinitePoset::from_relation(2, {0, 0, 0, 1}), InvalidInput);  // not reflexive
        CHECK_THROWS_AS(FinitePoset::from_relation(3, {1, 1, 0, 0, 1, 1, 0, 0, 1}), InvalidInput);
    }

    TEST_CASE("sup and inf on a diamond")
    {
        // 0 < 1, 2 < 3
        auto p = FinitePoset::from_relation(4, {1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1});
        std::vector<std::size_t> mid{1, 2};
        CHECK(sup(p, mid) == std::size_t(3));
        CHECK(inf(p, mid) == std::size_t(0));
        CHECK_FALSE(is_directed(p, mid));
        std::vector<std::size_t> low{0, 1};
        CHECK(is_directed(p, low));
    }

    TEST_CASE("covering pairs of a chain")
    {
        auto r = transitive_reduction(chain(4));
        CHECK(r == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
    }

    TEST_CASE("covering pairs match brute force")
    {
        std::mt19937 rng(3);
        for (int round = 0; round < 30; ++round) {
            auto p = random_poset(rng, 7, 0.3);
            std::vector<std::pair<std::size_t, std::size_t>> expect;
            for (std::size_t a = 0; a < 7; ++a)
                for (std::size_t b = 0; b < 7; ++b) {
                    if (!p.lt(a, b))
                        continue;
                    bool cover = true;
                    for (std::size_t c = 0; c < 7; ++c)
                        if (p.lt(a, c) && p.lt(c, b))
                            cover = false;
                    if (cover)
                        expect.emplace_back(a, b);
                }
            auto got = transitive_reduction(p);
            std::sort(got.begin(), got.end());
            CHECK(got == expect);
        }
    }

    TEST_CASE("way-below collapses to the order on finite posets")
    {
        std::mt19937 rng(11);
        for (int round = 0; round < 20; ++round) {
            auto p = random_poset(rng, 6 + round % 4, 0.35);
            auto wb = way_below_relation(p);
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = 0; b < p.size(); ++b) {
                    CHECK(wb(a, b) == p.le(a, b));
                    CHECK(way_below_def(p, a, b) == p.le(a, b));
                    CHECK(way_below_fast(p, a, b) == p.le(a, b));
                }
            CHECK(is_continuous(p));
            CHECK(is_algebraic(p));
            CHECK(compacts(p).size() == p.size());
        }
    }

    TEST_CASE("definitional way-below refuses large posets")
    {
        CHECK_THROWS_AS(way_below_def(chain(kDefinitionalLimit + 1), 0, 1), LimitExceeded);
    }

    TEST_CASE("meet-continuity of chains")
    {
        CHECK(is_meet_continuous(chain(5)));
    }

    TEST_CASE("directed subsets end with their maximum")
    {
        auto p = chain(4);
        std::size_t count = 0;
        for_each_directed_subset(p, [&](std::span<const std::size_t> m) {
            ++count;
            for (auto x : m)
                CHECK(p.le(x, m.back()));
        });
        CHECK(count == 15);  // every nonempty subset of a chain
    }

    TEST_CASE("idempotent poset of I_2")
    {
        auto s = data_carrier("brandt2.json");
        auto ip = idempotent_poset(s);
        CHECK(ip.embedding.size() == 3);
        CHECK(ip.index_of(2) == std::nullopt);
    }

    TEST_CASE("dot output lists every cover")
    {
        auto dot = hasse_dot(chain(3), {"a", "b", "c"});
        CHECK(dot.find("digraph") != std::string::npos);
        CHECK(dot.find("n0 -> n1") != std::string::npos);
        CHECK(dot.find("n1 -> n2") != std::string::npos);
        CHECK(dot.find("n0 -> n2") == std::string::npos);
    }
}
