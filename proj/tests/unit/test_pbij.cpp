#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "invsg/errors.hpp"
#include "invsg/pbij.hpp"

using namespace invsg;

namespace {

// Brute force: every subset of I_n closed under product and inverse,
// deduplicated by trying every relabeling.
std::size_t count_inverse_subsemigroups(int n)
{
    auto all = symmetric_inverse_monoid(n);
    auto const& rep = all.rep;
    std::size_t m = rep.size();
    std::vector<std::vector<std::vector<ElementId>>> found;
    auto iso = [](auto const& a, auto const& b) {
        std::size_t k = a.size();
        if (b.size() != k)
            return false;
        std::vector<ElementId> p(k);
        std::iota(p.begin(), p.end(), ElementId(0));
        do {
            bool ok = true;
            for (std::size_t x = 0; x < k && ok; ++x)
                for (std::size_t y = 0; y < k && ok; ++y)
                    ok = p[a[x][y]] == b[p[x]][p[y]];
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    };
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1)
                idx.push_back(i);
        auto pos = [&](PartialBijection const& f) -> long {
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (rep[idx[k]] == f)
                    return long(k);
            return -1;
        };
        bool closed = true;
        std::vector<std::vector<ElementId>> table(idx.size(), std::vector<ElementId>(idx.size()));
        for (std::size_t a = 0; a < idx.size() && closed; ++a) {
            closed = pos(invert(rep[idx[a]])) >= 0;
            for (std::size_t b = 0; b < idx.size() && closed; ++b) {
                long p = pos(rep[idx[a]] * rep[idx[b]]);
                closed = p >= 0;
                if (closed)
                    table[a][b] = ElementId(p);
            }
        }
        if (!closed)
            continue;
        if (std::none_of(found.begin(), found.end(), [&](auto const& t) { return iso(t, table); }))
            found.push_back(table);
    }
    return found.size();
}

} // namespace

TEST_SUITE("pbij")
{
    TEST_CASE("product applies the right factor first")
    {
        auto b = PartialBijection::from_pairs(3, {{0, 1}});
        auto a = PartialBijection::from_pairs(3, {{1, 2}});
        CHECK(a * b == PartialBijection::from_pairs(3, {{0, 2}}));
        CHECK((b * a).rank() == 0);
        CHECK(compose(b, a) == a * b);
    }

    TEST_CASE("from_pairs rejects non-injective data")
    {
        CHECK_THROWS_AS(PartialBijection::from_pairs(3, {{0, 1}, {2, 1}}), InvalidInput);
        CHECK_THROWS_AS(PartialBijection::from_pairs(3, {{0, 1}, {0, 2}}), InvalidInput);
        CHECK_THROWS_AS(PartialBijection::from_pairs(2, {{0, 2}}), InvalidInput);
    }

    TEST_CASE("inverse and restriction")
    {
        auto f = PartialBijection::from_pairs(3, {{0, 1}, {2, 0}});
        CHECK(invert(f) == PartialBijection::from_pairs(3, {{1, 0}, {0, 2}}));
        CHECK(invert(f) * f == PartialBijection::identity(3, 0b101));
        CHECK(restricts(PartialBijection::from_pairs(3, {{2, 0}}), f));
        CHECK_FALSE(restricts(f, PartialBijection::from_pairs(3, {{2, 0}})));
    }

    TEST_CASE("closure of a transposition")
    {
        auto g = closure(2, {PartialBijection::from_pairs(2, {{0, 1}, {1, 0}})});
        CHECK(g.carrier.size() == 2);
        CHECK(g.carrier.is_group());
    }

    TEST_CASE("enumeration over a one-point ground set")
    {
        auto all = enumerate_inverse_subsemigroups(1, 10);
        CHECK(all.size() == 2);
    }

    TEST_CASE("enumeration over two points matches brute force")
    {
        CHECK(enumerate_inverse_subsemigroups(2, 10).size() == count_inverse_subsemigroups(2));
    }

    TEST_CASE("enumeration emits canonical, pairwise non-isomorphic carriers")
    {
        auto all = enumerate_inverse_subsemigroups(3, 4);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(canonical_form(all[i]) == all[i]);
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK_FALSE(all[i] == all[j]);
            CHECK(all[i].size() <= 4);
        }
    }

    TEST_CASE("topology counts on small sets")
    {
        CHECK(all_topologies(1).size() == 1);
        CHECK(all_topologies(2).size() == 4);
        CHECK(all_topologies(3).size() == 29);
    }

    TEST_CASE("topology axioms are enforced")
    {
        CHECK_THROWS_AS(FiniteTopology::validate(2, {0b00, 0b01, 0b10}), InvalidInput);
        CHECK_NOTHROW(FiniteTopology::validate(2, {0b00, 0b10, 0b11}));
    }

    TEST_CASE("Sierpinski space has three partial homeomorphisms")
    {
        auto t = FiniteTopology::validate(2, {0b00, 0b10, 0b11});
        auto g = pseudogroup_of_space(t);
        CHECK(g.carrier.size() == 3);
        CHECK(g.carrier.idempotents().members.size() == 3);
        CHECK(data_carrier("sierpinski.json") == g.carrier);
    }

    TEST_CASE("discrete space gives the symmetric inverse monoid")
    {
        for (int n = 1; n <= 3; ++n)
            CHECK(pseudogroup_of_space(FiniteTopology::discrete(n)).carrier.size() ==
                  symmetric_inverse_monoid(n).carrier.size());
    }

    TEST_CASE("closed sets and idempotents correspond")
    {
        for (int n = 1; n <= 3; ++n)
            for (auto const& t : all_topologies(n)) {
                auto g = pseudogroup_of_space(t);
                auto adj = closed_set_adjunction(t, g);
                CHECK(adj.closed.size() == adj.idempotents.size());
                CHECK_FALSE(verify_adjunction(t, g, adj).has_value());
            }
    }
}
