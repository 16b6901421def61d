#include <doctest.h>

#include <bit>

#include "invsg/errors.hpp"
#include "invsg/groups.hpp"

using namespace invsg;

namespace {

bool is_group(FiniteGroup const& g)
{
    for (std::uint32_t a = 0; a < g.order; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a || g.mul(a, g.inverse[a]) != 0)
            return false;
        for (std::uint32_t b = 0; b < g.order; ++b)
            for (std::uint32_t c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return false;
    }
    return true;
}

} // namespace

TEST_SUITE("groups")
{
    TEST_CASE("named groups have the right order")
    {
        struct Case {
            char const* name;
            std::size_t order;
        } cases[] = {{"C1", 1}, {"C5", 5}, {"S3", 6}, {"D4", 8}, {"Q8", 8}, {"C2xC2xC2", 8}, {"A4", 12}, {"S4", 24}};
        for (auto const& c : cases) {
            auto g = group_by_name(c.name);
            CHECK(g.order == c.order);
            CHECK(is_group(g));
        }
        CHECK_THROWS_AS(group_by_name("X9"), InvalidInput);
        CHECK_THROWS_AS(group_by_name("C30"), InvalidInput);
    }

    TEST_CASE("every group of order at most 8 is listed once")
    {
        // 1,1,1,2,1,2,1,5 groups of orders 1..8
        CHECK(small_group_names().size() == 14);
    }

    TEST_CASE("subgroup counts")
    {
        CHECK(subgroups(group_by_name("C8")).size() == 4);
        CHECK(subgroups(group_by_name("C2xC2")).size() == 5);
        CHECK(subgroups(group_by_name("S3")).size() == 6);
        CHECK(subgroups(group_by_name("Q8")).size() == 6);
        CHECK(subgroups(group_by_name("D4")).size() == 10);
    }

    TEST_CASE("cosets partition the group for each subgroup")
    {
        auto g = group_by_name("S3");
        std::size_t expect = 0;
        for (auto h : subgroups(g))
            expect += g.order / std::size_t(std::popcount(h));
        CHECK(cosets(g).size() == expect);
    }

    TEST_CASE("coset monoid of C2")
    {
        auto g = group_by_name("C2");
        auto s = coset_monoid(g);
        CHECK(s.size() == 3);
        CHECK(s.idempotents().members.size() == 2);
        CHECK(s.identity().has_value());
    }

    TEST_CASE("coset product is the smallest coset containing the product set")
    {
        auto g = group_by_name("C4");
        GroupSet one = 0b0001, two = 0b0100, half = 0b0101;
        CHECK(coset_product(g, one, two) == two);
        CHECK(coset_product(g, half, two) == half);
        CHECK(coset_product(g, 0b0010, 0b0010) == two);
        CHECK_THROWS_AS(coset_product(g, 0b0011, one), InvalidInput);
    }

    TEST_CASE("coset monoids have one idempotent per subgroup")
    {
        for (auto const& name : small_group_names()) {
            auto g = group_by_name(name);
            CHECK(coset_monoid(g).idempotents().members.size() == subgroups(g).size());
        }
    }
}
