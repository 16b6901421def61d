#include <doctest.h>

#include "helpers.hpp"
#include "invsg/errors.hpp"
#include "invsg/families.hpp"

using namespace invsg;

namespace {

Rational q(long p, long d = 1)
{
    return Rational(p, d);
}

Elem pt(Rational v)
{
    return cex_encode(CexElem::real(std::move(v)));
}

Elem const omega = cex_encode(CexElem::w());

} // namespace

TEST_SUITE("families")
{
    TEST_CASE("bicyclic product")
    {
        CHECK(bicyclic_op({q(2), q(1)}, {q(3), q(4)}) == BicyclicElem{q(4), q(4)});
        CHECK(bicyclic_op({q(0), q(1)}, {q(1), q(0)}) == BicyclicElem{q(0), q(0)});
        CHECK(bicyclic_op({q(1), q(0)}, {q(0), q(1)}) == BicyclicElem{q(1), q(1)});
        CHECK(bicyclic_inv({q(2), q(5)}) == BicyclicElem{q(5), q(2)});
    }

    TEST_CASE("bicyclic order and way-below")
    {
        // (1,1) <= (0,0): idempotents are ordered opposite to the cone
        CHECK(bicyclic_le({q(1), q(1)}, {q(0), q(0)}));
        CHECK_FALSE(bicyclic_le({q(0), q(0)}, {q(1), q(1)}));
        CHECK(bicyclic_le({q(3), q(2)}, {q(1), q(0)}));
        CHECK(bicyclic_wb(Cone::Naturals, {q(1), q(1)}, {q(1), q(1)}));
        CHECK_FALSE(bicyclic_wb(Cone::Dyadic, {q(1), q(1)}, {q(1), q(1)}));
        CHECK(bicyclic_wb(Cone::Dyadic, {q(3, 2), q(3, 2)}, {q(1), q(1)}));
        CHECK_THROWS_AS(bicyclic_wb(Cone::Naturals, {q(1), q(0)}, {q(1), q(1)}), NotIdempotent);
    }

    TEST_CASE("rotation product")
    {
        CHECK(rotation_op(rotation(q(1, 2), q(1, 3)), rotation(q(3, 4), q(1, 2))) == rotation(q(1, 2), q(5, 6)));
        CHECK(rotation_op(rotation(q(1), q(3, 4)), rotation(q(1), q(1, 2))) == rotation(q(1), q(1, 4)));
        CHECK(rotation_inv(rotation(q(1, 2), q(1, 3))) == rotation(q(1, 2), q(2, 3)));
        CHECK(rotation(q(0), q(1, 3)) == rotation(q(0), q(0)));
        CHECK_THROWS_AS(rotation(q(2), q(0)), InvalidInput);
        CHECK_THROWS_AS(rotation(q(1), q(1)), InvalidInput);
    }

    TEST_CASE("rotation order: shrink the radius, keep the angle")
    {
        CHECK(rotation_le(rotation(q(1, 4), q(1, 3)), rotation(q(1, 2), q(1, 3))));
        CHECK_FALSE(rotation_le(rotation(q(1, 4), q(1, 5)), rotation(q(1, 2), q(1, 3))));
        // the origin is below everything, so the disk is not reduced
        CHECK(rotation_le(rotation(q(0), q(0)), rotation(q(1), q(1, 2))));
        CHECK(rotation_wb_sigma(q(0), q(0)));
        CHECK(rotation_wb_sigma(q(1, 4), q(1, 2)));
        CHECK_FALSE(rotation_wb_sigma(q(1, 2), q(1, 2)));
    }

    TEST_CASE("cex products")
    {
        auto f = make_cex();
        CHECK(f->op(omega, omega) == pt(1));
        CHECK(f->op(omega, pt(q(1, 2))) == pt(q(1, 2)));
        CHECK(f->op(omega, pt(1)) == omega);
        CHECK(f->op(pt(q(1, 3)), pt(q(1, 2))) == pt(q(1, 3)));
        CHECK(f->sigma(omega) == pt(1));
        CHECK_FALSE(f->is_idempotent(omega));
    }

    TEST_CASE("cex order: 1 and omega are incomparable upper bounds of [0,1)")
    {
        auto f = make_cex();
        CHECK(f->le(pt(q(1, 2)), omega));
        CHECK(f->le(pt(q(1, 2)), pt(1)));
        CHECK_FALSE(f->le(pt(1), omega));
        CHECK_FALSE(f->le(omega, pt(1)));
        auto w = cex_mirror_witness();
        auto m = w.members(64);
        REQUIRE(m.size() == 64);
        for (auto const& x : m) {
            CHECK(f->is_idempotent(x));
            CHECK(f->le(x, omega));
            CHECK(f->le(x, pt(1)));
            CHECK(x != pt(1));
        }
        CHECK(w.claimed_sup_in_sigma == pt(1));
        CHECK_FALSE(w.claimed_sup_in_s.has_value());
    }

    TEST_CASE("cex way-below")
    {
        auto f = make_cex();
        CHECK(f->wb(omega, omega));
        CHECK(f->wb(pt(1), pt(1)));
        CHECK(f->wb(pt(0), pt(q(1, 2))));
        CHECK_FALSE(f->wb(pt(q(1, 2)), pt(q(1, 2))));
        CHECK(f->wb_sigma(pt(q(1, 2)), pt(1)));
        CHECK_FALSE(f->wb_sigma(pt(1), pt(1)));
    }

    TEST_CASE("chain witnesses")
    {
        auto w = ChainWitness::finite("ab", {pt(0), pt(q(1, 2))});
        CHECK(w.members(64).size() == 2);
        CHECK(w.members(1).size() == 1);
        auto o = ChainWitness::omega("k", [](std::size_t k) { return pt(q(long(k), long(k) + 1)); });
        CHECK(o.members(5).size() == 5);
        CHECK(o.members(5)[4] == pt(q(4, 5)));
    }

    TEST_CASE("characters")
    {
        auto s = data_carrier("clifford3.json");
        auto one = trivial_character(s);
        CHECK_NOTHROW(validate_character(s, one));
        CHECK(character_is_idempotent(one));
        Character bad = one;
        bad[2] = rotation(q(1), q(1, 2));  // g -> -1 but e -> 1 needs g^2 = e
        CHECK_NOTHROW(validate_character(s, bad));
        bad[1] = rotation(q(1, 2), q(0));
        CHECK_THROWS_AS(validate_character(s, bad), InvalidInput);
        auto f = make_characters(s, "clifford3");
        CHECK(decode_character(encode_character(one)) == one);
        CHECK(f->is_idempotent(encode_character(one)));
        CHECK_THROWS_AS(make_characters(data_carrier("brandt2.json"), "b"), InvalidInput);
    }

    TEST_CASE("family registry")
    {
        CHECK(family_by_name("rotation")->name() == "rotation");
        CHECK(family_by_name("bicyclic-nat")->identity().has_value());
        CHECK_THROWS_AS(family_by_name("nope"), InvalidInput);
        CHECK_FALSE(family_by_name("characters:" + data_path("c2.json"))->has_way_below());
    }

    TEST_CASE("budget from the environment")
    {
        setenv("INVSG_BUDGET", "123", 1);
        CHECK(options_from_env().budget == 123);
        setenv("INVSG_BUDGET", "x", 1);
        CHECK_THROWS_AS(options_from_env(), InvalidInput);
        unsetenv("INVSG_BUDGET");
        CHECK(options_from_env().budget == FamilyOptions{}.budget);
    }
}
