#include <doctest.h>

#include "helpers.hpp"
#include "invsg/errors.hpp"
#include "invsg/pbij.hpp"

using namespace invsg;

TEST_SUITE("io")
{
    TEST_CASE("carrier round trip")
    {
        auto s = data_carrier("brandt2.json");
        auto back = parse_carrier(carrier_to_json(s));
        CHECK(back == s);
        CHECK(back.names() == s.names());
    }

    TEST_CASE("names are omitted when absent")
    {
        auto s = parse_carrier(R"({"n": 1, "table": [[0]]})");
        CHECK(carrier_to_json(s) == R"({"n":1,"table":[[0]]})");
    }

    TEST_CASE("malformed input is rejected")
    {
        CHECK_THROWS_AS(parse_carrier("{"), InvalidInput);
        CHECK_THROWS_AS(parse_carrier(R"({"table": [[0]]})"), InvalidInput);
        CHECK_THROWS_AS(parse_carrier(R"({"n": 2, "table": [[0]]})"), ValidationError);
        CHECK_THROWS_AS(parse_carrier(R"({"n": 1, "table": [[3]]})"), ValidationError);
        CHECK_THROWS_AS(read_carrier_file(data_path("missing.json")), InvalidInput);
    }

    TEST_CASE("topologies from point lists")
    {
        auto t = parse_topology(R"({"points": 2, "opens": [[], [1], [0, 1]]})");
        CHECK(t.points() == 2);
        CHECK(t.is_open(0b10));
        CHECK_FALSE(t.is_open(0b01));
        CHECK_THROWS_AS(parse_topology(R"({"points": 2, "opens": [[0], [1]]})"), InvalidInput);
    }

    TEST_CASE("a topology file stands for its pseudogroup")
    {
        auto s = read_finite_subject(data_path("chain3-space.json"));
        auto t = FiniteTopology::validate(3, {0b000, 0b001, 0b011, 0b111});
        CHECK(s == pseudogroup_of_space(t).carrier);
    }
}
