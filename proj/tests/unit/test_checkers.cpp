#include <doctest.h>

#include "helpers.hpp"
#include "invsg/checkers.hpp"
#include "invsg/errors.hpp"
#include "invsg/groups.hpp"

using namespace invsg;

namespace {

FamilyOptions quick()
{
    FamilyOptions o;
    o.budget = 2000;
    return o;
}

Elem pt(long p, long d = 1)
{
    return cex_encode(CexElem::real(Rational(p, d)));
}

} // namespace

TEST_SUITE("checkers")
{
    TEST_CASE("every suite has a name and runs on a finite carrier")
    {
        auto subject = Subject::of("brandt2", data_carrier("brandt2.json"));
        auto reports = run_all(subject);
        REQUIRE(reports.size() == suite_names().size());
        for (std::size_t i = 0; i < reports.size(); ++i) {
            CHECK(reports[i].suite == suite_names()[i]);
            CHECK(reports[i].verdict != Verdict::Fail);
        }
        CHECK_THROWS_AS(run_suite("no-such-suite", subject), InvalidInput);
    }

    TEST_CASE("a broken table is caught with a replayable counterexample")
    {
        // left-zero band with the identity as "inverse": (st)* != t* s*
        auto bad = FiniteInvSemigroup::unchecked(2, {0, 0, 1, 1}, {0, 1});
        auto subject = Subject::of("left-zero", bad);
        auto r = run_suite("basic-rules", subject);
        REQUIRE(r.verdict == Verdict::Fail);
        REQUIRE(r.counterexample);
        CHECK(r.counterexample->ids.size() == 2);
        CHECK(replay(r, subject));
    }

    TEST_CASE("cex fails mirror on the chain below 1")
    {
        auto subject = Subject::of(make_cex());
        auto r = run_suite("mirror", subject, quick());
        REQUIRE(r.verdict == Verdict::Fail);
        auto const& c = *r.counterexample;
        CHECK(c.chain == "1-2^-k");
        REQUIRE(c.elems.size() == 2);
        CHECK(c.elems[0] == pt(1));
        CHECK(c.elems[1] == cex_encode(CexElem::w()));
        CHECK(replay(r, subject, quick()));
        CHECK(r.fact("mirror") == false);
    }

    TEST_CASE("separation criterion fails on cex at 1 and omega")
    {
        auto r = run_suite("separation-criterion", Subject::of(make_cex()), quick());
        REQUIRE(r.verdict == Verdict::Fail);
        CHECK(r.fact("criterion") == false);
        CHECK(r.fact("mirror") == false);
        REQUIRE(r.counterexample->elems.size() == 3);
        CHECK(r.counterexample->elems[0] == pt(1));
    }

    TEST_CASE("symbolic families pass everything else")
    {
        for (auto name : {"bicyclic-nat", "bicyclic-dyadic", "rotation"}) {
            CAPTURE(name);
            for (auto const& r : run_all(Subject::of(family_by_name(name)), quick()))
                CHECK_MESSAGE(r.verdict != Verdict::Fail, r.suite);
        }
    }

    TEST_CASE("characters fall back to the finite shadow")
    {
        auto subject = resolve_subject("family:characters:" + data_path("clifford3.json"));
        auto r = run_suite("mirror-theorem", subject, quick());
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.note.rfind("partial", 0) == 0);
    }

    TEST_CASE("classification of the rotation semigroup")
    {
        auto c = classify(Subject::of(make_rotation()), quick());
        CHECK(c.mirror.value == true);
        CHECK(c.reduced.value == false);
        CHECK(c.continuous.value == true);
        CHECK(c.algebraic.value == false);
        CHECK(c.sigma_continuous.value == true);
        CHECK(c.stably_continuous.value == true);
        CHECK(c.mirror.evidence.find("projection") != std::string::npos);
    }

    TEST_CASE("classification of the bicyclic monoids")
    {
        auto nat = classify(Subject::of(make_bicyclic(Cone::Naturals)), quick());
        CHECK(nat.reduced.value == true);
        CHECK(nat.continuous.value == true);
        CHECK(nat.algebraic.value == true);
        auto dy = classify(Subject::of(make_bicyclic(Cone::Dyadic)), quick());
        CHECK(dy.continuous.value == true);
        CHECK(dy.algebraic.value == false);
    }

    TEST_CASE("classification of characters is partial")
    {
        auto c = classify(resolve_subject("family:characters:" + data_path("c2.json")), quick());
        CHECK(c.mirror.value == true);
        CHECK_FALSE(c.continuous.value.has_value());
        CHECK(c.continuous.evidence.find("partial") != std::string::npos);
    }

    TEST_CASE("reports are deterministic for a fixed seed")
    {
        auto subject = Subject::of(make_rotation());
        auto a = run_suite("wb-characterization", subject, quick());
        auto b = run_suite("wb-characterization", subject, quick());
        CHECK(to_json(a) == to_json(b));
    }

    TEST_CASE("report json")
    {
        auto r = run_suite("mirror", Subject::of(make_cex()), quick());
        auto j = to_json(r);
        for (auto key : {"\"suite\"", "\"subject\"", "\"verdict\":\"fail\"", "\"counterexample\"", "\"budget\""})
            CHECK(j.find(key) != std::string::npos);
        auto ok = run_suite("basic-rules", Subject::of("t", data_carrier("trivial.json")));
        CHECK(to_json(ok).find("\"counterexample\":null") != std::string::npos);
    }

    TEST_CASE("subject grammar")
    {
        CHECK(resolve_subject("coset:C2").finite->size() == 3);
        CHECK(resolve_subject("family:cex").family->name() == "cex");
        CHECK(resolve_subject(data_path("c2.json")).finite->size() == 2);
        CHECK_THROWS_AS(resolve_subject("family:nope"), InvalidInput);
        CHECK_THROWS_AS(resolve_subject(data_path("nope.json")), InvalidInput);
    }

    TEST_CASE("coset monoids are mirror and continuous")
    {
        for (auto g : {"C4", "S3", "Q8"}) {
            auto c = classify(Subject::of(g, coset_monoid(group_by_name(g))));
            CHECK(c.mirror.value == true);
            CHECK(c.continuous.value == true);
            CHECK(c.algebraic.value == true);
        }
    }
}
