// End-to-end acceptance run: one line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed here and do not read INVSG_BUDGET.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "invsg/checkers.hpp"
#include "invsg/groups.hpp"
#include "invsg/io.hpp"
#include "invsg/pbij.hpp"

using namespace invsg;

namespace {

constexpr std::size_t kDepth = 64;
constexpr std::size_t kPairs = 10000;
constexpr double kAxiomSeconds = 10.0;

FamilyOptions const kOpts{1, kDepth, kPairs};

struct Named {
    std::string name;
    FiniteInvSemigroup s;
};

std::string data(std::string const& f)
{
    return std::string(INVSG_DATA_DIR) + "/" + f;
}

std::vector<Named> i2_subsemigroups()
{
    std::vector<Named> out;
    for (auto const& s : enumerate_inverse_subsemigroups(2, 10))
        out.push_back({"I2-sub" + std::to_string(out.size()), s});
    return out;
}

std::vector<Named> finite_corpus()
{
    auto out = i2_subsemigroups();
    out.push_back({"I3", symmetric_inverse_monoid(3).carrier});
    for (auto const& g : small_group_names())
        out.push_back({"coset:" + g, coset_monoid(group_by_name(g))});
    for (int n = 1; n <= 3; ++n) {
        int k = 0;
        for (auto const& t : all_topologies(n))
            out.push_back({"space" + std::to_string(n) + "-" + std::to_string(k++), pseudogroup_of_space(t).carrier});
    }
    for (auto f : {"trivial.json", "chain2.json", "c2.json", "clifford3.json", "brandt2.json"})
        out.push_back({f, read_carrier_file(data(f))});
    return out;
}

std::vector<std::string> character_carriers()
{
    return {"chain2.json", "c2.json", "clifford3.json"};
}

// Full suite runs on finite subjects, computed once.
std::map<std::string, std::vector<CheckReport>> g_finite_reports;

std::vector<CheckReport> const& finite_reports(Named const& n)
{
    auto it = g_finite_reports.find(n.name);
    if (it == g_finite_reports.end())
        it = g_finite_reports.emplace(n.name, run_all(Subject::of(n.name, n.s), kOpts)).first;
    return it->second;
}

CheckReport const& finite_report(Named const& n, std::string const& suite)
{
    for (auto const& r : finite_reports(n))
        if (r.suite == suite)
            return r;
    throw std::logic_error("missing suite " + suite);
}

// Collects the first few problems of a criterion.
struct Tally {
    std::size_t checked = 0;
    std::vector<std::string> problems;

    void expect(bool ok, std::string const& what)
    {
        ++checked;
        if (!ok)
            problems.push_back(what);
    }

    std::string summary() const
    {
        std::ostringstream o;
        o << checked << " checks";
        for (std::size_t i = 0; i < problems.size() && i < 5; ++i)
            o << "; " << problems[i];
        if (problems.size() > 5)
            o << "; and " << problems.size() - 5 << " more";
        return o.str();
    }
};

std::string brief(CheckReport const& r)
{
    std::string s = r.subject + "/" + r.suite + "=" + to_string(r.verdict);
    if (r.counterexample)
        s += " (" + r.counterexample->rendered + ")";
    return s;
}

bool exhaustive(CheckReport const& r)
{
    return r.note.find("sampled") == std::string::npos;
}

Tally axioms()
{
    Tally t;
    auto subjects = i2_subsemigroups();
    subjects.push_back({"I3", symmetric_inverse_monoid(3).carrier});
    t.expect(subjects.back().s.size() == 34, "I_3 does not have 34 elements");
    auto start = std::chrono::steady_clock::now();
    for (auto const& n : subjects)
        for (auto const& r : finite_reports(n)) {
            t.expect(r.verdict != Verdict::Fail, brief(r));
            t.expect(exhaustive(r), r.subject + "/" + r.suite + " was sampled");
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(secs < kAxiomSeconds, "took " + std::to_string(secs) + " s");
    return t;
}

Tally order_characterizations(std::vector<Named> const& corpus)
{
    Tally t;
    for (auto const& n : corpus) {
        auto const& r = finite_report(n, "order-characterizations");
        t.expect(r.verdict == Verdict::Pass, brief(r));
        t.expect(r.budget == n.s.size() * n.s.size(), n.name + ": not every pair examined");
    }
    return t;
}

Tally sup_lemmas(std::vector<Named> const& corpus)
{
    Tally t;
    std::vector<Named> small;
    for (auto const& n : corpus)
        if (n.s.size() <= 5)
            small.push_back(n);
    for (auto const& s : enumerate_inverse_subsemigroups(3, 5))
        small.push_back({"I3-sub" + std::to_string(small.size()), s});
    for (auto const& n : small)
        for (auto suite : {"sigma-sup", "conditional-distributivity", "greatest-of-translate"}) {
            auto const& r = finite_report(n, suite);
            t.expect(r.verdict == Verdict::Pass, brief(r));
            t.expect(exhaustive(r), n.name + "/" + suite + " was sampled");
        }
    return t;
}

Tally mirror(std::vector<Named> const& corpus)
{
    Tally t;
    for (auto const& n : corpus) {
        auto const& r = finite_report(n, "mirror");
        t.expect(r.verdict == Verdict::Pass, brief(r));
    }
    std::vector<std::string> passing = {"bicyclic-nat", "bicyclic-dyadic", "rotation"};
    for (auto const& c : character_carriers())
        passing.push_back("characters:" + data(c));
    for (auto const& name : passing) {
        auto r = run_suite("mirror", Subject::of(family_by_name(name)), kOpts);
        t.expect(r.verdict == Verdict::Pass, brief(r));
    }

    auto cex = make_cex();
    auto r = run_suite("mirror", Subject::of(cex), kOpts);
    t.expect(r.verdict == Verdict::Fail, "cex does not fail mirror");
    if (r.counterexample) {
        auto const& c = *r.counterexample;
        Elem one = cex_encode(CexElem::real(1)), omega = cex_encode(CexElem::w());
        t.expect(c.chain == "1-2^-k", "cex failed on chain " + c.chain);
        t.expect(c.elems == std::vector<Elem>{one, omega}, "cex witness is " + c.rendered);
        // The witness itself, independently of the suite.
        auto w = cex_mirror_witness();
        auto m = w.members(kDepth);
        t.expect(m.size() == kDepth, "witness shorter than the depth");
        t.expect(w.claimed_sup_in_sigma == one, "witness sup among idempotents is not 1");
        for (auto const& x : m)
            t.expect(cex->le(x, one) && cex->le(x, omega) && x != one, "member not strictly below both bounds");
        t.expect(!cex->le(one, omega) && !cex->le(omega, one), "1 and ω are comparable");
        t.expect(replay(r, Subject::of(cex), kOpts), "cex failure does not replay");
    }
    return t;
}

Tally mirror_theorem(std::vector<Named> const& corpus)
{
    Tally t;
    for (auto const& n : corpus) {
        auto c = classify(Subject::of(n.name, n.s), kOpts);
        t.expect(c.continuous.value == true && c.sigma_continuous.value == true, n.name + ": not continuous");
        t.expect(c.algebraic.value == true && c.sigma_algebraic.value == true, n.name + ": not algebraic");
    }
    struct Expect {
        char const* name;
        bool continuous;
        std::optional<bool> algebraic;
    } const expected[] = {
        {"bicyclic-nat", true, true},
        {"bicyclic-dyadic", true, false},
        {"rotation", true, false},
        {"cex", true, std::nullopt},
    };
    for (auto const& e : expected) {
        auto c = classify(Subject::of(family_by_name(e.name)), kOpts);
        std::string n = e.name;
        t.expect(c.continuous.value.has_value() && c.sigma_continuous.value.has_value(), n + ": continuity unknown");
        t.expect(c.continuous.value == c.sigma_continuous.value, n + ": S and idempotents disagree on continuity");
        t.expect(c.continuous.value == e.continuous, n + ": continuity " + c.continuous.evidence);
        if (e.algebraic)
            t.expect(c.algebraic.value == e.algebraic, n + ": algebraicity " + c.algebraic.evidence);
        t.expect(c.algebraic.value == c.sigma_algebraic.value, n + ": S and idempotents disagree on algebraicity");
    }
    for (auto const& f : character_carriers()) {
        auto r = run_suite("mirror-theorem", Subject::of(family_by_name("characters:" + data(f))), kOpts);
        t.expect(r.verdict == Verdict::Pass, brief(r));
        t.expect(r.fact("continuous_s") == r.fact("continuous_sigma"), f + ": characters disagree on continuity");
    }
    return t;
}

Tally wb_characterization()
{
    Tally t;
    for (auto name : {"bicyclic-nat", "bicyclic-dyadic", "rotation"}) {
        auto r = run_suite("wb-characterization", Subject::of(family_by_name(name)), kOpts);
        t.expect(r.verdict == Verdict::Pass, brief(r));
        t.expect(r.budget >= kPairs, std::string(name) + ": only " + std::to_string(r.budget) + " pairs");
    }
    return t;
}

Tally separation(std::vector<Named> const& corpus)
{
    Tally t;
    auto check = [&](CheckReport const& r) {
        if (r.verdict == Verdict::NotApplicable)
            return;
        auto crit = r.fact("criterion"), mir = r.fact("mirror");
        t.expect(crit && mir && *crit == *mir, brief(r));
    };
    for (auto const& n : corpus)
        check(finite_report(n, "separation-criterion"));
    std::vector<std::string> families = {"bicyclic-nat", "bicyclic-dyadic", "rotation", "cex"};
    for (auto const& c : character_carriers())
        families.push_back("characters:" + data(c));
    for (auto const& name : families) {
        auto r = run_suite("separation-criterion", Subject::of(family_by_name(name)), kOpts);
        check(r);
        if (name == "cex")
            t.expect(r.verdict == Verdict::Fail && r.fact("criterion") == false && r.fact("mirror") == false,
                     "cex: " + brief(r));
        if (name == "rotation")
            t.expect(r.verdict == Verdict::Pass && r.fact("criterion") == true && r.fact("mirror") == true,
                     "rotation: " + brief(r));
    }
    return t;
}

Tally stable_continuity()
{
    Tally t;
    for (auto name : {"bicyclic-nat", "bicyclic-dyadic", "rotation"}) {
        auto r = run_suite("multiplicativity-mirror", Subject::of(family_by_name(name)), kOpts);
        t.expect(r.verdict == Verdict::Pass, brief(r));
        t.expect(r.fact("multiplicative_s") == true && r.fact("multiplicative_sigma") == true,
                 std::string(name) + ": way-below not multiplicative");
    }
    return t;
}

Tally adjunction()
{
    Tally t;
    for (int n = 1; n <= 3; ++n)
        for (auto const& top : all_topologies(n)) {
            auto g = pseudogroup_of_space(top);
            auto adj = closed_set_adjunction(top, g);
            auto why = verify_adjunction(top, g, adj);
            t.expect(!why, why.value_or(""));
            // i(F) is the identity on the open complement, and reverse
            // inclusion of closed sets is the order of those identities.
            PointSet all = full_set(n);
            t.expect(adj.closed.size() == adj.idempotents.size(), "closed sets and idempotents differ in number");
            for (std::size_t a = 0; a < adj.closed.size(); ++a) {
                t.expect(g.rep[adj.i[a]] == PartialBijection::identity(n, PointSet(all & ~adj.closed[a])),
                         "i(F) is not the identity on X \\ F");
                for (std::size_t b = 0; b < adj.closed.size(); ++b) {
                    bool sup = (adj.closed[a] & adj.closed[b]) == adj.closed[b];
                    t.expect(sup == g.carrier.le(adj.i[a], adj.i[b]), "i does not turn ⊇ into the order");
                }
            }
        }
    return t;
}

} // namespace

int main()
{
    auto corpus = finite_corpus();
    struct Criterion {
        int id;
        char const* title;
        std::function<Tally()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "axioms and basic rules, all suites on subsemigroups of I_2 and on I_3", axioms},
        {2, "order characterizations agree on every pair", [&] { return order_characterizations(corpus); }},
        {3, "sup of sources and conditional distributivity on carriers of order <= 5", [&] { return sup_lemmas(corpus); }},
        {4, "mirror on the corpus, failing only on cex with bounds 1 and ω", [&] { return mirror(corpus); }},
        {5, "continuity of S agrees with continuity of its idempotents", [&] { return mirror_theorem(corpus); }},
        {6, "way-below characterization on 10^4 pairs per family", wb_characterization},
        {7, "separation criterion agrees with mirror", [&] { return separation(corpus); }},
        {8, "multiplicative way-below on S and on idempotents", stable_continuity},
        {9, "closed sets and idempotents of pseudogroups, up to 3 points", adjunction},
    };
    int failed = 0;
    auto total = std::chrono::steady_clock::now();
    for (auto const& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = c.run();
        } catch (std::exception const& e) {
            t.problems.push_back(std::string("error: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = t.problems.empty();
        failed += !ok;
        std::printf("criterion %d: %s  %s (%s, %.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.title, t.summary().c_str(),
                    secs);
        std::fflush(stdout);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - total).count();
    std::printf("%zu of %zu criteria passed in %.1f s\n", criteria.size() - std::size_t(failed), criteria.size(), secs);
    return failed ? 1 : 0;
}
