#include "invsg/checkers.hpp"

#include <nlohmann/json.hpp>

#include "checkers_internal.hpp"
#include "invsg/errors.hpp"
#include "invsg/groups.hpp"
#include "invsg/io.hpp"

namespace invsg {

using nlohmann::json;

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
    }
    return "?";
}

std::optional<bool> CheckReport::fact(std::string const& key) const
{
    for (auto const& [k, v] : facts)
        if (k == key)
            return v;
    return std::nullopt;
}

std::string to_json(CheckReport const& r)
{
    json j;
    j["suite"] = r.suite;
    j["subject"] = r.subject;
    j["verdict"] = to_string(r.verdict);
    if (r.counterexample) {
        auto const& c = *r.counterexample;
        json cj;
        cj["what"] = c.what;
        cj["rendered"] = c.rendered;
        if (!c.ids.empty())
            cj["ids"] = c.ids;
        if (!c.elems.empty()) {
            json es = json::array();
            for (auto const& e : c.elems) {
                json coords = json::array();
                for (auto const& q : e.c)
                    coords.push_back(to_string(q));
                es.push_back(coords);
            }
            cj["elems"] = es;
        }
        if (!c.chain.empty())
            cj["chain"] = c.chain;
        j["counterexample"] = cj;
    } else {
        j["counterexample"] = nullptr;
    }
    j["budget"] = r.budget;
    if (!r.note.empty())
        j["note"] = r.note;
    if (!r.facts.empty()) {
        json f = json::object();
        for (auto const& [k, v] : r.facts)
            f[k] = v;
        j["facts"] = f;
    }
    return j.dump();
}

Subject Subject::of(std::string id, FiniteInvSemigroup s)
{
    Subject out;
    out.id = std::move(id);
    out.finite = std::move(s);
    return out;
}

Subject Subject::of(FamilyPtr f)
{
    Subject out;
    out.id = f->name();
    out.family = std::move(f);
    return out;
}

Subject resolve_subject(std::string const& text)
{
    if (text.rfind("family:", 0) == 0)
        return Subject::of(family_by_name(text.substr(7)));
    if (text.rfind("coset:", 0) == 0)
        return Subject::of(text, coset_monoid(group_by_name(text.substr(6))));
    return Subject::of(text, read_finite_subject(text));
}

std::vector<std::string> const& suite_names()
{
    static std::vector<std::string> const names = {
        "basic-rules",
        "order-characterizations",
        "sigma-sup",
        "conditional-distributivity",
        "greatest-of-translate",
        "mirror",
        "directed-completeness-mirror",
        "meet-continuity-mirror",
        "wb-characterization",
        "multiplicativity-mirror",
        "mirror-theorem",
        "separation-criterion",
        "continuity-implies-ssc",
    };
    return names;
}

namespace {

void require_suite(std::string const& suite)
{
    auto const& n = suite_names();
    if (std::find(n.begin(), n.end(), suite) == n.end())
        throw InvalidInput("unknown suite: " + suite);
}

// Contexts hold the shared lazily derived data for one run over a subject.
struct Contexts {
    std::unique_ptr<detail::FiniteContext> finite;
    std::unique_ptr<detail::FamilyContext> family;

    Contexts(Subject const& s, FamilyOptions const& opts)
    {
        if (s.finite)
            finite = std::make_unique<detail::FiniteContext>(s.id, *s.finite);
        else if (s.family)
            family = std::make_unique<detail::FamilyContext>(s.family, opts);
        else
            throw InvalidInput("empty subject");
    }

    CheckReport run(std::string const& suite)
    {
        require_suite(suite);
        return finite ? detail::finite_suite(suite, *finite) : detail::family_suite(suite, *family);
    }
};

Flag flag_of(detail::Outcome const& o, std::string const& what)
{
    Flag f;
    if (o.broken) {
        f.evidence = what + ": evidence refuted: " + o.broken->rendered;
        return f;
    }
    if (!o.applicable) {
        f.evidence = what + ": " + o.note;
        return f;
    }
    f.value = o.holds;
    f.evidence = what + ": " + o.note + ", " + std::to_string(o.budget) + " instances";
    if (o.cex)
        f.evidence += "; " + o.cex->rendered;
    return f;
}

Flag partial(bool shadow_value, std::string const& what, std::size_t n)
{
    return Flag{std::nullopt, what + ": partial, finite shadow of " + std::to_string(n) + " elements says " +
                                  (shadow_value ? "true" : "false")};
}

Flag exact(bool v, std::string evidence)
{
    return Flag{v, std::move(evidence)};
}

} // namespace

CheckReport run_suite(std::string const& suite, Subject const& subject, FamilyOptions const& opts)
{
    Contexts ctx(subject, opts);
    return ctx.run(suite);
}

std::vector<CheckReport> run_all(Subject const& subject, FamilyOptions const& opts)
{
    Contexts ctx(subject, opts);
    std::vector<CheckReport> out;
    for (auto const& s : suite_names())
        out.push_back(ctx.run(s));
    return out;
}

bool replay(CheckReport const& report, Subject const& subject, FamilyOptions const& opts)
{
    require_suite(report.suite);
    Contexts ctx(subject, opts);
    return ctx.finite ? detail::finite_replay(report, *ctx.finite) : detail::family_replay(report, *ctx.family);
}

Classification classify(Subject const& subject, FamilyOptions const& opts)
{
    Contexts ctx(subject, opts);
    Classification c;
    c.subject = subject.id;
    c.depth = opts.depth;
    c.budget = opts.budget;
    if (ctx.finite) {
        auto& f = *ctx.finite;
        std::string ex = "exhaustive over " + std::to_string(f.s().size()) + " elements";
        c.reduced = exact(f.s().is_reduced(), ex);
        auto const& m = f.mirror();
        c.mirror = exact(m.holds, m.cex ? m.cex->rendered : ex);
        c.continuous = exact(f.continuous_s(), ex);
        c.algebraic = exact(f.algebraic_s(), ex);
        c.sigma_continuous = exact(f.continuous_sigma(), ex);
        c.sigma_algebraic = exact(f.algebraic_sigma(), ex);
        bool stable = f.continuous_s() && f.multiplicative_s().holds;
        c.stably_continuous = exact(stable, ex + (f.multiplicative_s().cex ? "; " + f.multiplicative_s().cex->rendered : ""));
        return c;
    }
    auto& f = *ctx.family;
    c.reduced = flag_of(f.reduced(), "sampled pairs s, e");
    c.mirror = flag_of(f.mirror(), "chains of idempotents");
    if (c.mirror.value && *c.mirror.value && f.projection().applicable && f.projection().holds)
        c.mirror.evidence += "; projection onto idempotents verified";
    if (f.f().has_way_below()) {
        c.continuous = flag_of(f.continuous_s(), "S");
        c.algebraic = flag_of(f.algebraic_s(), "S");
        c.sigma_continuous = flag_of(f.continuous_sigma(), "idempotents");
        c.sigma_algebraic = flag_of(f.algebraic_sigma(), "idempotents");
        auto const& ms = f.multiplicative_s();
        if (c.continuous.value && !ms.broken) {
            c.stably_continuous.value = *c.continuous.value && ms.holds;
            c.stably_continuous.evidence = "continuous and multiplicative way-below, " + std::to_string(ms.budget) +
                                           " sampled products" + (ms.cex ? "; " + ms.cex->rendered : "");
        } else {
            c.stably_continuous = flag_of(ms, "multiplicativity");
            c.stably_continuous.value.reset();
        }
    } else if (auto* sh = f.shadow()) {
        std::size_t n = sh->s().size();
        c.continuous = partial(sh->continuous_s(), "S", n);
        c.algebraic = partial(sh->algebraic_s(), "S", n);
        c.sigma_continuous = partial(sh->continuous_sigma(), "idempotents", n);
        c.sigma_algebraic = partial(sh->algebraic_sigma(), "idempotents", n);
        c.stably_continuous =
            partial(sh->continuous_s() && sh->multiplicative_s().holds, "continuity and multiplicativity", n);
    } else {
        for (Flag* fl : {&c.continuous, &c.algebraic, &c.sigma_continuous, &c.sigma_algebraic, &c.stably_continuous})
            fl->evidence = "no way-below oracle";
    }
    return c;
}

std::string to_json(Classification const& c)
{
    json j;
    j["subject"] = c.subject;
    json ev = json::object();
    auto put = [&](char const* key, Flag const& f) {
        j[key] = f.value ? json(*f.value) : json(nullptr);
        ev[key] = f.evidence;
    };
    put("reduced", c.reduced);
    put("mirror", c.mirror);
    put("continuous", c.continuous);
    put("algebraic", c.algebraic);
    put("sigma_continuous", c.sigma_continuous);
    put("sigma_algebraic", c.sigma_algebraic);
    put("stably_continuous", c.stably_continuous);
    j["evidence"] = ev;
    j["depth"] = c.depth;
    j["budget"] = c.budget;
    return j.dump();
}

} // namespace invsg
