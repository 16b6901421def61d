#include <algorithm>
#include <functional>
#include <random>

#include "checkers_internal.hpp"
#include "invsg/errors.hpp"

namespace invsg::detail {

namespace {

// Past this many subsets the subset-quantified suites switch from full
// enumeration to a fixed number of seeded random subsets.
constexpr std::uint64_t kExhaustiveWork = std::uint64_t(1) << 22;
constexpr std::size_t kSampledSubsets = 20000;

using Members = std::vector<std::size_t>;

std::uint64_t subset_work(FinitePoset const& p, std::uint64_t cap)
{
    std::uint64_t total = 0;
    for (std::size_t m = 0; m < p.size(); ++m) {
        std::size_t k = p.down_set(m).size();
        if (k >= 40)
            return ~std::uint64_t(0);
        total += std::uint64_t(1) << k;
        if (total > cap)
            return total;
    }
    return total;
}

// Subsets of the ideal of some top element: every subset when that is
// cheap, otherwise kSampledSubsets random ones. `f(top, members)`.
bool for_each_ideal_subset(FinitePoset const& p, bool include_top, std::uint64_t cap,
                           std::function<void(std::size_t, Members const&)> const& f)
{
    std::vector<Members> ideals(p.size());
    for (std::size_t m = 0; m < p.size(); ++m)
        for (std::size_t x : p.down_set(m))
            if (x != m)
                ideals[m].push_back(x);
    Members members;
    auto emit = [&](std::size_t m, std::uint64_t mask, bool with_top) {
        members.clear();
        for (std::size_t i = 0; i < ideals[m].size(); ++i)
            if (mask >> i & 1u)
                members.push_back(ideals[m][i]);
        if (with_top)
            members.push_back(m);
        if (!members.empty())
            f(m, members);
    };
    if (subset_work(p, cap) <= cap) {
        for (std::size_t m = 0; m < p.size(); ++m) {
            std::uint64_t count = std::uint64_t(1) << ideals[m].size();
            for (std::uint64_t mask = 0; mask < count; ++mask) {
                emit(m, mask, true);
                if (!include_top)
                    emit(m, mask, false);
            }
        }
        return true;
    }
    Rng rng(0x5u);
    for (std::size_t i = 0; i < kSampledSubsets; ++i) {
        std::size_t m = std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng);
        members.clear();
        for (std::size_t x : ideals[m])
            if (rng() & 1u)
                members.push_back(x);
        if (include_top || (rng() & 1u))
            members.push_back(m);
        if (!members.empty())
            f(m, members);
    }
    return false;
}

// Every directed subset: in a finite poset these are exactly the nonempty
// subsets with a maximum.
bool for_each_directed(FinitePoset const& p, std::function<void(Members const&)> const& f,
                       std::uint64_t cap = kExhaustiveWork)
{
    return for_each_ideal_subset(p, true, cap, [&](std::size_t, Members const& d) { f(d); });
}

// Every nonempty subset with a supremum, each once: a subset with a sup
// lies in the ideal of that sup.
bool for_each_with_sup(FiniteInvSemigroup const& s, FinitePoset const& p,
                       std::function<void(std::vector<ElementId> const&, ElementId)> const& f,
                       std::uint64_t cap = kExhaustiveWork)
{
    std::vector<ElementId> ids;
    return for_each_ideal_subset(p, false, cap, [&](std::size_t top, Members const& a) {
        ids.assign(a.begin(), a.end());
        auto sup = s.sup(ids);
        if (sup && *sup == top)
            f(ids, *sup);
    });
}

std::vector<ElementId> to_ids(Members const& m)
{
    return {m.begin(), m.end()};
}

std::string sampled_note(bool exhaustive)
{
    return exhaustive ? "exhaustive" : "sampled " + std::to_string(kSampledSubsets) + " subsets (carrier too wide)";
}

Counterexample make_cex(FiniteContext const& ctx, std::string what, std::vector<ElementId> ids)
{
    Counterexample c;
    c.rendered = what + " at " + ctx.render(ids);
    c.what = std::move(what);
    c.ids = std::move(ids);
    return c;
}

CheckReport report(FiniteContext const& ctx, std::string suite)
{
    CheckReport r;
    r.suite = std::move(suite);
    r.subject = ctx.id();
    return r;
}

void fail(CheckReport& r, Counterexample c)
{
    r.verdict = Verdict::Fail;
    r.counterexample = std::move(c);
}

void not_applicable(CheckReport& r, std::string why)
{
    r.verdict = Verdict::NotApplicable;
    r.note = std::move(why);
}

bool def_le(FiniteInvSemigroup const& s, ElementId a, ElementId b)
{
    for (ElementId e : s.idempotents().members)
        if (s.mul(b, e) == a)
            return true;
    return false;
}

// Instance predicates: nullopt when the instance satisfies the property,
// otherwise what went wrong. Shared by the exhaustive loops and replay.

std::optional<std::string> basic_rules_unary(FiniteInvSemigroup const& s, ElementId x)
{
    ElementId xi = s.inverse(x);
    if (!s.is_idempotent(s.mul(x, xi)))
        return "s s* not idempotent";
    if (!s.is_idempotent(s.mul(xi, x)))
        return "s* s not idempotent";
    if (s.inverse(xi) != x)
        return "(s*)* != s";
    if (s.is_idempotent(x) && xi != x)
        return "idempotent s with s* != s";
    return std::nullopt;
}

std::optional<std::string> basic_rules_binary(FiniteInvSemigroup const& s, ElementId x, ElementId y)
{
    if (s.inverse(s.mul(x, y)) != s.mul(s.inverse(y), s.inverse(x)))
        return "(st)* != t* s*";
    return std::nullopt;
}

std::optional<std::string> order_characterizations(FiniteInvSemigroup const& s, ElementId x, ElementId y)
{
    ElementId xi = s.inverse(x);
    bool p[6] = {
        def_le(s, x, y),
        def_le(s, xi, s.inverse(y)),
        x == s.mul(s.mul(y, xi), x),
        false,
        x == s.mul(s.mul(x, xi), y),
        s.le(x, y),
    };
    for (ElementId e : s.idempotents().members)
        if (s.mul(e, y) == x)
            p[3] = true;
    if (std::all_of(std::begin(p), std::end(p), [&](bool b) { return b == p[0]; }))
        return std::nullopt;
    std::string v;
    for (bool b : p)
        v += b ? '1' : '0';
    return "characterizations disagree (s=te, s*<=t*, s=ts*s, s=et, s=ss*t, cached) = " + v;
}

std::optional<std::string> sigma_sup(FiniteInvSemigroup const& s, std::vector<ElementId> const& a)
{
    auto top = s.sup(a);
    if (!top)
        return std::nullopt;
    std::vector<ElementId> src;
    for (ElementId x : a)
        src.push_back(s.source(x));
    auto ssup = s.sup(src);
    if (!ssup)
        return "sup of sources missing";
    if (*ssup != s.source(*top))
        return "sup of sources != source of sup";
    return std::nullopt;
}

// nullopt also when the guard does not apply; `applied` tells which.
std::optional<std::string> conditional_distributivity(FiniteInvSemigroup const& s, ElementId t,
                                                      std::vector<ElementId> const& a, bool& applied)
{
    applied = false;
    auto top = s.sup(a);
    if (!top)
        return std::nullopt;
    ElementId guard = s.source(t);
    for (ElementId x : a)
        if (!s.le(s.mul(x, s.inverse(x)), guard))
            return std::nullopt;
    applied = true;
    std::vector<ElementId> ta;
    for (ElementId x : a)
        ta.push_back(s.mul(t, x));
    auto sup = s.sup(ta);
    if (!sup)
        return "sup of sA missing";
    if (*sup != s.mul(t, *top))
        return "sup of sA != s (sup A)";
    return std::nullopt;
}

std::optional<std::string> greatest_of_translate(FiniteInvSemigroup const& s, ElementId d,
                                                 std::vector<ElementId> const& dset)
{
    ElementId e = s.source(d);
    if (s.mul(d, e) != d)
        return "d not in D d*d";
    for (ElementId x : dset)
        if (!s.le(s.mul(x, e), d))
            return "d not above D d*d";
    return std::nullopt;
}

std::optional<std::string> mirror_instance(FiniteContext const& ctx, std::vector<ElementId> const& delta)
{
    auto const& s = ctx.s();
    auto const& ip = ctx.sigma();
    std::vector<std::size_t> idx;
    for (ElementId e : delta) {
        auto i = ip.index_of(e);
        if (!i)
            return "member is not idempotent";
        idx.push_back(*i);
    }
    if (!is_directed(ip.poset, idx))
        return std::nullopt;
    auto in_sigma = sup(ip.poset, idx);
    if (!in_sigma)
        return std::nullopt;
    auto in_s = s.sup(delta);
    if (!in_s)
        return "sup among idempotents " + s.name_of(ip.embedding[*in_sigma]) + " is not a sup in S";
    if (*in_s != ip.embedding[*in_sigma])
        return "sups differ";
    return std::nullopt;
}

std::optional<std::string> ssc_instance(FiniteInvSemigroup const& s, ElementId t, std::vector<ElementId> const& d)
{
    auto top = s.sup(d);
    if (!top)
        return std::nullopt;
    std::vector<ElementId> right, left;
    for (ElementId x : d) {
        right.push_back(s.mul(x, t));
        left.push_back(s.mul(t, x));
    }
    auto r = s.sup(right);
    if (!r || *r != s.mul(*top, t))
        return "sup(D s) != (sup D) s";
    auto l = s.sup(left);
    if (!l || *l != s.mul(t, *top))
        return "sup(s D) != s (sup D)";
    return std::nullopt;
}

std::optional<std::string> wb_instance(FiniteContext& ctx, ElementId x, ElementId y)
{
    auto const& s = ctx.s();
    auto const& ip = ctx.sigma();
    bool lhs = ctx.wb_s()(x, y);
    bool rhs = s.le(x, y) && ctx.wb_sigma()(*ip.index_of(s.source(x)), *ip.index_of(s.source(y)));
    if (lhs == rhs)
        return std::nullopt;
    return lhs ? "s << t but not (s <= t and σs << σt)" : "s <= t and σs << σt but not s << t";
}

std::optional<std::string> separation_instance(FiniteContext& ctx, ElementId e, ElementId x, ElementId y)
{
    auto const& s = ctx.s();
    auto const& ip = ctx.sigma();
    std::size_t ei = *ip.index_of(e);
    for (std::size_t fi = 0; fi < ip.embedding.size(); ++fi) {
        ElementId phi = ip.embedding[fi];
        if (ctx.wb_sigma()(fi, ei) && s.mul(x, phi) != s.mul(y, phi))
            return std::nullopt;
    }
    return "no φ << ε separates s and t";
}

std::optional<std::string> mult_instance(FiniteInvSemigroup const& s, WayBelow const& wb,
                                         std::function<std::size_t(ElementId)> const& idx,
                                         std::vector<ElementId> const& t)
{
    if (wb(idx(t[0]), idx(t[1])) && wb(idx(t[2]), idx(t[3])) &&
        !wb(idx(s.mul(t[0], t[2])), idx(s.mul(t[1], t[3]))))
        return "a << b, c << d but not ac << bd";
    return std::nullopt;
}

Outcome multiplicativity(FiniteContext& ctx, bool sigma_side)
{
    auto const& s = ctx.s();
    auto const& ip = ctx.sigma();
    WayBelow const& wb = sigma_side ? ctx.wb_sigma() : ctx.wb_s();
    std::vector<ElementId> domain;
    if (sigma_side)
        domain = ip.embedding;
    else
        for (ElementId x = 0; x < s.size(); ++x)
            domain.push_back(x);
    std::function<std::size_t(ElementId)> idx = [&](ElementId x) -> std::size_t {
        return sigma_side ? *ip.index_of(x) : x;
    };
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (ElementId a : domain)
        for (ElementId b : domain)
            if (wb(idx(a), idx(b)))
                pairs.emplace_back(a, b);
    Outcome out;
    for (auto [a, b] : pairs)
        for (auto [c, d] : pairs) {
            ++out.budget;
            std::vector<ElementId> t{a, b, c, d};
            if (auto why = mult_instance(s, wb, idx, t)) {
                out.holds = false;
                out.cex = make_cex(ctx, *why + (sigma_side ? " (idempotents)" : " (S)"), t);
                return out;
            }
        }
    return out;
}

} // namespace

FiniteContext::FiniteContext(std::string id, FiniteInvSemigroup s)
    : id_(std::move(id)), s_(std::move(s)), order_(FinitePoset::of(s_)), sigma_(idempotent_poset(s_))
{
}

WayBelow const& FiniteContext::wb_s()
{
    if (!wb_s_)
        wb_s_ = way_below_relation(order_);
    return *wb_s_;
}

WayBelow const& FiniteContext::wb_sigma()
{
    if (!wb_sigma_)
        wb_sigma_ = way_below_relation(sigma_.poset);
    return *wb_sigma_;
}

Outcome const& FiniteContext::mirror()
{
    if (mirror_)
        return *mirror_;
    Outcome out;
    bool exhaustive = for_each_directed(sigma_.poset, [&](Members const& d) {
        if (!out.holds)
            return;
        ++out.budget;
        std::vector<ElementId> ids;
        for (std::size_t i : d)
            ids.push_back(sigma_.embedding[i]);
        if (auto why = mirror_instance(*this, ids)) {
            out.holds = false;
            out.cex = make_cex(*this, *why, ids);
        }
    });
    out.note = sampled_note(exhaustive);
    mirror_ = std::move(out);
    return *mirror_;
}

Outcome const& FiniteContext::ssc()
{
    if (ssc_)
        return *ssc_;
    Outcome out;
    bool exhaustive = for_each_directed(order_, [&](Members const& d) {
        if (!out.holds)
            return;
        auto ids = to_ids(d);
        for (ElementId t = 0; t < s_.size(); ++t) {
            ++out.budget;
            if (auto why = ssc_instance(s_, t, ids)) {
                out.holds = false;
                std::vector<ElementId> c{t};
                c.insert(c.end(), ids.begin(), ids.end());
                out.cex = make_cex(*this, *why, c);
                return;
            }
        }
    }, kExhaustiveWork / s_.size());
    out.note = sampled_note(exhaustive);
    ssc_ = std::move(out);
    return *ssc_;
}

bool FiniteContext::meet_continuous_sigma()
{
    if (!meet_sigma_) {
        try {
            meet_sigma_ = is_meet_continuous(sigma_.poset);
        } catch (InvalidInput const&) {
            meet_sigma_ = false;
        }
    }
    return *meet_sigma_;
}

bool FiniteContext::continuous_s()
{
    if (!cont_s_)
        cont_s_ = is_continuous(order_, wb_s());
    return *cont_s_;
}

bool FiniteContext::continuous_sigma()
{
    if (!cont_sigma_)
        cont_sigma_ = is_continuous(sigma_.poset, wb_sigma());
    return *cont_sigma_;
}

bool FiniteContext::algebraic_s()
{
    if (!alg_s_)
        alg_s_ = is_algebraic(order_, wb_s());
    return *alg_s_;
}

bool FiniteContext::algebraic_sigma()
{
    if (!alg_sigma_)
        alg_sigma_ = is_algebraic(sigma_.poset, wb_sigma());
    return *alg_sigma_;
}

Outcome const& FiniteContext::multiplicative_s()
{
    if (!mult_s_)
        mult_s_ = multiplicativity(*this, false);
    return *mult_s_;
}

Outcome const& FiniteContext::multiplicative_sigma()
{
    if (!mult_sigma_)
        mult_sigma_ = multiplicativity(*this, true);
    return *mult_sigma_;
}

std::string FiniteContext::render(std::vector<ElementId> const& ids) const
{
    std::string out = "(";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            out += ", ";
        out += s_.name_of(ids[i]);
    }
    return out + ")";
}

CheckReport finite_suite(std::string const& suite, FiniteContext& ctx)
{
    auto const& s = ctx.s();
    std::size_t n = s.size();
    CheckReport r = report(ctx, suite);

    if (suite == "basic-rules") {
        for (ElementId x = 0; x < n && r.verdict == Verdict::Pass; ++x) {
            ++r.budget;
            if (auto why = basic_rules_unary(s, x))
                fail(r, make_cex(ctx, *why, {x}));
        }
        for (ElementId x = 0; x < n && r.verdict == Verdict::Pass; ++x)
            for (ElementId y = 0; y < n && r.verdict == Verdict::Pass; ++y) {
                ++r.budget;
                if (auto why = basic_rules_binary(s, x, y))
                    fail(r, make_cex(ctx, *why, {x, y}));
            }
        r.note = "exhaustive";
    } else if (suite == "order-characterizations") {
        for (ElementId x = 0; x < n && r.verdict == Verdict::Pass; ++x)
            for (ElementId y = 0; y < n && r.verdict == Verdict::Pass; ++y) {
                ++r.budget;
                if (auto why = order_characterizations(s, x, y))
                    fail(r, make_cex(ctx, *why, {x, y}));
            }
        r.note = "exhaustive";
    } else if (suite == "sigma-sup") {
        bool exhaustive = for_each_with_sup(s, ctx.order(), [&](std::vector<ElementId> const& a, ElementId) {
            if (r.verdict != Verdict::Pass)
                return;
            ++r.budget;
            if (auto why = sigma_sup(s, a))
                fail(r, make_cex(ctx, *why, a));
        });
        r.note = sampled_note(exhaustive);
    } else if (suite == "conditional-distributivity") {
        std::size_t guarded = 0;
        bool exhaustive = for_each_with_sup(s, ctx.order(), [&](std::vector<ElementId> const& a, ElementId) {
            for (ElementId t = 0; t < n && r.verdict == Verdict::Pass; ++t) {
                ++r.budget;
                bool applied = false;
                if (auto why = conditional_distributivity(s, t, a, applied)) {
                    std::vector<ElementId> ids{t};
                    ids.insert(ids.end(), a.begin(), a.end());
                    fail(r, make_cex(ctx, *why, ids));
                }
                guarded += applied;
            }
        }, kExhaustiveWork / n);
        r.note = sampled_note(exhaustive) + ", " + std::to_string(guarded) + " instances met the guard";
    } else if (suite == "greatest-of-translate") {
        bool exhaustive = for_each_directed(ctx.order(), [&](Members const& d) {
            auto ids = to_ids(d);
            for (ElementId x : ids) {
                if (r.verdict != Verdict::Pass)
                    return;
                ++r.budget;
                if (auto why = greatest_of_translate(s, x, ids)) {
                    std::vector<ElementId> c{x};
                    c.insert(c.end(), ids.begin(), ids.end());
                    fail(r, make_cex(ctx, *why, c));
                }
            }
        });
        r.note = sampled_note(exhaustive);
    } else if (suite == "mirror") {
        auto const& m = ctx.mirror();
        r.budget = m.budget;
        r.facts = {{"mirror", m.holds}};
        r.note = m.note + "; finite carriers are mirror";
        if (!m.holds)
            fail(r, *m.cex);
    } else if (suite == "directed-completeness-mirror") {
        if (!ctx.mirror().holds) {
            not_applicable(r, "not a mirror semigroup");
            return r;
        }
        bool s_complete = true, sigma_complete = true;
        for_each_directed(ctx.order(), [&](Members const& d) {
            ++r.budget;
            s_complete = s_complete && s.sup(to_ids(d)).has_value();
        });
        for_each_directed(ctx.sigma().poset, [&](Members const& d) {
            ++r.budget;
            sigma_complete = sigma_complete && sup(ctx.sigma().poset, d).has_value();
        });
        r.facts = {{"s_conditionally_complete", s_complete}, {"sigma_conditionally_complete", sigma_complete}};
        r.note = "both sides hold trivially on finite carriers; weak evidence";
        if (s_complete != sigma_complete)
            fail(r, make_cex(ctx, "conditional directed-completeness differs between S and its idempotents", {}));
    } else if (suite == "meet-continuity-mirror") {
        if (!ctx.mirror().holds) {
            not_applicable(r, "not a mirror semigroup");
            return r;
        }
        auto const& ssc = ctx.ssc();
        bool meet = ctx.meet_continuous_sigma();
        r.budget = ssc.budget;
        r.facts = {{"separately_scott_continuous", ssc.holds}, {"sigma_meet_continuous", meet}};
        r.note = ssc.note;
        if (ssc.holds != meet) {
            if (ssc.cex)
                fail(r, *ssc.cex);
            else
                fail(r, make_cex(ctx, "idempotents not meet-continuous while S is separately Scott-continuous", {}));
        }
    } else if (suite == "wb-characterization") {
        if (!ctx.mirror().holds || !ctx.ssc().holds) {
            not_applicable(r, "needs a separately Scott-continuous mirror semigroup");
            return r;
        }
        for (ElementId x = 0; x < n && r.verdict == Verdict::Pass; ++x)
            for (ElementId y = 0; y < n && r.verdict == Verdict::Pass; ++y) {
                ++r.budget;
                if (auto why = wb_instance(ctx, x, y))
                    fail(r, make_cex(ctx, *why, {x, y}));
            }
        r.note = ctx.wb_s().exhaustive_subsets ? "way-below by all subsets" : "way-below by ideal enumeration";
    } else if (suite == "multiplicativity-mirror") {
        if (!ctx.mirror().holds || !ctx.ssc().holds) {
            not_applicable(r, "needs a separately Scott-continuous mirror semigroup");
            return r;
        }
        auto const& ms = ctx.multiplicative_s();
        auto const& mg = ctx.multiplicative_sigma();
        r.budget = ms.budget + mg.budget;
        r.facts = {{"multiplicative_s", ms.holds}, {"multiplicative_sigma", mg.holds}};
        if (ms.holds != mg.holds)
            fail(r, ms.cex ? *ms.cex : *mg.cex);
    } else if (suite == "mirror-theorem") {
        if (!ctx.mirror().holds) {
            not_applicable(r, "not a mirror semigroup");
            return r;
        }
        bool cs = ctx.continuous_s(), cg = ctx.continuous_sigma();
        bool as = ctx.algebraic_s(), ag = ctx.algebraic_sigma();
        r.budget = n + ctx.sigma().embedding.size();
        r.facts = {{"continuous_s", cs}, {"continuous_sigma", cg}, {"algebraic_s", as}, {"algebraic_sigma", ag}};
        if (cs != cg)
            fail(r, make_cex(ctx, "continuity differs between S and its idempotents", {}));
        else if (as != ag)
            fail(r, make_cex(ctx, "algebraicity differs between S and its idempotents", {}));
    } else if (suite == "separation-criterion") {
        if (!ctx.continuous_sigma()) {
            not_applicable(r, "idempotents not continuous");
            return r;
        }
        std::optional<Counterexample> first;
        for (ElementId e : s.idempotents().members) {
            auto h = s.h_class(e);
            for (std::size_t i = 0; i < h.size() && !first; ++i)
                for (std::size_t j = i + 1; j < h.size() && !first; ++j) {
                    ++r.budget;
                    if (auto why = separation_instance(ctx, e, h[i], h[j]))
                        first = make_cex(ctx, *why, {e, h[i], h[j]});
                }
        }
        r.budget = std::max<std::size_t>(r.budget, 1);
        bool criterion = !first;
        bool mirror = ctx.mirror().holds;
        r.facts = {{"criterion", criterion}, {"mirror", mirror}};
        if (!criterion)
            fail(r, *first);
        else if (!mirror)
            fail(r, make_cex(ctx, "criterion holds but the carrier is not mirror", {}));
    } else if (suite == "continuity-implies-ssc") {
        if (!ctx.mirror().holds || !ctx.continuous_s()) {
            not_applicable(r, "needs a continuous mirror semigroup");
            return r;
        }
        auto const& ssc = ctx.ssc();
        r.budget = ssc.budget;
        r.note = ssc.note;
        r.facts = {{"separately_scott_continuous", ssc.holds}};
        if (!ssc.holds)
            fail(r, *ssc.cex);
    } else {
        throw InvalidInput("unknown suite: " + suite);
    }
    return r;
}

bool finite_replay(CheckReport const& r, FiniteContext& ctx)
{
    if (r.verdict != Verdict::Fail || !r.counterexample)
        return false;
    auto const& s = ctx.s();
    auto const& ids = r.counterexample->ids;
    for (ElementId x : ids)
        if (x >= s.size())
            return false;
    auto rest = [&] { return std::vector<ElementId>(ids.begin() + 1, ids.end()); };
    std::string const& suite = r.suite;

    if (suite == "basic-rules") {
        if (ids.size() == 1)
            return basic_rules_unary(s, ids[0]).has_value();
        return ids.size() == 2 && basic_rules_binary(s, ids[0], ids[1]).has_value();
    }
    if (suite == "order-characterizations")
        return ids.size() == 2 && order_characterizations(s, ids[0], ids[1]).has_value();
    if (suite == "sigma-sup")
        return !ids.empty() && sigma_sup(s, ids).has_value();
    if (suite == "conditional-distributivity") {
        bool applied = false;
        return ids.size() >= 2 && conditional_distributivity(s, ids[0], rest(), applied).has_value();
    }
    if (suite == "greatest-of-translate")
        return ids.size() >= 2 && greatest_of_translate(s, ids[0], rest()).has_value();
    if (suite == "mirror")
        return !ids.empty() && mirror_instance(ctx, ids).has_value();
    if (suite == "wb-characterization")
        return ids.size() == 2 && wb_instance(ctx, ids[0], ids[1]).has_value();
    if (suite == "separation-criterion" && ids.size() == 3)
        return separation_instance(ctx, ids[0], ids[1], ids[2]).has_value();
    if ((suite == "meet-continuity-mirror" || suite == "continuity-implies-ssc") && ids.size() >= 2)
        return ssc_instance(s, ids[0], rest()).has_value();
    if (suite == "multiplicativity-mirror" && ids.size() == 4) {
        bool sigma_side = r.counterexample->what.find("idempotents") != std::string::npos;
        auto const& ip = ctx.sigma();
        if (sigma_side) {
            for (ElementId x : ids)
                if (!ip.index_of(x))
                    return false;
            return mult_instance(s, ctx.wb_sigma(), [&](ElementId x) { return *ip.index_of(x); }, ids).has_value();
        }
        return mult_instance(s, ctx.wb_s(), [](ElementId x) { return std::size_t(x); }, ids).has_value();
    }
    // Global properties: the whole carrier is the counterexample.
    return finite_suite(suite, ctx).verdict == Verdict::Fail;
}

} // namespace invsg::detail
