#include <algorithm>
#include <functional>
#include <string_view>

#include "checkers_internal.hpp"
#include "invsg/errors.hpp"

namespace invsg::detail {

namespace {

using Elems = std::vector<Elem>;

// A chain whose sup has been checked against the candidate bounds.
struct Chain {
    std::string label;
    Elems m;
    Elem sup;
};

Rng rng_for(FamilyOptions const& o, std::string_view tag)
{
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : tag)
        h = (h ^ std::uint8_t(ch)) * 1099511628211ull;
    return Rng(o.seed * 0x9e3779b97f4a7c15ull ^ h);
}

std::string render(SymbolicFamily const& f, Elems const& xs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + f.format(xs[i]);
    return out + "]";
}

Counterexample family_cex(SymbolicFamily const& f, std::string what, Elems elems, std::string chain = {})
{
    Counterexample c;
    c.rendered = what;
    if (!elems.empty())
        c.rendered += " at " + render(f, elems);
    if (!chain.empty())
        c.rendered += " on chain " + chain;
    c.what = std::move(what);
    c.elems = std::move(elems);
    c.chain = std::move(chain);
    return c;
}

void add_unique(Elems& v, Elem const& x)
{
    if (std::find(v.begin(), v.end(), x) == v.end())
        v.push_back(x);
}

Elems s_candidates(SymbolicFamily const& f, Rng& rng, std::size_t n = 48)
{
    Elems out;
    for (auto const& x : f.landmarks())
        add_unique(out, x);
    if (auto one = f.identity())
        add_unique(out, *one);
    for (std::size_t i = 0; i < n; ++i)
        add_unique(out, f.sample(rng));
    return out;
}

Elems sigma_candidates(SymbolicFamily const& f, Rng& rng, std::size_t n = 48)
{
    Elems out;
    for (auto const& x : f.landmarks())
        if (f.is_idempotent(x))
            add_unique(out, x);
    if (auto one = f.identity())
        add_unique(out, *one);
    for (std::size_t i = 0; i < n; ++i)
        add_unique(out, f.sample_idempotent(rng));
    return out;
}

Elems with(Elems v, Elem const& x)
{
    add_unique(v, x);
    return v;
}

// nullopt when `m` increases, `sup` bounds it, and `sup` lies below every
// candidate that bounds it. Candidates are coarse next to the chain depth,
// so a candidate above the last member counts as an upper bound.
std::optional<std::string> sup_failure(SymbolicFamily const& f, Elems const& m, Elem const& sup,
                                       Elems const& cands)
{
    for (std::size_t k = 0; k + 1 < m.size(); ++k)
        if (!f.le(m[k], m[k + 1]))
            return "chain does not increase at member " + std::to_string(k);
    for (std::size_t k = 0; k < m.size(); ++k)
        if (!f.le(m[k], sup))
            return "claimed sup " + f.format(sup) + " is not above member " + std::to_string(k);
    if (m.empty())
        return std::nullopt;
    for (auto const& u : cands)
        if (f.le(m.back(), u) && !f.le(sup, u))
            return "claimed sup " + f.format(sup) + " is not below upper bound " + f.format(u);
    return std::nullopt;
}

void mark_broken(Outcome& o, Counterexample c)
{
    if (!o.broken)
        o.broken = std::move(c);
}

void mark_failed(Outcome& o, Counterexample c)
{
    if (o.holds) {
        o.holds = false;
        o.cex = std::move(c);
    }
}

Elems pick_ys(SymbolicFamily const& f, Rng& rng, std::size_t n, bool idempotent)
{
    Elems out;
    for (auto const& x : f.landmarks())
        if (!idempotent || f.is_idempotent(x))
            add_unique(out, x);
    for (std::size_t i = 0; i < n; ++i)
        add_unique(out, idempotent ? f.sample_idempotent(rng) : f.sample(rng));
    return out;
}

// Chains with a verified sup in S: the family's chains over the
// idempotents that claim one, plus approximant chains when available.
std::vector<Chain> s_chains(FamilyContext const& ctx, Rng& rng, Elems const& cands, Outcome& o)
{
    auto const& f = ctx.f();
    std::vector<ChainWitness> ws;
    for (auto& w : f.sigma_chains())
        if (w.claimed_sup_in_s)
            ws.push_back(std::move(w));
    if (f.has_way_below())
        for (auto const& y : pick_ys(f, rng, 8, false))
            ws.push_back(f.approximants(y));
    std::vector<Chain> out;
    for (auto const& w : ws) {
        if (!w.claimed_sup_in_s)
            continue;
        Chain c{w.label, w.members(ctx.opts().depth), *w.claimed_sup_in_s};
        if (auto why = sup_failure(f, c.m, c.sup, with(cands, c.sup)))
            mark_broken(o, family_cex(f, *why, {c.sup}, c.label));
        else
            out.push_back(std::move(c));
    }
    return out;
}

std::vector<Chain> sigma_chain_set(FamilyContext const& ctx, Rng& rng, Elems const& cands, Outcome& o)
{
    auto const& f = ctx.f();
    std::vector<ChainWitness> ws = f.sigma_chains();
    if (f.has_way_below())
        for (auto const& e : pick_ys(f, rng, 8, true))
            ws.push_back(f.sigma_approximants(e));
    std::vector<Chain> out;
    for (auto const& w : ws) {
        if (!w.claimed_sup_in_sigma)
            continue;
        Chain c{w.label, w.members(ctx.opts().depth), *w.claimed_sup_in_sigma};
        bool idem = f.is_idempotent(c.sup) &&
                    std::all_of(c.m.begin(), c.m.end(), [&](Elem const& x) { return f.is_idempotent(x); });
        if (!idem) {
            mark_broken(o, family_cex(f, "chain leaves the idempotents", {c.sup}, c.label));
            continue;
        }
        if (auto why = sup_failure(f, c.m, c.sup, with(cands, c.sup)))
            mark_broken(o, family_cex(f, *why, {c.sup}, c.label));
        else
            out.push_back(std::move(c));
    }
    return out;
}

// Elements that are sup-checked against a chain after multiplying it by s.
Elems translators(SymbolicFamily const& f, Rng& rng, bool idempotent)
{
    return pick_ys(f, rng, 6, idempotent);
}

Elems mapped(Elems const& m, std::function<Elem(Elem const&)> const& g)
{
    Elems out;
    out.reserve(m.size());
    for (auto const& x : m)
        out.push_back(g(x));
    return out;
}

// Whether some member among the first `depth` is above x. Members are
// generated one at a time since approximants usually pass x early.
bool reaches_above(ChainWitness const& w, Elem const& x, SymbolicFamily const& f, std::size_t depth)
{
    std::size_t n = w.kind == ChainWitness::Kind::FiniteList ? std::min(depth, w.length) : depth;
    for (std::size_t k = 0; k < n; ++k)
        if (f.le(x, w.generator(k)))
            return true;
    return false;
}

// --- per-instance predicates, shared with replay ---

std::optional<std::string> basic_rules_unary(SymbolicFamily const& f, Elem const& x)
{
    Elem xi = f.inv(x);
    if (!f.is_idempotent(f.op(x, xi)))
        return "s s* not idempotent";
    if (!f.is_idempotent(f.op(xi, x)))
        return "s* s not idempotent";
    if (f.inv(xi) != x)
        return "(s*)* != s";
    if (f.op(f.op(x, xi), x) != x)
        return "s s* s != s";
    if (f.is_idempotent(x) && xi != x)
        return "idempotent s with s* != s";
    return std::nullopt;
}

std::optional<std::string> basic_rules_binary(SymbolicFamily const& f, Elem const& x, Elem const& y)
{
    if (f.inv(f.op(x, y)) != f.op(f.inv(y), f.inv(x)))
        return "(st)* != t* s*";
    return std::nullopt;
}

std::optional<std::string> basic_rules_ternary(SymbolicFamily const& f, Elem const& x, Elem const& y,
                                               Elem const& z)
{
    if (f.op(f.op(x, y), z) != f.op(x, f.op(y, z)))
        return "(st)u != s(tu)";
    return std::nullopt;
}

std::optional<std::string> order_characterizations(SymbolicFamily const& f, Elem const& x, Elem const& y,
                                                   Elems const& idem)
{
    Elem xi = f.inv(x), yi = f.inv(y);
    auto exists = [&](Elem const& hint, auto&& pred) {
        if (pred(hint))
            return true;
        return std::any_of(idem.begin(), idem.end(), pred);
    };
    bool p[6] = {
        exists(f.sigma(x), [&](Elem const& e) { return f.op(y, e) == x; }),
        exists(f.sigma(xi), [&](Elem const& e) { return f.op(yi, e) == xi; }),
        x == f.op(f.op(y, xi), x),
        exists(f.op(x, xi), [&](Elem const& e) { return f.op(e, y) == x; }),
        x == f.op(f.op(x, xi), y),
        f.le(x, y),
    };
    if (std::all_of(std::begin(p), std::end(p), [&](bool b) { return b == p[0]; }))
        return std::nullopt;
    std::string v;
    for (bool b : p)
        v += b ? '1' : '0';
    return "characterizations disagree (s=te, s*<=t*, s=ts*s, s=et, s=ss*t, oracle) = " + v;
}

std::optional<std::string> wb_instance(SymbolicFamily const& f, Elem const& x, Elem const& y)
{
    bool lhs = f.wb(x, y);
    bool rhs = f.le(x, y) && f.wb_sigma(f.sigma(x), f.sigma(y));
    if (lhs == rhs)
        return std::nullopt;
    return lhs ? "s << t but not (s <= t and σs << σt)" : "s <= t and σs << σt but not s << t";
}

std::optional<std::string> mult_instance(SymbolicFamily const& f, bool sigma_side, Elems const& t)
{
    auto wb = [&](Elem const& a, Elem const& b) { return sigma_side ? f.wb_sigma(a, b) : f.wb(a, b); };
    if (wb(t[0], t[1]) && wb(t[2], t[3]) && !wb(f.op(t[0], t[2]), f.op(t[1], t[3])))
        return std::string("a << b, c << d but not ac << bd") + (sigma_side ? " (idempotents)" : " (S)");
    return std::nullopt;
}

// Idempotents way-below e that the separation search may use.
Elems separators(FamilyContext const& ctx, Elem const& e, Rng& rng)
{
    auto const& f = ctx.f();
    Elems out = f.sigma_approximants(e).members(ctx.opts().depth);
    for (int i = 0; i < 16; ++i) {
        Elem phi = f.op(e, f.sample_idempotent(rng));
        if (f.wb_sigma(phi, e))
            add_unique(out, phi);
    }
    return out;
}

std::optional<std::string> separation_instance(FamilyContext const& ctx, Elem const& e, Elem const& s,
                                               Elem const& t, Rng& rng)
{
    auto const& f = ctx.f();
    for (auto const& phi : separators(ctx, e, rng))
        if (f.wb_sigma(phi, e) && f.op(s, phi) != f.op(t, phi))
            return std::nullopt;
    return "no φ << ε separates s and t";
}

// Mirror evidence for one chain of idempotents. Fills `o` with a failure
// when the chain's sup among idempotents is not its sup in S.
void mirror_chain(FamilyContext const& ctx, ChainWitness const& w, Elems const& sig_cands,
                  Elems const& s_cands, Outcome& o)
{
    auto const& f = ctx.f();
    auto m = w.members(ctx.opts().depth);
    ++o.budget;
    if (!std::all_of(m.begin(), m.end(), [&](Elem const& x) { return f.is_idempotent(x); })) {
        mark_broken(o, family_cex(f, "chain leaves the idempotents", {}, w.label));
        return;
    }
    if (!w.claimed_sup_in_sigma) {
        mark_broken(o, family_cex(f, "chain has no claimed sup among idempotents", {}, w.label));
        return;
    }
    Elem const& delta = *w.claimed_sup_in_sigma;
    if (auto why = sup_failure(f, m, delta, with(sig_cands, delta))) {
        mark_broken(o, family_cex(f, *why, {delta}, w.label));
        return;
    }
    for (auto const& u : w.claimed_upper_bounds)
        if (!std::all_of(m.begin(), m.end(), [&](Elem const& x) { return f.le(x, u); })) {
            mark_broken(o, family_cex(f, "claimed upper bound is not one", {u}, w.label));
            return;
        }
    Elems cands = with(s_cands, delta);
    for (auto const& u : w.claimed_upper_bounds)
        add_unique(cands, u);
    if (w.claimed_sup_in_s)
        add_unique(cands, *w.claimed_sup_in_s);
    Elems ubs, bad;
    for (auto const& u : cands)
        if (m.empty() || f.le(m.back(), u)) {
            ubs.push_back(u);
            if (!f.le(delta, u))
                bad.push_back(u);
        }
    if (w.claimed_sup_in_s) {
        if (*w.claimed_sup_in_s != delta) {
            if (auto why = sup_failure(f, m, *w.claimed_sup_in_s, cands))
                mark_broken(o, family_cex(f, *why, {*w.claimed_sup_in_s}, w.label));
            else
                mark_failed(o, family_cex(f, "sup in S differs from the sup among idempotents",
                                          {delta, *w.claimed_sup_in_s}, w.label));
        } else if (!bad.empty()) {
            mark_broken(o, family_cex(f, "claimed sup in S is not below an upper bound", {delta, bad[0]},
                                      w.label));
        }
        return;
    }
    if (bad.empty()) {
        mark_broken(o, family_cex(f, "chain claimed to have no sup in S, but its sup among idempotents is least",
                                  {delta}, w.label));
        return;
    }
    for (auto const& u : ubs)
        if (std::all_of(ubs.begin(), ubs.end(), [&](Elem const& v) { return f.le(u, v); })) {
            mark_broken(o, family_cex(f, "chain claimed to have no sup in S, but it has one", {u}, w.label));
            return;
        }
    Elems shown{delta};
    for (auto const& u : bad)
        shown.push_back(u);
    mark_failed(o, family_cex(f, "sup among idempotents is not a sup in S: upper bounds are incomparable", shown,
                              w.label));
}

CheckReport report(FamilyContext const& ctx, std::string suite)
{
    CheckReport r;
    r.suite = std::move(suite);
    r.subject = ctx.f().name();
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

// Broken evidence decides the report before the property does.
bool fail_if_broken(CheckReport& r, Outcome const& o)
{
    if (!o.broken)
        return false;
    Counterexample c = *o.broken;
    c.what = "family evidence refuted: " + c.what;
    c.rendered = "family evidence refuted: " + c.rendered;
    fail(r, std::move(c));
    return true;
}

bool needs_way_below(std::string const& suite)
{
    return suite == "wb-characterization" || suite == "multiplicativity-mirror" || suite == "mirror-theorem" ||
           suite == "separation-criterion" || suite == "continuity-implies-ssc";
}

} // namespace

FamilyContext::FamilyContext(FamilyPtr f, FamilyOptions opts) : f_(std::move(f)), opts_(opts) {}

Outcome const& FamilyContext::mirror()
{
    if (mirror_)
        return *mirror_;
    Outcome o;
    Rng rng = rng_for(opts_, "mirror");
    Elems sig = sigma_candidates(*f_, rng), sc = s_candidates(*f_, rng);
    auto chains = f_->sigma_chains();
    for (auto const& w : chains)
        mirror_chain(*this, w, sig, sc, o);
    o.note = "chain route over " + std::to_string(chains.size()) + " chains";
    return *(mirror_ = std::move(o));
}

Outcome const& FamilyContext::reduced()
{
    if (reduced_)
        return *reduced_;
    Outcome o;
    Rng rng = rng_for(opts_, "reduced");
    auto const& f = *f_;
    auto check = [&](Elem const& s, Elem const& e) {
        ++o.budget;
        Elem eps = f.op(s, e);
        if (!f.is_idempotent(eps) || f.is_idempotent(s))
            return;
        if (!f.le(eps, s))
            mark_broken(o, family_cex(f, "s e not below s", {s, e}));
        else
            mark_failed(o, family_cex(f, "idempotent below a non-idempotent", {eps, s}));
    };
    Elems idem = sigma_candidates(f, rng, 8);
    for (auto const& s : f.landmarks())
        for (auto const& e : idem)
            check(s, e);
    for (std::size_t i = 0; i < opts_.budget / 8 && o.holds; ++i)
        check(f.sample(rng), f.sample_idempotent(rng));
    o.note = "sampled";
    return *(reduced_ = std::move(o));
}

Outcome const& FamilyContext::projection()
{
    if (projection_)
        return *projection_;
    Outcome o;
    auto const& f = *f_;
    auto lm = f.landmarks();
    if (lm.empty() || !f.projection(lm[0])) {
        o.holds = false;
        o.applicable = false;
        o.note = "no projection";
        return *(projection_ = std::move(o));
    }
    Rng rng = rng_for(opts_, "projection");
    auto check = [&](Elem const& y, Elem const& e) {
        ++o.budget;
        Elem x = f.op(y, e);
        Elem jx = *f.projection(x), jy = *f.projection(y);
        if (!f.is_idempotent(jx))
            mark_failed(o, family_cex(f, "j(s) not idempotent", {x}));
        else if (!f.le(jx, x))
            mark_failed(o, family_cex(f, "j(s) not below s", {x}));
        else if (*f.projection(jx) != jx)
            mark_failed(o, family_cex(f, "j does not fix idempotents", {jx}));
        else if (!f.le(jx, jy))
            mark_failed(o, family_cex(f, "j not order-preserving", {x, y}));
    };
    Elems idem = sigma_candidates(f, rng, 8);
    for (auto const& y : lm)
        for (auto const& e : idem)
            check(y, e);
    for (std::size_t i = 0; i < opts_.budget / 8 && o.holds; ++i)
        check(f.sample(rng), f.sample_idempotent(rng));
    o.note = "sampled";
    return *(projection_ = std::move(o));
}

Outcome const& FamilyContext::ssc()
{
    if (ssc_)
        return *ssc_;
    Outcome o;
    Rng rng = rng_for(opts_, "ssc");
    auto const& f = *f_;
    Elems cands = s_candidates(f, rng);
    auto chains = s_chains(*this, rng, cands, o);
    Elems ts = translators(f, rng, false);
    for (auto const& c : chains)
        for (auto const& t : ts) {
            ++o.budget;
            Elem rs = f.op(c.sup, t), ls = f.op(t, c.sup);
            if (sup_failure(f, mapped(c.m, [&](Elem const& x) { return f.op(x, t); }), rs, with(cands, rs)))
                mark_failed(o, family_cex(f, "sup(D s) != (sup D) s", {t, c.sup}, c.label));
            else if (sup_failure(f, mapped(c.m, [&](Elem const& x) { return f.op(t, x); }), ls, with(cands, ls)))
                mark_failed(o, family_cex(f, "sup(s D) != s (sup D)", {t, c.sup}, c.label));
        }
    o.note = std::to_string(chains.size()) + " chains";
    return *(ssc_ = std::move(o));
}

Outcome const& FamilyContext::meet_continuous_sigma()
{
    if (meet_sigma_)
        return *meet_sigma_;
    Outcome o;
    Rng rng = rng_for(opts_, "meet");
    auto const& f = *f_;
    Elems cands = sigma_candidates(f, rng);
    auto chains = sigma_chain_set(*this, rng, cands, o);
    Elems es = translators(f, rng, true);
    for (auto const& c : chains)
        for (auto const& e : es) {
            ++o.budget;
            Elem sup = f.op(e, c.sup);
            if (sup_failure(f, mapped(c.m, [&](Elem const& x) { return f.op(e, x); }), sup, with(cands, sup)))
                mark_failed(o, family_cex(f, "sup(ε Δ) != ε (sup Δ)", {e, c.sup}, c.label));
        }
    o.note = std::to_string(chains.size()) + " chains";
    return *(meet_sigma_ = std::move(o));
}

namespace {

// Continuity evidence: approximant chains way-below y with sup y, and no
// element the oracle puts way-below y escaping them.
Outcome continuity(FamilyContext const& ctx, bool sigma_side)
{
    Outcome o;
    auto const& f = ctx.f();
    if (!f.has_way_below()) {
        o.applicable = false;
        o.note = "no way-below oracle";
        return o;
    }
    Rng rng = rng_for(ctx.opts(), sigma_side ? "cont-sigma" : "cont-s");
    Elems cands = sigma_side ? sigma_candidates(f, rng) : s_candidates(f, rng);
    auto wb = [&](Elem const& a, Elem const& b) { return sigma_side ? f.wb_sigma(a, b) : f.wb(a, b); };
    for (auto const& y : pick_ys(f, rng, ctx.opts().budget / 100, sigma_side)) {
        ++o.budget;
        auto w = sigma_side ? f.sigma_approximants(y) : f.approximants(y);
        auto const& claim = sigma_side ? w.claimed_sup_in_sigma : w.claimed_sup_in_s;
        auto m = w.members(ctx.opts().depth);
        if (!claim || *claim != y) {
            mark_broken(o, family_cex(f, "approximants do not claim sup y", {y}, w.label));
            continue;
        }
        if (auto why = sup_failure(f, m, y, with(cands, y))) {
            mark_broken(o, family_cex(f, *why, {y}, w.label));
            continue;
        }
        for (auto const& a : m)
            if (!wb(a, y)) {
                mark_broken(o, family_cex(f, "approximant not way-below y", {a, y}, w.label));
                break;
            }
        for (int i = 0; i < 4; ++i) {
            Elem x = f.op(y, f.sample_idempotent(rng));
            if (wb(x, y) && std::none_of(m.begin(), m.end(), [&](Elem const& a) { return f.le(x, a); }))
                mark_broken(o, family_cex(f, "x << y but no approximant is above x", {x, y}, w.label));
        }
    }
    o.note = "approximant chains";
    return o;
}

Outcome algebraicity(FamilyContext const& ctx, bool sigma_side)
{
    Outcome o;
    auto const& f = ctx.f();
    if (!f.has_way_below()) {
        o.applicable = false;
        o.note = "no way-below oracle";
        return o;
    }
    Rng rng = rng_for(ctx.opts(), sigma_side ? "alg-sigma" : "alg-s");
    Elems cands = sigma_side ? sigma_candidates(f, rng, 200) : s_candidates(f, rng, 200);
    auto wb = [&](Elem const& a, Elem const& b) { return sigma_side ? f.wb_sigma(a, b) : f.wb(a, b); };
    auto nw = sigma_side ? f.sigma_non_algebraic_witness() : f.non_algebraic_witness();
    if (nw) {
        o.holds = false;
        Elems pool = cands;
        for (auto const& a : (sigma_side ? f.sigma_approximants(nw->y) : f.approximants(nw->y)).members(ctx.opts().depth))
            add_unique(pool, a);
        Elems shown{nw->y};
        if (nw->bound) {
            shown.push_back(*nw->bound);
            if (f.le(nw->y, *nw->bound))
                mark_broken(o, family_cex(f, "bound is above y", shown));
        }
        for (auto const& c : pool) {
            ++o.budget;
            if (!f.le(c, nw->y) || !wb(c, c))
                continue;
            if (!nw->bound || !f.le(c, *nw->bound)) {
                mark_broken(o, family_cex(f, "compact below y escapes the non-algebraicity witness", {c, nw->y}));
                break;
            }
        }
        o.cex = family_cex(f, nw->bound ? "compacts below y have an upper bound not above y"
                                        : "no compact element below y",
                           shown);
        o.note = "non-algebraicity witness";
        return o;
    }
    for (auto const& y : pick_ys(f, rng, ctx.opts().budget / 100, sigma_side)) {
        ++o.budget;
        auto w = sigma_side ? f.sigma_compact_approximants(y) : f.compact_approximants(y);
        if (!w) {
            mark_broken(o, family_cex(f, "no compact approximants", {y}));
            continue;
        }
        auto m = w->members(ctx.opts().depth);
        if (auto why = sup_failure(f, m, y, with(cands, y)))
            mark_broken(o, family_cex(f, *why, {y}, w->label));
        for (auto const& c : m)
            if (!wb(c, c)) {
                mark_broken(o, family_cex(f, "compact approximant is not compact", {c}, w->label));
                break;
            }
    }
    o.note = "compact approximant chains";
    return o;
}

Outcome multiplicativity(FamilyContext const& ctx, bool sigma_side)
{
    Outcome o;
    auto const& f = ctx.f();
    if (!f.has_way_below()) {
        o.applicable = false;
        o.note = "no way-below oracle";
        return o;
    }
    Rng rng = rng_for(ctx.opts(), sigma_side ? "mult-sigma" : "mult-s");
    auto draw = [&] { return sigma_side ? f.sample_idempotent(rng) : f.sample(rng); };
    auto below = [&](Elem const& y) {
        auto w = sigma_side ? f.sigma_approximants(y) : f.approximants(y);
        std::size_t n = ctx.opts().depth;
        if (w.kind == ChainWitness::Kind::FiniteList)
            n = std::min(n, w.length);
        return w.generator(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    };
    for (std::size_t i = 0; i < ctx.opts().budget / 4 && o.holds; ++i) {
        Elem b = draw(), d = draw();
        Elems t{below(b), b, below(d), d};
        ++o.budget;
        if (auto why = mult_instance(f, sigma_side, t))
            mark_failed(o, family_cex(f, *why, t));
    }
    o.note = "sampled";
    return o;
}

} // namespace

Outcome const& FamilyContext::continuous_s()
{
    return cont_s_ ? *cont_s_ : *(cont_s_ = continuity(*this, false));
}

Outcome const& FamilyContext::continuous_sigma()
{
    return cont_sigma_ ? *cont_sigma_ : *(cont_sigma_ = continuity(*this, true));
}

Outcome const& FamilyContext::algebraic_s()
{
    return alg_s_ ? *alg_s_ : *(alg_s_ = algebraicity(*this, false));
}

Outcome const& FamilyContext::algebraic_sigma()
{
    return alg_sigma_ ? *alg_sigma_ : *(alg_sigma_ = algebraicity(*this, true));
}

Outcome const& FamilyContext::multiplicative_s()
{
    return mult_s_ ? *mult_s_ : *(mult_s_ = multiplicativity(*this, false));
}

Outcome const& FamilyContext::multiplicative_sigma()
{
    return mult_sigma_ ? *mult_sigma_ : *(mult_sigma_ = multiplicativity(*this, true));
}

FiniteContext* FamilyContext::shadow()
{
    if (!shadow_built_) {
        shadow_built_ = true;
        if (auto s = f_->finite_shadow())
            shadow_ = std::make_unique<FiniteContext>(f_->name(), std::move(*s));
    }
    return shadow_.get();
}

CheckReport family_suite(std::string const& suite, FamilyContext& ctx)
{
    auto const& f = ctx.f();
    auto const& opts = ctx.opts();
    CheckReport r = report(ctx, suite);
    Rng rng = rng_for(opts, suite);

    if (needs_way_below(suite) && !f.has_way_below()) {
        auto* sh = ctx.shadow();
        if (!sh) {
            not_applicable(r, "no way-below oracle");
            return r;
        }
        CheckReport s = finite_suite(suite, *sh);
        s.subject = f.name();
        s.note = "partial: finite shadow of " + std::to_string(sh->s().size()) + " elements" +
                 (s.note.empty() ? "" : "; " + s.note);
        return s;
    }

    if (suite == "basic-rules") {
        Elems lm = f.landmarks();
        auto draw = [&](std::size_t i) { return i < lm.size() ? lm[i] : f.sample(rng); };
        for (std::size_t i = 0; i < opts.budget && r.verdict == Verdict::Pass; ++i) {
            Elem x = draw(i), y = draw(i / 2), z = f.sample(rng);
            ++r.budget;
            if (auto why = basic_rules_unary(f, x))
                fail(r, family_cex(f, *why, {x}));
            else if (auto why2 = basic_rules_binary(f, x, y))
                fail(r, family_cex(f, *why2, {x, y}));
            else if (auto why3 = basic_rules_ternary(f, x, y, z))
                fail(r, family_cex(f, *why3, {x, y, z}));
        }
        r.note = "sampled";
    } else if (suite == "order-characterizations") {
        Elems idem = sigma_candidates(f, rng, 4);
        for (std::size_t i = 0; i < opts.budget && r.verdict == Verdict::Pass; ++i) {
            Elem y = f.sample(rng);
            Elem x = i % 2 ? f.op(y, f.sample_idempotent(rng)) : f.sample(rng);
            ++r.budget;
            if (auto why = order_characterizations(f, x, y, idem))
                fail(r, family_cex(f, *why, {x, y}));
        }
        r.note = "sampled";
    } else if (suite == "sigma-sup") {
        Outcome o;
        Elems cands = s_candidates(f, rng);
        auto chains = s_chains(ctx, rng, cands, o);
        if (fail_if_broken(r, o))
            return r;
        for (auto const& c : chains) {
            ++r.budget;
            Elem ss = f.sigma(c.sup);
            if (auto why = sup_failure(f, mapped(c.m, [&](Elem const& x) { return f.sigma(x); }), ss,
                                       with(cands, ss))) {
                fail(r, family_cex(f, "sup of sources != source of sup: " + *why, {c.sup}, c.label));
                break;
            }
        }
        r.note = std::to_string(chains.size()) + " chains";
    } else if (suite == "conditional-distributivity") {
        Outcome o;
        Elems cands = s_candidates(f, rng);
        auto chains = s_chains(ctx, rng, cands, o);
        if (fail_if_broken(r, o))
            return r;
        std::size_t guarded = 0;
        Elems ts = translators(f, rng, false);
        for (auto const& c : chains)
            for (auto const& t : ts) {
                if (r.verdict != Verdict::Pass)
                    break;
                ++r.budget;
                Elem guard = f.sigma(t);
                if (!std::all_of(c.m.begin(), c.m.end(),
                                 [&](Elem const& x) { return f.le(f.op(x, f.inv(x)), guard); }))
                    continue;
                ++guarded;
                Elem sup = f.op(t, c.sup);
                if (auto why = sup_failure(f, mapped(c.m, [&](Elem const& x) { return f.op(t, x); }), sup,
                                           with(cands, sup)))
                    fail(r, family_cex(f, "sup of sA != s (sup A): " + *why, {t, c.sup}, c.label));
            }
        r.note = std::to_string(guarded) + " guarded instances";
    } else if (suite == "greatest-of-translate") {
        Outcome o;
        Elems cands = s_candidates(f, rng);
        auto chains = s_chains(ctx, rng, cands, o);
        if (fail_if_broken(r, o))
            return r;
        for (auto const& c : chains) {
            if (c.m.empty())
                continue;
            for (std::size_t k : {std::size_t(0), c.m.size() / 2, c.m.size() - 1}) {
                Elem const& d = c.m[k];
                Elem e = f.sigma(d);
                ++r.budget;
                if (f.op(d, e) != d) {
                    fail(r, family_cex(f, "d not in D d*d", {d}, c.label));
                    return r;
                }
                for (auto const& x : c.m)
                    if (!f.le(f.op(x, e), d)) {
                        fail(r, family_cex(f, "d not above D d*d", {d, x}, c.label));
                        return r;
                    }
            }
        }
        r.note = std::to_string(chains.size()) + " chains";
    } else if (suite == "mirror") {
        auto const& m = ctx.mirror();
        auto const& red = ctx.reduced();
        auto const& proj = ctx.projection();
        r.budget = m.budget + red.budget + proj.budget;
        r.facts = {{"mirror", m.holds}, {"reduced", red.holds}};
        if (proj.applicable)
            r.facts.emplace_back("projection", proj.holds);
        if (fail_if_broken(r, m) || fail_if_broken(r, red) || fail_if_broken(r, proj))
            return r;
        bool sufficient = red.holds || (proj.applicable && proj.holds);
        if (!m.holds) {
            fail(r, *m.cex);
            if (sufficient)
                r.note = "routes disagree: a sufficient condition holds but a chain has no sup in S";
        } else {
            std::string routes = m.note;
            if (red.holds)
                routes += "; reduced";
            if (proj.applicable && proj.holds)
                routes += "; projection onto idempotents";
            r.note = routes;
        }
    } else if (suite == "directed-completeness-mirror") {
        not_applicable(r, "directed completeness is only decidable on finite carriers");
    } else if (suite == "meet-continuity-mirror") {
        if (!ctx.mirror().holds) {
            not_applicable(r, "not a mirror semigroup");
            return r;
        }
        auto const& ssc = ctx.ssc();
        auto const& meet = ctx.meet_continuous_sigma();
        r.budget = ssc.budget + meet.budget;
        r.facts = {{"separately_scott_continuous", ssc.holds}, {"meet_continuous_sigma", meet.holds}};
        if (fail_if_broken(r, ssc) || fail_if_broken(r, meet))
            return r;
        if (ssc.holds != meet.holds)
            fail(r, ssc.cex ? *ssc.cex : *meet.cex);
    } else if (suite == "wb-characterization") {
        if (!ctx.mirror().holds || !ctx.ssc().holds) {
            not_applicable(r, "needs a separately Scott-continuous mirror semigroup");
            return r;
        }
        Elems lm = f.landmarks();
        for (std::size_t i = 0; i < opts.budget && r.verdict == Verdict::Pass; ++i) {
            Elem y = f.sample(rng);
            Elem x = i % 2 == 0 ? f.op(y, f.sample_idempotent(rng)) : (i % 5 == 1 ? lm[i % lm.size()] : f.sample(rng));
            ++r.budget;
            if (auto why = wb_instance(f, x, y)) {
                fail(r, family_cex(f, *why, {x, y}));
                break;
            }
            // The oracle itself must agree with its chains.
            if (f.wb(x, y)) {
                for (auto const& w : f.chains_reaching(y)) {
                    if (!reaches_above(w, x, f, opts.depth)) {
                        fail(r, family_cex(f, "claimed x << y but a chain reaching y stays below x", {x, y}, w.label));
                        break;
                    }
                }
            } else if (auto w = f.wb_refuter(x, y)) {
                auto m = w->members(opts.depth);
                bool ok = w->claimed_sup_in_s && f.le(y, *w->claimed_sup_in_s) &&
                          !sup_failure(f, m, *w->claimed_sup_in_s, with(lm, *w->claimed_sup_in_s)) &&
                          std::none_of(m.begin(), m.end(), [&](Elem const& a) { return f.le(x, a); });
                if (!ok)
                    fail(r, family_cex(f, "refuting chain for x not<< y does not refute", {x, y}, w->label));
            } else {
                fail(r, family_cex(f, "x not<< y without a refuting chain", {x, y}));
            }
        }
        r.note = "sampled";
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
        r.note = "sampled";
    } else if (suite == "mirror-theorem") {
        if (!ctx.mirror().holds) {
            not_applicable(r, "not a mirror semigroup");
            return r;
        }
        auto const& cs = ctx.continuous_s();
        auto const& cg = ctx.continuous_sigma();
        auto const& as = ctx.algebraic_s();
        auto const& ag = ctx.algebraic_sigma();
        r.budget = cs.budget + cg.budget + as.budget + ag.budget;
        r.facts = {{"continuous_s", cs.holds},
                   {"continuous_sigma", cg.holds},
                   {"algebraic_s", as.holds},
                   {"algebraic_sigma", ag.holds}};
        for (auto const* o : {&cs, &cg, &as, &ag})
            if (fail_if_broken(r, *o))
                return r;
        if (cs.holds != cg.holds)
            fail(r, family_cex(f, "continuity differs between S and its idempotents", {}));
        else if (as.holds != ag.holds)
            fail(r, family_cex(f, "algebraicity differs between S and its idempotents", {}));
    } else if (suite == "separation-criterion") {
        auto const& cg = ctx.continuous_sigma();
        if (fail_if_broken(r, cg))
            return r;
        if (!cg.holds) {
            not_applicable(r, "idempotents not continuous");
            return r;
        }
        std::optional<Counterexample> first;
        for (auto const& e : pick_ys(f, rng, opts.budget / 200, true)) {
            auto h = f.h_class_sample(e, rng, 5);
            for (auto const& s : h)
                if (f.sigma(s) != e) {
                    Outcome o;
                    mark_broken(o, family_cex(f, "H-class sample outside the H-class", {e, s}));
                    fail_if_broken(r, o);
                    return r;
                }
            for (std::size_t i = 0; i < h.size() && !first; ++i)
                for (std::size_t j = i + 1; j < h.size() && !first; ++j) {
                    ++r.budget;
                    if (auto why = separation_instance(ctx, e, h[i], h[j], rng))
                        first = family_cex(f, *why, {e, h[i], h[j]});
                }
            if (first)
                break;
        }
        r.budget = std::max<std::size_t>(r.budget, 1);
        auto const& m = ctx.mirror();
        if (fail_if_broken(r, m))
            return r;
        bool criterion = !first;
        r.facts = {{"criterion", criterion}, {"mirror", m.holds}};
        if (!criterion)
            fail(r, *first);
        else if (!m.holds)
            fail(r, family_cex(f, "criterion holds but the family is not mirror", {}));
        r.note = "sampled";
    } else if (suite == "continuity-implies-ssc") {
        auto const& cs = ctx.continuous_s();
        if (fail_if_broken(r, cs))
            return r;
        if (!ctx.mirror().holds || !cs.holds) {
            not_applicable(r, "needs a continuous mirror semigroup");
            return r;
        }
        auto const& ssc = ctx.ssc();
        r.budget = ssc.budget;
        r.note = ssc.note;
        r.facts = {{"separately_scott_continuous", ssc.holds}};
        if (fail_if_broken(r, ssc))
            return r;
        if (!ssc.holds)
            fail(r, *ssc.cex);
    } else {
        throw InvalidInput("unknown suite: " + suite);
    }
    return r;
}

bool family_replay(CheckReport const& r, FamilyContext& ctx)
{
    if (r.verdict != Verdict::Fail || !r.counterexample)
        return false;
    auto const& f = ctx.f();
    auto const& c = *r.counterexample;
    auto const& x = c.elems;
    std::string const& suite = r.suite;
    if (needs_way_below(suite) && !f.has_way_below()) {
        auto* sh = ctx.shadow();
        return sh && finite_replay(r, *sh);
    }
    if (c.what.rfind("family evidence refuted", 0) == 0)
        return family_suite(suite, ctx).verdict == Verdict::Fail;

    if (suite == "basic-rules") {
        if (x.size() == 1)
            return basic_rules_unary(f, x[0]).has_value();
        if (x.size() == 2)
            return basic_rules_binary(f, x[0], x[1]).has_value();
        return x.size() == 3 && basic_rules_ternary(f, x[0], x[1], x[2]).has_value();
    }
    if (suite == "order-characterizations" && x.size() == 2) {
        Rng rng = rng_for(ctx.opts(), suite);
        return order_characterizations(f, x[0], x[1], sigma_candidates(f, rng, 4)).has_value();
    }
    if (suite == "wb-characterization" && x.size() == 2 && c.chain.empty())
        return wb_instance(f, x[0], x[1]).has_value();
    if (suite == "multiplicativity-mirror" && x.size() == 4)
        return mult_instance(f, c.what.find("idempotents") != std::string::npos, x).has_value();
    if (suite == "separation-criterion" && x.size() == 3) {
        Rng rng = rng_for(ctx.opts(), suite);
        return separation_instance(ctx, x[0], x[1], x[2], rng).has_value();
    }
    if (suite == "mirror" && !c.chain.empty()) {
        Rng rng = rng_for(ctx.opts(), "mirror");
        Elems sig = sigma_candidates(f, rng), sc = s_candidates(f, rng);
        for (auto const& w : f.sigma_chains())
            if (w.label == c.chain) {
                Outcome o;
                mirror_chain(ctx, w, sig, with(sc, x.size() > 1 ? x[1] : x.at(0)), o);
                return !o.holds && !o.broken;
            }
        return false;
    }
    // Chain-level and global properties: rerun; the seed makes it exact.
    return family_suite(suite, ctx).verdict == Verdict::Fail;
}

} // namespace invsg::detail
