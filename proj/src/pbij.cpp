#include "invsg/pbij.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace invsg {

PartialBijection::PartialBijection(int ground) : ground_(std::int8_t(ground))
{
    if (ground < 0 || ground > kMaxGround)
        throw LimitExceeded("ground set of size " + std::to_string(ground) + " (limit " +
                            std::to_string(kMaxGround) + ")");
    map_.fill(-1);
}

PartialBijection PartialBijection::from_pairs(int ground, std::vector<std::pair<int, int>> const& pairs)
{
    PartialBijection f(ground);
    PointSet seen = 0;
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= ground || y < 0 || y >= ground)
            throw InvalidInput("pair (" + std::to_string(x) + "," + std::to_string(y) +
                               ") lies outside the ground set");
        if (f.map_[x] != -1)
            throw InvalidInput("point " + std::to_string(x) + " is mapped twice");
        if (seen >> y & 1)
            throw InvalidInput("point " + std::to_string(y) + " is hit twice");
        f.map_[x] = std::int8_t(y);
        seen |= PointSet(1u << y);
    }
    return f;
}

PartialBijection PartialBijection::identity(int ground, PointSet domain)
{
    PartialBijection f(ground);
    for (int x = 0; x < ground; ++x)
        if (domain >> x & 1)
            f.map_[x] = std::int8_t(x);
    return f;
}

PointSet PartialBijection::domain() const
{
    PointSet d = 0;
    for (int x = 0; x < ground_; ++x)
        if (map_[x] >= 0)
            d |= PointSet(1u << x);
    return d;
}

PointSet PartialBijection::image() const
{
    return image_of(domain());
}

PointSet PartialBijection::image_of(PointSet u) const
{
    PointSet out = 0;
    for (int x = 0; x < ground_; ++x)
        if ((u >> x & 1) && map_[x] >= 0)
            out |= PointSet(1u << map_[x]);
    return out;
}

int PartialBijection::rank() const
{
    return std::popcount(unsigned(domain()));
}

bool PartialBijection::is_partial_identity() const
{
    for (int x = 0; x < ground_; ++x)
        if (map_[x] >= 0 && map_[x] != x)
            return false;
    return true;
}

std::vector<std::pair<int, int>> PartialBijection::pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < ground_; ++x)
        if (map_[x] >= 0)
            out.emplace_back(x, map_[x]);
    return out;
}

std::string PartialBijection::to_string() const
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto [x, y] : pairs()) {
        if (!first)
            out << ',';
        out << x << "->" << y;
        first = false;
    }
    out << '}';
    return out.str();
}

PartialBijection operator*(PartialBijection const& a, PartialBijection const& b)
{
    if (a.ground() != b.ground())
        throw GroundMismatch(a.ground(), b.ground());
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < b.ground(); ++x) {
        int y = b(x);
        if (y >= 0 && a(y) >= 0)
            pairs.emplace_back(x, a(y));
    }
    return PartialBijection::from_pairs(a.ground(), pairs);
}

PartialBijection compose(PartialBijection const& f, PartialBijection const& f1)
{
    return f1 * f;
}

PartialBijection invert(PartialBijection const& f)
{
    std::vector<std::pair<int, int>> pairs;
    for (auto [x, y] : f.pairs())
        pairs.emplace_back(y, x);
    return PartialBijection::from_pairs(f.ground(), pairs);
}

bool restricts(PartialBijection const& f, PartialBijection const& g)
{
    if (f.ground() != g.ground())
        throw GroundMismatch(f.ground(), g.ground());
    for (auto [x, y] : f.pairs())
        if (g(x) != y)
            return false;
    return true;
}

std::optional<ElementId> GeneratedSemigroup::find(PartialBijection const& f) const
{
    auto it = std::lower_bound(rep.begin(), rep.end(), f);
    if (it == rep.end() || *it != f)
        return std::nullopt;
    return ElementId(it - rep.begin());
}

GeneratedSemigroup from_closed_set(std::vector<PartialBijection> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty())
        throw InvalidInput("empty set of partial bijections");

    std::size_t n = elements.size();
    auto index = [&](PartialBijection const& f) -> ElementId {
        auto it = std::lower_bound(elements.begin(), elements.end(), f);
        if (it == elements.end() || *it != f)
            throw InvalidInput("set is not closed: " + f.to_string() + " is missing");
        return ElementId(it - elements.begin());
    };

    std::vector<ElementId> table(n * n);
    std::vector<std::string> names(n);
    for (std::size_t s = 0; s < n; ++s) {
        names[s] = elements[s].to_string();
        index(invert(elements[s]));
        for (std::size_t t = 0; t < n; ++t)
            table[s * n + t] = index(elements[s] * elements[t]);
    }
    auto carrier = FiniteInvSemigroup::validate_flat(n, std::move(table), std::move(names));
    return {std::move(carrier), std::move(elements)};
}

GeneratedSemigroup symmetric_inverse_monoid(int n)
{
    if (n < 1 || n > 5)
        throw LimitExceeded("TooLarge: symmetric inverse monoid needs 1 <= n <= 5, got " +
                            std::to_string(n));
    std::vector<PartialBijection> all;
    // each point maps to a target or to nothing (value n)
    std::vector<int> choice(std::size_t(n), 0);
    for (;;) {
        std::vector<std::pair<int, int>> pairs;
        PointSet hit = 0;
        bool injective = true;
        for (int x = 0; x < n && injective; ++x) {
            int y = choice[std::size_t(x)];
            if (y == n)
                continue;
            injective = !(hit >> y & 1);
            hit |= PointSet(1u << y);
            pairs.emplace_back(x, y);
        }
        if (injective)
            all.push_back(PartialBijection::from_pairs(n, pairs));

        int k = 0;
        while (k < n && ++choice[std::size_t(k)] > n)
            choice[std::size_t(k++)] = 0;
        if (k == n)
            break;
    }
    return from_closed_set(std::move(all));
}

GeneratedSemigroup closure(int ground, std::vector<PartialBijection> const& gens)
{
    if (gens.empty())
        throw InvalidInput("closure needs at least one generator");
    std::vector<PartialBijection> letters;
    for (auto const& g : gens) {
        if (g.ground() != ground)
            throw GroundMismatch(ground, g.ground());
        letters.push_back(g);
        letters.push_back(invert(g));
    }
    std::set<PartialBijection> seen(letters.begin(), letters.end());
    std::vector<PartialBijection> queue(seen.begin(), seen.end());
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (auto const& g : letters) {
            auto w = queue[head] * g;
            if (seen.insert(w).second)
                queue.push_back(w);
        }
    return from_closed_set(std::move(queue));
}

namespace {

using Mask = std::uint64_t;

Mask close_mask(FiniteInvSemigroup const& s, Mask m)
{
    std::size_t n = s.size();
    for (bool grew = true; grew;) {
        grew = false;
        for (ElementId a = 0; a < n; ++a) {
            if (!(m >> a & 1))
                continue;
            Mask add = Mask(1) << s.inverse(a);
            for (ElementId b = 0; b < n; ++b)
                if (m >> b & 1)
                    add |= Mask(1) << s.mul(a, b);
            if ((m | add) != m) {
                m |= add;
                grew = true;
            }
        }
    }
    return m;
}

FiniteInvSemigroup restrict_to(FiniteInvSemigroup const& s, Mask m)
{
    std::vector<ElementId> members, pos(s.size(), 0);
    for (ElementId a = 0; a < s.size(); ++a)
        if (m >> a & 1) {
            pos[a] = ElementId(members.size());
            members.push_back(a);
        }
    std::size_t k = members.size();
    std::vector<ElementId> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            table[i * k + j] = pos[s.mul(members[i], members[j])];
    return FiniteInvSemigroup::validate_flat(k, std::move(table));
}

} // namespace

void enumerate_inverse_subsemigroups(int n, int max_order,
                                     std::function<void(FiniteInvSemigroup const&)> const& emit)
{
    if (n < 1 || n > 3 || max_order < 1 || max_order > 10)
        throw LimitExceeded("enumeration needs 1 <= n <= 3 and 1 <= max_order <= 10");
    auto im = symmetric_inverse_monoid(n);
    auto const& s = im.carrier;

    std::set<Mask> seen;
    std::vector<Mask> queue;
    auto offer = [&](Mask m) {
        if (std::popcount(m) <= max_order && seen.insert(m).second)
            queue.push_back(m);
    };
    for (ElementId a = 0; a < s.size(); ++a)
        offer(close_mask(s, Mask(1) << a));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Mask m = queue[head];
        for (ElementId a = 0; a < s.size(); ++a)
            if (!(m >> a & 1))
                offer(close_mask(s, m | (Mask(1) << a)));
    }

    std::set<std::pair<std::size_t, std::vector<ElementId>>> classes;
    for (auto m : seen) {
        auto c = canonical_form(restrict_to(s, m));
        classes.emplace(c.size(), c.flat_table());
    }
    for (auto const& [k, table] : classes)
        emit(FiniteInvSemigroup::validate_flat(k, table));
}

std::vector<FiniteInvSemigroup> enumerate_inverse_subsemigroups(int n, int max_order)
{
    std::vector<FiniteInvSemigroup> out;
    enumerate_inverse_subsemigroups(n, max_order, [&](FiniteInvSemigroup const& s) { out.push_back(s); });
    return out;
}

FiniteTopology FiniteTopology::validate(int points, std::vector<PointSet> opens)
{
    if (points < 1 || points > kMaxGround)
        throw InvalidInput("NotATopology: need 1 <= points <= " + std::to_string(kMaxGround));
    PointSet all = full_set(points);
    for (auto u : opens)
        if (u & ~all)
            throw InvalidInput("NotATopology: open set outside the space");
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    auto has = [&](PointSet u) { return std::binary_search(opens.begin(), opens.end(), u); };
    if (!has(0))
        throw InvalidInput("NotATopology: empty set is not open");
    if (!has(all))
        throw InvalidInput("NotATopology: whole space is not open");
    for (auto u : opens)
        for (auto v : opens) {
            if (!has(PointSet(u | v)))
                throw InvalidInput("NotATopology: not closed under union");
            if (!has(PointSet(u & v)))
                throw InvalidInput("NotATopology: not closed under intersection");
        }
    return FiniteTopology(points, std::move(opens));
}

FiniteTopology FiniteTopology::discrete(int points)
{
    std::vector<PointSet> opens;
    for (unsigned u = 0; u <= full_set(points); ++u)
        opens.push_back(PointSet(u));
    return validate(points, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(int points)
{
    return validate(points, {0, full_set(points)});
}

bool FiniteTopology::is_open(PointSet u) const
{
    return std::binary_search(opens_.begin(), opens_.end(), u);
}

std::vector<PointSet> FiniteTopology::closed_sets() const
{
    std::vector<PointSet> out;
    for (auto u : opens_)
        out.push_back(PointSet(full_set(points_) & ~u));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteTopology> all_topologies(int points)
{
    if (points < 1 || points > 4)
        throw LimitExceeded("topology enumeration needs 1 <= points <= 4");
    PointSet all = full_set(points);
    std::vector<PointSet> middle;
    for (unsigned u = 1; u < all; ++u)
        middle.push_back(PointSet(u));

    std::vector<FiniteTopology> out;
    for (std::uint32_t pick = 0; pick < (std::uint32_t(1) << middle.size()); ++pick) {
        std::vector<PointSet> opens = {0, all};
        for (std::size_t i = 0; i < middle.size(); ++i)
            if (pick >> i & 1)
                opens.push_back(middle[i]);
        bool closed = true;
        for (auto u : opens)
            for (auto v : opens)
                closed = closed &&
                         std::find(opens.begin(), opens.end(), PointSet(u | v)) != opens.end() &&
                         std::find(opens.begin(), opens.end(), PointSet(u & v)) != opens.end();
        if (closed)
            out.push_back(FiniteTopology::validate(points, std::move(opens)));
    }
    return out;
}

GeneratedSemigroup pseudogroup_of_space(FiniteTopology const& t)
{
    if (t.points() > 4)
        throw LimitExceeded("pseudogroup_of_space needs at most 4 points");
    int n = t.points();
    std::vector<PartialBijection> homeos;
    for (auto u : t.opens())
        for (auto v : t.opens()) {
            if (std::popcount(unsigned(u)) != std::popcount(unsigned(v)))
                continue;
            std::vector<int> src, dst;
            for (int x = 0; x < n; ++x) {
                if (u >> x & 1)
                    src.push_back(x);
                if (v >> x & 1)
                    dst.push_back(x);
            }
            do {
                std::vector<std::pair<int, int>> pairs;
                for (std::size_t k = 0; k < src.size(); ++k)
                    pairs.emplace_back(src[k], dst[k]);
                auto f = PartialBijection::from_pairs(n, pairs);
                auto g = invert(f);
                bool homeo = true;
                for (auto w : t.opens()) {
                    if ((w & ~u) == 0 && !t.is_open(f.image_of(w)))
                        homeo = false;
                    if ((w & ~v) == 0 && !t.is_open(g.image_of(w)))
                        homeo = false;
                }
                if (homeo)
                    homeos.push_back(f);
            } while (std::next_permutation(dst.begin(), dst.end()));
        }
    return from_closed_set(std::move(homeos));
}

ClosedSetAdjunction closed_set_adjunction(FiniteTopology const& t, GeneratedSemigroup const& p)
{
    ClosedSetAdjunction adj;
    PointSet all = full_set(t.points());
    adj.closed = t.closed_sets();
    for (auto f : adj.closed) {
        auto id = p.find(PartialBijection::identity(t.points(), PointSet(all & ~f)));
        if (!id)
            throw InvalidInput("pseudogroup lacks the identity on the complement of a closed set");
        adj.i.push_back(*id);
    }
    adj.idempotents = p.carrier.idempotents().members;
    for (auto e : adj.idempotents)
        adj.j.push_back(PointSet(all & ~p.rep[e].domain()));
    return adj;
}

std::optional<std::string> verify_adjunction(FiniteTopology const& t, GeneratedSemigroup const& p,
                                             ClosedSetAdjunction const& adj)
{
    auto const& s = p.carrier;
    auto subset = [](PointSet a, PointSet b) { return (a & ~b) == 0; };
    if (adj.closed != t.closed_sets())
        return "closed sets do not match the topology";
    if (adj.closed.size() != adj.idempotents.size())
        return "closed sets and idempotents differ in number";

    for (std::size_t k = 0; k < adj.idempotents.size(); ++k)
        if (!std::binary_search(adj.closed.begin(), adj.closed.end(), adj.j[k]))
            return "j(" + s.name_of(adj.idempotents[k]) + ") is not closed";

    for (std::size_t a = 0; a < adj.closed.size(); ++a) {
        PointSet f = adj.closed[a];
        auto back = std::find(adj.idempotents.begin(), adj.idempotents.end(), adj.i[a]);
        if (back == adj.idempotents.end())
            return "i(F) is not idempotent";
        if (adj.j[std::size_t(back - adj.idempotents.begin())] != f)
            return "j(i(F)) != F";
        for (std::size_t k = 0; k < adj.idempotents.size(); ++k) {
            ElementId e = adj.idempotents[k];
            if (s.le(adj.i[a], e) != subset(adj.j[k], f))
                return "i(F) <= f disagrees with F ⊇ j(f)";
            if (s.le(e, adj.i[a]) != subset(f, adj.j[k]))
                return "f <= i(F) disagrees with j(f) ⊇ F";
            auto idx = std::lower_bound(adj.closed.begin(), adj.closed.end(), adj.j[k]);
            if (adj.i[std::size_t(idx - adj.closed.begin())] != e)
                return "i(j(f)) != f";
        }
    }
    for (std::size_t a = 0; a < adj.closed.size(); ++a)
        for (std::size_t b = 0; b < adj.closed.size(); ++b)
            if (s.le(adj.i[a], adj.i[b]) != subset(adj.closed[b], adj.closed[a]))
                return "i is not an order isomorphism onto the idempotents";
    return std::nullopt;
}

} // namespace invsg
