#include "invsg/groups.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "invsg/errors.hpp"

namespace invsg {

namespace {

using Perm = std::vector<int>;

Perm compose_perm(Perm const& a, Perm const& b)
{
    // apply b, then a
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

FiniteGroup from_elements(std::string name, std::vector<Perm> elems)
{
    std::sort(elems.begin(), elems.end());
    Perm id(elems.front().size());
    std::iota(id.begin(), id.end(), 0);
    auto it = std::find(elems.begin(), elems.end(), id);
    std::rotate(elems.begin(), it, it + 1);
    std::map<Perm, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = i;
    FiniteGroup g;
    g.name = std::move(name);
    g.order = elems.size();
    g.table.resize(g.order * g.order);
    g.inverse.resize(g.order);
    for (std::size_t i = 0; i < g.order; ++i)
        for (std::size_t j = 0; j < g.order; ++j) {
            std::uint32_t p = index.at(compose_perm(elems[i], elems[j]));
            g.table[i * g.order + j] = p;
            if (p == 0)
                g.inverse[i] = std::uint32_t(j);
        }
    return g;
}

FiniteGroup generated(std::string name, std::vector<Perm> const& gens)
{
    Perm id(gens.front().size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto const& s : gens) {
            Perm p = compose_perm(s, elems[i]);
            if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
                elems.push_back(p);
                if (elems.size() > kMaxGroupOrder)
                    throw InvalidInput("group " + name + " has order above " + std::to_string(kMaxGroupOrder));
            }
        }
    return from_elements(std::move(name), std::move(elems));
}

Perm cycle(int n)
{
    Perm p(n);
    for (int i = 0; i < n; ++i)
        p[i] = (i + 1) % n;
    return p;
}

Perm reflection(int n)
{
    Perm p(n);
    for (int i = 0; i < n; ++i)
        p[i] = (n - i) % n;
    return p;
}

FiniteGroup symmetric(std::string name, int n, bool even_only)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> elems;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += p[i] > p[j];
        if (!even_only || inversions % 2 == 0)
            elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return from_elements(std::move(name), std::move(elems));
}

// Quaternion units ±1, ±i, ±j, ±k acting on themselves by left multiplication.
FiniteGroup quaternion()
{
    // unit index u in 0..3 = 1,i,j,k; element = 2*u + (negative ? 1 : 0)
    static int const sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static int const unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    auto mul = [](int a, int b) {
        int s = sign[a / 2][b / 2] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
        return 2 * unit[a / 2][b / 2] + (s < 0 ? 1 : 0);
    };
    std::vector<Perm> gens;
    for (int a : {2, 4}) {
        Perm p(8);
        for (int x = 0; x < 8; ++x)
            p[x] = mul(a, x);
        gens.push_back(p);
    }
    return generated("Q8", gens);
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b)
{
    if (a.order * b.order > kMaxGroupOrder)
        throw InvalidInput("group " + a.name + "x" + b.name + " has order above " + std::to_string(kMaxGroupOrder));
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    g.order = a.order * b.order;
    g.table.resize(g.order * g.order);
    g.inverse.resize(g.order);
    for (std::uint32_t x = 0; x < g.order; ++x) {
        g.inverse[x] = a.inverse[x / b.order] * std::uint32_t(b.order) + b.inverse[x % b.order];
        for (std::uint32_t y = 0; y < g.order; ++y)
            g.table[x * g.order + y] = a.mul(x / b.order, y / b.order) * std::uint32_t(b.order) +
                                       b.mul(x % b.order, y % b.order);
    }
    return g;
}

int parse_index(std::string const& name, std::size_t from)
{
    std::string digits = name.substr(from);
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw InvalidInput("unknown group: " + name);
    return std::stoi(digits);
}

GroupSet product_set(FiniteGroup const& g, GroupSet c, GroupSet d)
{
    GroupSet out = 0;
    for (std::uint32_t x = 0; x < g.order; ++x)
        if (c >> x & 1u)
            for (std::uint32_t y = 0; y < g.order; ++y)
                if (d >> y & 1u)
                    out |= GroupSet(1) << g.mul(x, y);
    return out;
}

} // namespace

FiniteGroup group_by_name(std::string const& name)
{
    if (auto x = name.find('x'); x != std::string::npos)
        return direct_product(group_by_name(name.substr(0, x)), group_by_name(name.substr(x + 1)));
    if (name == "Q8")
        return quaternion();
    if (name.empty())
        throw InvalidInput("unknown group: (empty)");
    int n = parse_index(name, 1);
    switch (name[0]) {
    case 'C':
        if (n < 1 || std::size_t(n) > kMaxGroupOrder)
            throw InvalidInput("cyclic order out of range: " + name);
        if (n == 1)
            return from_elements(name, {Perm{0}});
        return generated(name, {cycle(n)});
    case 'D':
        if (n < 3 || std::size_t(2 * n) > kMaxGroupOrder)
            throw InvalidInput("dihedral index out of range: " + name);
        return generated(name, {cycle(n), reflection(n)});
    case 'S':
    case 'A':
        if (n < 1 || n > 4)
            throw InvalidInput("permutation group degree out of range: " + name);
        return symmetric(name, n, name[0] == 'A');
    default:
        throw InvalidInput("unknown group: " + name);
    }
}

std::vector<std::string> small_group_names()
{
    return {"C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8"};
}

std::vector<GroupSet> subgroups(FiniteGroup const& g)
{
    // Close every set reachable by adding one generator at a time.
    auto close = [&](GroupSet s) {
        GroupSet prev = 0;
        while (prev != s) {
            prev = s;
            s |= product_set(g, s, s);
        }
        return s;
    };
    std::vector<GroupSet> found{1u};
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::uint32_t x = 0; x < g.order; ++x) {
            if (found[i] >> x & 1u)
                continue;
            GroupSet h = close(found[i] | (GroupSet(1) << x));
            if (std::find(found.begin(), found.end(), h) == found.end())
                found.push_back(h);
        }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<GroupSet> cosets(FiniteGroup const& g)
{
    std::vector<GroupSet> out;
    for (GroupSet h : subgroups(g))
        for (std::uint32_t x = 0; x < g.order; ++x)
            out.push_back(product_set(g, h, GroupSet(1) << x));
    std::sort(out.begin(), out.end(), [](GroupSet a, GroupSet b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GroupSet coset_product(FiniteGroup const& g, GroupSet c, GroupSet d)
{
    auto all = cosets(g);
    for (GroupSet x : {c, d})
        if (std::find(all.begin(), all.end(), x) == all.end())
            throw InvalidInput("NotACoset: " + format_group_set(x, g.order));
    GroupSet p = product_set(g, c, d);
    // cosets() is sorted by size, so the first hit is the smallest.
    for (GroupSet x : all)
        if ((x & p) == p)
            return x;
    throw std::logic_error("group itself is a coset");
}

FiniteInvSemigroup coset_monoid(FiniteGroup const& g)
{
    auto all = cosets(g);
    std::size_t n = all.size();
    std::map<GroupSet, ElementId> index;
    for (std::size_t i = 0; i < n; ++i)
        index[all[i]] = ElementId(i);
    std::vector<ElementId> table(n * n);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = format_group_set(all[i], g.order);
        for (std::size_t j = 0; j < n; ++j) {
            GroupSet p = product_set(g, all[i], all[j]);
            for (GroupSet x : all)
                if ((x & p) == p) {
                    table[i * n + j] = index[x];
                    break;
                }
        }
    }
    return FiniteInvSemigroup::validate_flat(n, std::move(table), std::move(names));
}

std::string format_group_set(GroupSet s, std::size_t order)
{
    std::string out = "{";
    for (std::size_t x = 0; x < order; ++x)
        if (s >> x & 1u) {
            if (out.size() > 1)
                out += ",";
            out += std::to_string(x);
        }
    return out + "}";
}

} // namespace invsg
