#include "invsg/poset.hpp"

#include <algorithm>
#include <sstream>

namespace invsg {

FinitePoset FinitePoset::from_relation(std::size_t n, std::vector<std::uint8_t> le)
{
    if (le.size() != n * n)
        throw InvalidInput("order relation is not n x n");
    auto at = [&](std::size_t a, std::size_t b) { return le[a * n + b] != 0; };
    for (std::size_t a = 0; a < n; ++a)
        if (!at(a, a))
            throw InvalidInput("order is not reflexive at " + std::to_string(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && at(a, b) && at(b, a))
                throw InvalidInput("order is not antisymmetric at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
            if (!at(a, b))
                continue;
            for (std::size_t c = 0; c < n; ++c)
                if (at(b, c) && !at(a, c))
                    throw InvalidInput("order is not transitive at (" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) + ")");
        }
    return FinitePoset(n, std::move(le));
}

FinitePoset FinitePoset::of(FiniteInvSemigroup const& s)
{
    std::size_t n = s.size();
    std::vector<std::uint8_t> le(n * n);
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            le[std::size_t(a) * n + b] = s.le(a, b);
    return from_relation(n, std::move(le));
}

std::vector<std::size_t> FinitePoset::down_set(std::size_t m) const
{
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n_; ++x)
        if (le(x, m))
            out.push_back(x);
    return out;
}

std::optional<std::size_t> IdempotentPoset::index_of(ElementId e) const
{
    auto it = std::lower_bound(embedding.begin(), embedding.end(), e);
    if (it == embedding.end() || *it != e)
        return std::nullopt;
    return std::size_t(it - embedding.begin());
}

IdempotentPoset idempotent_poset(FiniteInvSemigroup const& s)
{
    auto const& members = s.idempotents().members;
    std::size_t k = members.size();
    std::vector<std::uint8_t> le(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            le[i * k + j] = s.le(members[i], members[j]);
    return {FinitePoset::from_relation(k, std::move(le)), members};
}

bool is_directed(FinitePoset const& p, std::span<const std::size_t> a)
{
    if (a.empty())
        return false;
    for (auto x : a)
        for (auto y : a) {
            bool bounded = std::any_of(a.begin(), a.end(),
                                       [&](std::size_t r) { return p.le(x, r) && p.le(y, r); });
            if (!bounded)
                return false;
        }
    return true;
}

std::optional<std::size_t> sup(FinitePoset const& p, std::span<const std::size_t> a)
{
    if (a.empty())
        return std::nullopt;
    std::vector<std::size_t> upper;
    for (std::size_t u = 0; u < p.size(); ++u)
        if (std::all_of(a.begin(), a.end(), [&](std::size_t x) { return p.le(x, u); }))
            upper.push_back(u);
    for (auto u : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](std::size_t v) { return p.le(u, v); }))
            return u;
    return std::nullopt;
}

std::optional<std::size_t> inf(FinitePoset const& p, std::span<const std::size_t> a)
{
    if (a.empty())
        return std::nullopt;
    std::vector<std::size_t> lower;
    for (std::size_t l = 0; l < p.size(); ++l)
        if (std::all_of(a.begin(), a.end(), [&](std::size_t x) { return p.le(l, x); }))
            lower.push_back(l);
    for (auto l : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](std::size_t v) { return p.le(v, l); }))
            return l;
    return std::nullopt;
}

namespace {

std::vector<std::size_t> members_of(std::uint32_t mask)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1)
            out.push_back(i);
    return out;
}

// Visits every directed subset together with its supremum, by brute force
// over all 2^n subsets.
template <class F>
void for_each_directed_by_subsets(FinitePoset const& p, F&& f)
{
    std::size_t n = p.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        auto d = members_of(mask);
        if (!is_directed(p, d))
            continue;
        auto s = sup(p, d);
        if (s)
            f(std::span<const std::size_t>(d), *s);
    }
}

void require_ideal(std::size_t size, std::size_t top)
{
    if (size > kIdealLimit)
        throw LimitExceeded("principal ideal of element " + std::to_string(top) + " has " +
                            std::to_string(size) + " elements (limit " +
                            std::to_string(kIdealLimit) + ")");
}

} // namespace

bool way_below_def(FinitePoset const& p, std::size_t x, std::size_t y)
{
    if (p.size() > kDefinitionalLimit)
        throw LimitExceeded("TooLargeForDefinitionalCheck: poset has " + std::to_string(p.size()) +
                            " elements (limit " + std::to_string(kDefinitionalLimit) + ")");
    bool holds = true;
    for_each_directed_by_subsets(p, [&](std::span<const std::size_t> d, std::size_t s) {
        if (!holds || !p.le(y, s))
            return;
        holds = std::any_of(d.begin(), d.end(), [&](std::size_t m) { return p.le(x, m); });
    });
    return holds;
}

bool way_below_fast(FinitePoset const& p, std::size_t x, std::size_t y)
{
    return p.le(x, y);
}

void for_each_directed_subset(FinitePoset const& p,
                              std::function<void(std::span<const std::size_t>)> const& f)
{
    std::vector<std::size_t> members;
    for (std::size_t m = 0; m < p.size(); ++m) {
        std::vector<std::size_t> below;
        for (std::size_t x = 0; x < p.size(); ++x)
            if (x != m && p.le(x, m))
                below.push_back(x);
        require_ideal(below.size() + 1, m);
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << below.size()); ++mask) {
            members.clear();
            for (std::size_t i = 0; i < below.size(); ++i)
                if (mask >> i & 1)
                    members.push_back(below[i]);
            members.push_back(m);
            f(members);
        }
    }
}

void for_each_bounded_subset(FinitePoset const& p,
                             std::function<void(std::size_t, std::span<const std::size_t>)> const& f)
{
    std::vector<std::size_t> members;
    for (std::size_t m = 0; m < p.size(); ++m) {
        auto ideal = p.down_set(m);
        require_ideal(ideal.size(), m);
        for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << ideal.size()); ++mask) {
            members.clear();
            for (std::size_t i = 0; i < ideal.size(); ++i)
                if (mask >> i & 1)
                    members.push_back(ideal[i]);
            f(m, members);
        }
    }
}

WayBelow way_below_relation(FinitePoset const& p)
{
    std::size_t n = p.size();
    WayBelow wb{n, std::vector<std::uint8_t>(n * n, 0), n <= kDefinitionalLimit};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            wb.rel[x * n + y] = 1;

    auto refute = [&](std::span<const std::size_t> d, std::size_t s) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!p.le(y, s))
                continue;
            for (std::size_t x = 0; x < n; ++x)
                if (wb.rel[x * n + y] &&
                    std::none_of(d.begin(), d.end(), [&](std::size_t m) { return p.le(x, m); }))
                    wb.rel[x * n + y] = 0;
        }
    };

    if (wb.exhaustive_subsets)
        for_each_directed_by_subsets(p, refute);
    else
        for_each_directed_subset(p, [&](std::span<const std::size_t> d) { refute(d, d.back()); });
    return wb;
}

std::vector<std::size_t> compacts(FinitePoset const& p, WayBelow const& wb)
{
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (wb(x, x))
            out.push_back(x);
    return out;
}

std::vector<std::size_t> compacts(FinitePoset const& p)
{
    return compacts(p, way_below_relation(p));
}

bool is_continuous(FinitePoset const& p, WayBelow const& wb)
{
    for (std::size_t s = 0; s < p.size(); ++s) {
        std::vector<std::size_t> approx;
        for (std::size_t t = 0; t < p.size(); ++t)
            if (wb(t, s))
                approx.push_back(t);
        if (!is_directed(p, approx) || sup(p, approx) != s)
            return false;
    }
    return true;
}

bool is_continuous(FinitePoset const& p)
{
    return is_continuous(p, way_below_relation(p));
}

bool is_algebraic(FinitePoset const& p, WayBelow const& wb)
{
    for (std::size_t s = 0; s < p.size(); ++s) {
        std::vector<std::size_t> below;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (wb(k, k) && p.le(k, s))
                below.push_back(k);
        if (!is_directed(p, below) || sup(p, below) != s)
            return false;
    }
    return true;
}

bool is_algebraic(FinitePoset const& p)
{
    return is_algebraic(p, way_below_relation(p));
}

bool is_meet_continuous(FinitePoset const& p)
{
    std::size_t n = p.size();
    std::vector<std::size_t> meet(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t pair[] = {a, b};
            auto m = inf(p, pair);
            if (!m)
                throw InvalidInput("NotAMeetSemilattice: no meet for (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
            meet[a * n + b] = *m;
        }

    bool holds = true;
    std::vector<std::size_t> image;
    for_each_directed_subset(p, [&](std::span<const std::size_t> d) {
        if (!holds)
            return;
        auto top = sup(p, d);
        if (!top)
            return;
        for (std::size_t e = 0; e < n && holds; ++e) {
            image.clear();
            for (auto x : d)
                image.push_back(meet[e * n + x]);
            holds = sup(p, image) == meet[e * n + *top];
        }
    });
    return holds;
}

bool way_below_multiplicative(FinitePoset const& p, WayBelow const& wb,
                              std::function<std::size_t(std::size_t, std::size_t)> const& op)
{
    std::size_t n = p.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (wb(a, b))
                pairs.emplace_back(a, b);
    for (auto [a, b] : pairs)
        for (auto [c, d] : pairs)
            if (!wb(op(a, c), op(b, d)))
                return false;
    return true;
}

bool way_below_multiplicative(FinitePoset const& p,
                              std::function<std::size_t(std::size_t, std::size_t)> const& op)
{
    return way_below_multiplicative(p, way_below_relation(p), op);
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(FinitePoset const& p)
{
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!p.lt(a, b))
                continue;
            bool between = false;
            for (std::size_t c = 0; c < n && !between; ++c)
                between = p.lt(a, c) && p.lt(c, b);
            if (!between)
                covers.emplace_back(a, b);
        }
    return covers;
}

namespace {

std::string quoted(std::string const& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string hasse_dot(FinitePoset const& p, std::vector<std::string> const& labels,
                      std::string const& graph_name)
{
    std::ostringstream out;
    out << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=" << quoted(i < labels.size() ? labels[i] : std::to_string(i))
            << "];\n";
    for (auto [a, b] : transitive_reduction(p))
        out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace invsg
