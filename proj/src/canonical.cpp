#include "invsg/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace invsg {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
    // splitmix64 finalizer over a running combination
    std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<std::uint64_t> refined_colors(FiniteInvSemigroup const& s)
{
    std::size_t n = s.size();
    std::vector<std::uint64_t> color(n);
    for (ElementId a = 0; a < n; ++a) {
        std::uint64_t h = 0;
        h = mix(h, s.is_idempotent(a));
        h = mix(h, s.identity() == a);
        h = mix(h, s.inverse(a) == a);
        std::size_t left = 0, right = 0, below = 0, above = 0;
        for (ElementId b = 0; b < n; ++b) {
            left += s.mul(b, a) == a;
            right += s.mul(a, b) == a;
            below += s.le(b, a);
            above += s.le(a, b);
        }
        h = mix(h, left);
        h = mix(h, right);
        h = mix(h, below);
        h = mix(h, above);
        color[a] = h;
    }

    auto distinct = [](std::vector<std::uint64_t> c) {
        std::sort(c.begin(), c.end());
        return std::size_t(std::unique(c.begin(), c.end()) - c.begin());
    };

    std::size_t classes = distinct(color);
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(n);
        for (ElementId a = 0; a < n; ++a) {
            std::vector<std::uint64_t> row(n);
            for (ElementId b = 0; b < n; ++b)
                row[b] = mix(mix(mix(0, color[b]), color[s.mul(a, b)]), color[s.mul(b, a)]);
            std::sort(row.begin(), row.end());
            std::uint64_t h = color[a];
            for (auto v : row)
                h = mix(h, v);
            next[a] = h;
        }
        std::size_t c = distinct(next);
        color = std::move(next);
        if (c == classes)
            break;
        classes = c;
    }
    return color;
}

} // namespace

FiniteInvSemigroup canonical_form(FiniteInvSemigroup const& s, std::uint64_t max_permutations)
{
    std::size_t n = s.size();
    auto color = refined_colors(s);

    std::map<std::uint64_t, std::vector<ElementId>> by_color;
    for (ElementId a = 0; a < n; ++a)
        by_color[color[a]].push_back(a);
    std::vector<std::vector<ElementId>> blocks;
    std::uint64_t candidates = 1;
    for (auto& [c, members] : by_color) {
        for (std::uint64_t k = 2; k <= members.size(); ++k) {
            candidates *= k;
            if (candidates > max_permutations)
                throw LimitExceeded("canonical form: more than " + std::to_string(max_permutations) +
                                    " candidate relabelings");
        }
        blocks.push_back(members);
    }

    std::vector<ElementId> best;
    std::vector<ElementId> order(n), pos(n), cand(n * n);
    for (;;) {
        std::size_t i = 0;
        for (auto const& b : blocks)
            for (auto a : b)
                order[i++] = a;
        for (std::size_t k = 0; k < n; ++k)
            pos[order[k]] = ElementId(k);

        bool better = best.empty();
        bool worse = false;
        for (std::size_t r = 0; r < n && !worse; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                ElementId v = pos[s.mul(order[r], order[c])];
                cand[r * n + c] = v;
                if (!better) {
                    ElementId w = best[r * n + c];
                    if (v < w)
                        better = true;
                    else if (v > w) {
                        worse = true;
                        break;
                    }
                }
            }
        if (better)
            best = cand;

        std::size_t b = 0;
        for (; b < blocks.size(); ++b)
            if (std::next_permutation(blocks[b].begin(), blocks[b].end()))
                break;
        if (b == blocks.size())
            break;
    }

    return FiniteInvSemigroup::validate_flat(n, std::move(best));
}

bool isomorphic(FiniteInvSemigroup const& a, FiniteInvSemigroup const& b)
{
    if (a.size() != b.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace invsg
