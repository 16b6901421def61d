#include "invsg/core.hpp"

#include <algorithm>
#include <sstream>

namespace invsg {

namespace {

std::string ids(std::initializer_list<ElementId> list)
{
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (auto id : list) {
        if (!first)
            out << ',';
        out << id;
        first = false;
    }
    out << ')';
    return out.str();
}

} // namespace

std::string to_string(ValidationError::Kind kind)
{
    switch (kind) {
    case ValidationError::Kind::Empty: return "Empty";
    case ValidationError::Kind::NotSquare: return "NotSquare";
    case ValidationError::Kind::EntryOutOfRange: return "EntryOutOfRange";
    case ValidationError::Kind::NotAssociative: return "NotAssociative";
    case ValidationError::Kind::NoInverse: return "NoInverse";
    case ValidationError::Kind::NonUniqueInverse: return "NonUniqueInverse";
    case ValidationError::Kind::IdempotentsDontCommute: return "IdempotentsDontCommute";
    }
    return "Unknown";
}

bool IdempotentSet::contains(ElementId e) const
{
    return std::binary_search(members.begin(), members.end(), e);
}

FiniteInvSemigroup::FiniteInvSemigroup(std::size_t n, std::vector<ElementId> table,
                                       std::vector<ElementId> inverse,
                                       std::vector<std::string> names)
    : n_(n), table_(std::move(table)), inv_(std::move(inverse)), names_(std::move(names))
{
    for (ElementId s = 0; s < n_; ++s)
        if (is_idempotent(s))
            idempotents_.members.push_back(s);

    for (ElementId e = 0; e < n_ && !identity_; ++e) {
        bool ok = true;
        for (ElementId s = 0; s < n_ && ok; ++s)
            ok = mul(e, s) == s && mul(s, e) == s;
        if (ok)
            identity_ = e;
    }

    le_.assign(n_ * n_, 0);
    for (ElementId s = 0; s < n_; ++s)
        for (ElementId t = 0; t < n_; ++t)
            le_[std::size_t(s) * n_ + t] = mul(mul(t, inv_[s]), s) == s;
}

FiniteInvSemigroup FiniteInvSemigroup::validate(std::vector<std::vector<ElementId>> const& table,
                                                std::vector<std::string> names)
{
    std::size_t n = table.size();
    if (n == 0)
        throw ValidationError(ValidationError::Kind::Empty, {}, "empty table");
    std::vector<ElementId> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw ValidationError(ValidationError::Kind::NotSquare, {ElementId(r)},
                                  "row " + std::to_string(r) + " has " +
                                      std::to_string(table[r].size()) + " entries, expected " +
                                      std::to_string(n));
        flat.insert(flat.end(), table[r].begin(), table[r].end());
    }
    return validate_flat(n, std::move(flat), std::move(names));
}

FiniteInvSemigroup FiniteInvSemigroup::validate_flat(std::size_t n, std::vector<ElementId> t,
                                                     std::vector<std::string> names)
{
    using Kind = ValidationError::Kind;
    if (n == 0)
        throw ValidationError(Kind::Empty, {}, "empty table");
    if (t.size() != n * n)
        throw ValidationError(Kind::NotSquare, {}, "table is not n x n");
    if (!names.empty() && names.size() != n)
        throw InvalidInput("names has " + std::to_string(names.size()) + " entries, expected " +
                           std::to_string(n));

    auto at = [&](ElementId a, ElementId b) { return t[std::size_t(a) * n + b]; };

    for (ElementId s = 0; s < n; ++s)
        for (ElementId u = 0; u < n; ++u)
            if (at(s, u) >= n)
                throw ValidationError(Kind::EntryOutOfRange, {s, u},
                                      "entry " + ids({s, u}) + " = " + std::to_string(at(s, u)) +
                                          " is out of range");

    for (ElementId s = 0; s < n; ++s)
        for (ElementId u = 0; u < n; ++u) {
            ElementId su = at(s, u);
            for (ElementId v = 0; v < n; ++v)
                if (at(su, v) != at(s, at(u, v)))
                    throw ValidationError(Kind::NotAssociative, {s, u, v},
                                          "not associative at " + ids({s, u, v}));
        }

    std::vector<ElementId> inv(n);
    for (ElementId s = 0; s < n; ++s) {
        std::optional<ElementId> found;
        for (ElementId u = 0; u < n; ++u) {
            if (at(at(s, u), s) != s || at(at(u, s), u) != u)
                continue;
            if (found)
                throw ValidationError(Kind::NonUniqueInverse, {s, *found, u},
                                      "element " + std::to_string(s) + " has inverses " +
                                          ids({*found, u}));
            found = u;
        }
        if (!found)
            throw ValidationError(Kind::NoInverse, {s},
                                  "element " + std::to_string(s) + " has no inverse");
        inv[s] = *found;
    }

    std::vector<ElementId> idem;
    for (ElementId s = 0; s < n; ++s)
        if (at(s, s) == s)
            idem.push_back(s);
    for (auto e : idem)
        for (auto f : idem)
            if (at(e, f) != at(f, e))
                throw ValidationError(Kind::IdempotentsDontCommute, {e, f},
                                      "idempotents " + ids({e, f}) + " do not commute");

    return FiniteInvSemigroup(n, std::move(t), std::move(inv), std::move(names));
}

FiniteInvSemigroup FiniteInvSemigroup::unchecked(std::size_t n, std::vector<ElementId> table,
                                                 std::vector<ElementId> inverse,
                                                 std::vector<std::string> names)
{
    if (table.size() != n * n || inverse.size() != n)
        throw InvalidInput("unchecked carrier: inconsistent sizes");
    return FiniteInvSemigroup(n, std::move(table), std::move(inverse), std::move(names));
}

std::optional<ElementId> FiniteInvSemigroup::sup(std::span<const ElementId> a) const
{
    if (a.empty())
        return std::nullopt;
    std::vector<ElementId> upper;
    for (ElementId u = 0; u < n_; ++u)
        if (std::all_of(a.begin(), a.end(), [&](ElementId x) { return le(x, u); }))
            upper.push_back(u);
    for (auto u : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](ElementId v) { return le(u, v); }))
            return u;
    return std::nullopt;
}

std::vector<ElementId> FiniteInvSemigroup::h_class(ElementId e) const
{
    if (e >= n_ || !is_idempotent(e))
        throw NotIdempotent("element " + std::to_string(e));
    std::vector<ElementId> out;
    for (ElementId s = 0; s < n_; ++s)
        if (source(s) == e)
            out.push_back(s);
    return out;
}

bool FiniteInvSemigroup::is_reduced() const
{
    for (auto e : idempotents_.members)
        for (ElementId s = 0; s < n_; ++s)
            if (le(e, s) && !is_idempotent(s))
                return false;
    return true;
}

bool FiniteInvSemigroup::is_commutative() const
{
    for (ElementId s = 0; s < n_; ++s)
        for (ElementId t = s + 1; t < n_; ++t)
            if (mul(s, t) != mul(t, s))
                return false;
    return true;
}

std::vector<std::vector<ElementId>> FiniteInvSemigroup::rows() const
{
    std::vector<std::vector<ElementId>> out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        out[r].assign(table_.begin() + r * n_, table_.begin() + (r + 1) * n_);
    return out;
}

std::string FiniteInvSemigroup::name_of(ElementId s) const
{
    if (s < names_.size())
        return names_[s];
    return std::to_string(s);
}

} // namespace invsg
