#include <algorithm>
#include <numeric>

#include "invsg/errors.hpp"
#include "invsg/families.hpp"

namespace invsg {

namespace {

std::string pair_name(FiniteInvSemigroup const& s, ElementId a, ElementId b)
{
    return "(" + s.name_of(a) + "," + s.name_of(b) + ")";
}

} // namespace

void validate_character(FiniteInvSemigroup const& s, Character const& chi)
{
    if (chi.size() != s.size())
        throw InvalidInput("NotACharacter: expected " + std::to_string(s.size()) + " values, got " +
                           std::to_string(chi.size()));
    for (auto const& v : chi)
        rotation(v.r, v.turn);
    if (auto one = s.identity(); one && !(chi[*one] == RotationElem{1, 0}))
        throw InvalidInput("NotACharacter: identity " + s.name_of(*one) + " is not sent to 1");
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b)
            if (!(chi[s.mul(a, b)] == rotation_op(chi[a], chi[b])))
                throw InvalidInput("NotACharacter: violated at " + pair_name(s, a, b));
}

Character character_op(FiniteInvSemigroup const& s, Character const& chi, Character const& psi)
{
    validate_character(s, chi);
    validate_character(s, psi);
    Character out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = rotation_op(chi[i], psi[i]);
    return out;
}

Character trivial_character(FiniteInvSemigroup const& s)
{
    return Character(s.size(), RotationElem{1, 0});
}

bool character_is_idempotent(Character const& chi)
{
    return std::all_of(chi.begin(), chi.end(), [](RotationElem const& v) { return v.turn == 0; });
}

Elem encode_character(Character const& chi)
{
    Elem x;
    x.c.reserve(2 * chi.size());
    for (auto const& v : chi) {
        x.c.push_back(v.r);
        x.c.push_back(v.turn);
    }
    return x;
}

Character decode_character(Elem const& x)
{
    Character chi(x.c.size() / 2);
    for (std::size_t i = 0; i < chi.size(); ++i)
        chi[i] = {x.c[2 * i], x.c[2 * i + 1]};
    return chi;
}

namespace {

constexpr std::size_t kGridCap = 20000;
constexpr std::size_t kShadowCap = 200;

// Least p >= 1 with s^(m+p) == s^m for some m.
unsigned period(FiniteInvSemigroup const& s, ElementId x)
{
    std::vector<ElementId> powers{x};
    while (true) {
        ElementId next = s.mul(powers.back(), x);
        auto it = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end())
            return unsigned(powers.end() - it);
        powers.push_back(next);
    }
}

// Every character whose radii lie in `radii` and whose angles are multiples
// of 1/turns, by depth-first assignment with the morphism law checked on
// every pair as soon as all three values are known.
std::vector<Character> enumerate_characters(FiniteInvSemigroup const& s, std::vector<Rational> const& radii,
                                            unsigned turns, std::size_t cap)
{
    std::size_t n = s.size();
    std::vector<RotationElem> values;
    for (auto const& r : radii) {
        if (r == 0) {
            values.push_back({0, 0});
            continue;
        }
        for (unsigned k = 0; k < turns; ++k)
            values.push_back({r, Rational(k, turns)});
    }
    std::vector<Character> out;
    Character chi(n);
    std::vector<char> set(n, 0);
    auto one = s.identity();

    auto consistent = [&](ElementId x) {
        for (ElementId y = 0; y < n; ++y) {
            if (!set[y])
                continue;
            for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
                ElementId p = s.mul(a, b);
                if (set[p] && !(chi[p] == rotation_op(chi[a], chi[b])))
                    return false;
            }
        }
        return true;
    };

    std::function<void(ElementId)> go = [&](ElementId x) {
        if (out.size() >= cap)
            return;
        if (x == n) {
            out.push_back(chi);
            return;
        }
        for (auto const& v : values) {
            if (one && x == *one && !(v == RotationElem{1, 0}))
                continue;
            chi[x] = v;
            set[x] = 1;
            if (consistent(x))
                go(x + 1);
            set[x] = 0;
        }
    };
    go(0);
    return out;
}

class Characters final : public SymbolicFamily {
public:
    Characters(FiniteInvSemigroup carrier, std::string label)
        : s_(std::move(carrier)), label_(std::move(label))
    {
        if (!s_.identity())
            throw InvalidInput("character carrier must be a monoid");
        if (!s_.is_commutative())
            throw InvalidInput("character carrier must be commutative");
        turns_ = 1;
        for (ElementId x = 0; x < s_.size(); ++x)
            turns_ = std::lcm(turns_, period(s_, x));
        grid_ = enumerate_characters(
            s_, {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}, turns_, kGridCap);
        for (auto const& chi : grid_)
            if (character_is_idempotent(chi))
                idempotent_grid_.push_back(chi);
        units_.assign(s_.size(), 0);
        for (ElementId x = 0; x < s_.size(); ++x)
            for (ElementId y = 0; y < s_.size(); ++y)
                if (s_.mul(x, y) == *s_.identity())
                    units_[x] = 1;
    }

    std::string name() const override { return "characters:" + label_; }

    std::string format(Elem const& x) const override
    {
        auto chi = decode_character(x);
        std::string out = "[";
        for (std::size_t i = 0; i < chi.size(); ++i) {
            if (i)
                out += ", ";
            out += s_.name_of(ElementId(i)) + ":(" + to_string(chi[i].r) + "," + to_string(chi[i].turn) + ")";
        }
        return out + "]";
    }

    Elem op(Elem const& x, Elem const& y) const override
    {
        auto a = decode_character(x), b = decode_character(y);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = rotation_op(a[i], b[i]);
        return encode_character(a);
    }

    Elem inv(Elem const& x) const override
    {
        auto a = decode_character(x);
        for (auto& v : a)
            v = rotation_inv(v);
        return encode_character(a);
    }

    bool le(Elem const& x, Elem const& y) const override
    {
        auto a = decode_character(x), b = decode_character(y);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!rotation_le(a[i], b[i]))
                return false;
        return true;
    }

    bool is_idempotent(Elem const& x) const override { return character_is_idempotent(decode_character(x)); }
    std::optional<Elem> identity() const override { return encode_character(trivial_character(s_)); }

    Elem sample(Rng& rng) const override { return pick(grid_, rng); }
    Elem sample_idempotent(Rng& rng) const override { return pick(idempotent_grid_, rng); }

    std::vector<Elem> landmarks() const override
    {
        Character floor(s_.size());
        for (std::size_t i = 0; i < floor.size(); ++i)
            floor[i] = units_[i] ? RotationElem{1, 0} : RotationElem{0, 0};
        return {encode_character(trivial_character(s_)), encode_character(floor)};
    }

    bool has_way_below() const override { return false; }

    std::vector<Elem> h_class_sample(Elem const& e, Rng& rng, std::size_t count) const override
    {
        std::vector<Elem> out{e};
        for (auto const& chi : grid_) {
            if (out.size() >= count)
                break;
            Elem x = encode_character(chi);
            if (sigma(x) == e && x != e)
                out.push_back(x);
        }
        (void)rng;
        return out;
    }

    // Two kinds of chains below an idempotent character δ: radii scaled by
    // 1 - 2^-k, and radii capped at 1 - 2^-k. Both keep the units at 1, so
    // every member is a character, and both increase to δ.
    std::vector<ChainWitness> sigma_chains() const override
    {
        std::vector<ChainWitness> out;
        Rng rng(0x5eed);
        std::vector<Character> tops{trivial_character(s_)};
        for (int i = 0; i < 4 && !idempotent_grid_.empty(); ++i)
            tops.push_back(decode_character(pick(idempotent_grid_, rng)));
        for (std::size_t t = 0; t < tops.size(); ++t) {
            Character top = tops[t];
            auto units = units_;
            auto scaled = ChainWitness::omega("δ(1-2^-k), δ#" + std::to_string(t), [top, units](std::size_t k) {
                Character c = top;
                Rational f = 1 - pow2_neg(unsigned(k));
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (!units[i])
                        c[i] = rotation(c[i].r * f, 0);
                return encode_character(c);
            });
            auto capped = ChainWitness::omega("min(δ,1-2^-k), δ#" + std::to_string(t), [top, units](std::size_t k) {
                Character c = top;
                Rational cap = 1 - pow2_neg(unsigned(k));
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (!units[i])
                        c[i] = rotation(std::min(c[i].r, cap), 0);
                return encode_character(c);
            });
            for (auto* w : {&scaled, &capped}) {
                w->claimed_sup_in_sigma = w->claimed_sup_in_s = encode_character(top);
                out.push_back(std::move(*w));
            }
        }
        return out;
    }

    std::optional<FiniteInvSemigroup> finite_shadow() const override
    {
        auto chars = enumerate_characters(s_, {Rational(0), Rational(1, 2), Rational(1)}, turns_, kShadowCap + 1);
        if (chars.size() > kShadowCap)
            return std::nullopt;
        std::sort(chars.begin(), chars.end(), [](Character const& a, Character const& b) {
            return encode_character(a).c < encode_character(b).c;
        });
        std::size_t n = chars.size();
        std::vector<ElementId> table(n * n);
        std::vector<std::string> names(n);
        for (std::size_t i = 0; i < n; ++i) {
            names[i] = format(encode_character(chars[i]));
            for (std::size_t j = 0; j < n; ++j) {
                Character p(chars[i].size());
                for (std::size_t k = 0; k < p.size(); ++k)
                    p[k] = rotation_op(chars[i][k], chars[j][k]);
                auto it = std::find(chars.begin(), chars.end(), p);
                table[i * n + j] = ElementId(it - chars.begin());
            }
        }
        return FiniteInvSemigroup::validate_flat(n, std::move(table), std::move(names));
    }

private:
    static Elem pick(std::vector<Character> const& from, Rng& rng)
    {
        return encode_character(from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)]);
    }

    FiniteInvSemigroup s_;
    std::string label_;
    unsigned turns_ = 1;
    std::vector<Character> grid_;
    std::vector<Character> idempotent_grid_;
    std::vector<char> units_;
};

} // namespace

FamilyPtr make_characters(FiniteInvSemigroup carrier, std::string label)
{
    return std::make_shared<Characters>(std::move(carrier), std::move(label));
}

} // namespace invsg
