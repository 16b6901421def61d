#include <algorithm>

#include "invsg/errors.hpp"
#include "invsg/families.hpp"

namespace invsg {

RotationElem rotation(Rational r, Rational turn)
{
    if (r < 0 || r > 1)
        throw InvalidInput("OutOfRange: radius " + to_string(r) + " not in [0,1]");
    if (turn < 0 || turn >= 1)
        throw InvalidInput("OutOfRange: angle " + to_string(turn) + " not in [0,1)");
    if (r == 0)
        turn = 0;
    return {std::move(r), std::move(turn)};
}

RotationElem rotation_op(RotationElem const& x, RotationElem const& y)
{
    Rational r = std::min(x.r, y.r);
    return rotation(r, r == 0 ? Rational(0) : frac(x.turn + y.turn));
}

RotationElem rotation_inv(RotationElem const& x)
{
    return {x.r, frac(-x.turn)};
}

bool rotation_le(RotationElem const& x, RotationElem const& y)
{
    return x.r == 0 || (x.r <= y.r && x.turn == y.turn);
}

bool rotation_wb(RotationElem const& x, RotationElem const& y)
{
    return x.r == 0 || (x.r < y.r && x.turn == y.turn);
}

bool rotation_wb_sigma(Rational const& eps, Rational const& delta)
{
    return eps == 0 || eps < delta;
}

namespace {

RotationElem dec(Elem const& x)
{
    return {x.c[0], x.c[1]};
}

Elem enc(RotationElem const& x)
{
    return Elem{{x.r, x.turn}};
}

Elem rot(Rational r, Rational turn)
{
    return enc(rotation(std::move(r), std::move(turn)));
}

class Rotation final : public SymbolicFamily {
public:
    std::string name() const override { return "rotation"; }

    std::string format(Elem const& x) const override
    {
        return "(" + to_string(x.c[0]) + "," + to_string(x.c[1]) + ")";
    }

    Elem op(Elem const& x, Elem const& y) const override { return enc(rotation_op(dec(x), dec(y))); }
    Elem inv(Elem const& x) const override { return enc(rotation_inv(dec(x))); }
    bool le(Elem const& x, Elem const& y) const override { return rotation_le(dec(x), dec(y)); }
    bool is_idempotent(Elem const& x) const override { return x.c[1] == 0; }
    std::optional<Elem> identity() const override { return rot(1, 0); }

    Elem sample(Rng& rng) const override
    {
        Rational r = sample_unit(rng);
        return rot(r, sample_turn(rng));
    }

    Elem sample_idempotent(Rng& rng) const override { return rot(sample_unit(rng), 0); }

    std::vector<Elem> landmarks() const override
    {
        return {rot(0, 0), rot(1, 0), rot(1, Rational(1, 2)), rot(Rational(1, 2), 0),
                rot(Rational(1, 2), Rational(1, 4)), rot(Rational(3, 4), Rational(1, 3))};
    }

    bool wb(Elem const& x, Elem const& y) const override { return rotation_wb(dec(x), dec(y)); }

    bool wb_sigma(Elem const& e, Elem const& f) const override
    {
        require_idempotent(e);
        require_idempotent(f);
        return rotation_wb_sigma(e.c[0], f.c[0]);
    }

    ChainWitness approximants(Elem const& y) const override
    {
        auto w = scaled(y, "(r(1-2^-k),θ)", 2);
        w.claimed_sup_in_s = y;
        if (is_idempotent(y))
            w.claimed_sup_in_sigma = y;
        return w;
    }

    ChainWitness sigma_approximants(Elem const& e) const override
    {
        require_idempotent(e);
        return approximants(e);
    }

    std::optional<ChainWitness> compact_approximants(Elem const& y) const override
    {
        if (y.c[0] != 0)
            return std::nullopt;
        auto w = ChainWitness::finite("{0}", {y});
        w.claimed_sup_in_s = w.claimed_sup_in_sigma = y;
        return w;
    }

    std::optional<ChainWitness> sigma_compact_approximants(Elem const& e) const override
    {
        require_idempotent(e);
        return compact_approximants(e);
    }

    std::optional<NonAlgebraicWitness> non_algebraic_witness() const override
    {
        return NonAlgebraicWitness{rot(1, 0), rot(0, 0)};
    }

    std::optional<NonAlgebraicWitness> sigma_non_algebraic_witness() const override
    {
        return non_algebraic_witness();
    }

    std::optional<ChainWitness> wb_refuter(Elem const& x, Elem const& y) const override
    {
        if (wb(x, y))
            return std::nullopt;
        if (!le(x, y)) {
            auto w = ChainWitness::finite("{y}", {y});
            w.claimed_sup_in_s = y;
            return w;
        }
        return approximants(y);
    }

    std::optional<ChainWitness> wb_sigma_refuter(Elem const& e, Elem const& f) const override
    {
        if (wb_sigma(e, f))
            return std::nullopt;
        auto w = wb_refuter(e, f);
        w->claimed_sup_in_sigma = f;
        return w;
    }

    std::vector<ChainWitness> chains_reaching(Elem const& y) const override
    {
        std::vector<ChainWitness> out;
        out.push_back(approximants(y));
        auto w = scaled(y, "(r(1-3^-k),θ)", 3);
        w.claimed_sup_in_s = y;
        out.push_back(std::move(w));
        auto single = ChainWitness::finite("{y}", {y});
        single.claimed_sup_in_s = y;
        out.push_back(std::move(single));
        return out;
    }

    std::vector<Elem> h_class_sample(Elem const& e, Rng& rng, std::size_t count) const override
    {
        require_idempotent(e);
        std::vector<Elem> out{e};
        if (e.c[0] == 0)
            return out;
        for (std::size_t i = 0; out.size() < count && i < count * 4; ++i) {
            Elem s = rot(e.c[0], sample_turn(rng));
            if (std::find(out.begin(), out.end(), s) == out.end())
                out.push_back(s);
        }
        return out;
    }

    std::vector<ChainWitness> sigma_chains() const override
    {
        std::vector<ChainWitness> out;
        for (Rational e : {Rational(1), Rational(1, 2), Rational(3, 4)}) {
            out.push_back(sigma_approximants(rot(e, 0)));
            out.back().label = "r(1-2^-k), r=" + to_string(e);
        }
        auto w = ChainWitness::finite("{0,1/2}", {rot(0, 0), rot(Rational(1, 2), 0)});
        w.claimed_sup_in_sigma = w.claimed_sup_in_s = rot(Rational(1, 2), 0);
        out.push_back(std::move(w));
        return out;
    }

    // The radius survives exactly on the positive real axis.
    std::optional<Elem> projection(Elem const& x) const override
    {
        return x.c[1] == 0 ? x : rot(0, 0);
    }

private:
    void require_idempotent(Elem const& e) const
    {
        if (!is_idempotent(e))
            throw NotIdempotent(format(e));
    }

    static ChainWitness scaled(Elem const& y, std::string label, unsigned base)
    {
        return ChainWitness::omega(std::move(label), [y, base](std::size_t k) {
            Rational t = 1;
            for (std::size_t i = 0; i < k; ++i)
                t /= base;
            return rot(y.c[0] * (1 - t), y.c[1]);
        });
    }
};

} // namespace

FamilyPtr make_rotation()
{
    return std::make_shared<Rotation>();
}

} // namespace invsg
