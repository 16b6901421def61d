#include <algorithm>

#include "invsg/errors.hpp"
#include "invsg/families.hpp"

namespace invsg {

BicyclicElem bicyclic_op(BicyclicElem const& x, BicyclicElem const& y)
{
    Rational m = std::max(x.b, y.a);
    return {x.a - x.b + m, y.b - y.a + m};
}

BicyclicElem bicyclic_inv(BicyclicElem const& x)
{
    return {x.b, x.a};
}

bool bicyclic_le(BicyclicElem const& x, BicyclicElem const& y)
{
    return y.a == y.b + x.a - x.b && y.b <= x.b;
}

bool bicyclic_wb(Cone p, BicyclicElem const& eps, BicyclicElem const& delta)
{
    if (eps.a != eps.b)
        throw NotIdempotent("(" + to_string(eps.a) + "," + to_string(eps.b) + ")");
    if (delta.a != delta.b)
        throw NotIdempotent("(" + to_string(delta.a) + "," + to_string(delta.b) + ")");
    if (p == Cone::Naturals)
        return delta.a <= eps.a;
    return delta.a < eps.a;
}

namespace {

BicyclicElem dec(Elem const& x)
{
    return {x.c[0], x.c[1]};
}

Elem enc(BicyclicElem const& x)
{
    return Elem{{x.a, x.b}};
}

Elem enc(Rational a, Rational b)
{
    return Elem{{std::move(a), std::move(b)}};
}

class Bicyclic final : public SymbolicFamily {
public:
    explicit Bicyclic(Cone p) : p_(p) {}

    std::string name() const override { return p_ == Cone::Naturals ? "bicyclic-nat" : "bicyclic-dyadic"; }

    std::string format(Elem const& x) const override
    {
        return "(" + to_string(x.c[0]) + "," + to_string(x.c[1]) + ")";
    }

    Elem op(Elem const& x, Elem const& y) const override { return enc(bicyclic_op(dec(x), dec(y))); }
    Elem inv(Elem const& x) const override { return enc(bicyclic_inv(dec(x))); }
    bool le(Elem const& x, Elem const& y) const override { return bicyclic_le(dec(x), dec(y)); }
    bool is_idempotent(Elem const& x) const override { return x.c[0] == x.c[1]; }
    std::optional<Elem> identity() const override { return enc(0, 0); }

    Elem sample(Rng& rng) const override { return enc(coord(rng), coord(rng)); }

    Elem sample_idempotent(Rng& rng) const override
    {
        Rational a = coord(rng);
        return enc(a, a);
    }

    std::vector<Elem> landmarks() const override
    {
        return {enc(0, 0), enc(1, 1), enc(1, 0), enc(0, 1), enc(2, 1), enc(3, 5)};
    }

    bool wb(Elem const& x, Elem const& y) const override
    {
        if (!le(x, y))
            return false;
        return p_ == Cone::Naturals || x != y;
    }

    bool wb_sigma(Elem const& e, Elem const& f) const override { return bicyclic_wb(p_, dec(e), dec(f)); }

    ChainWitness approximants(Elem const& y) const override
    {
        ChainWitness w;
        if (p_ == Cone::Naturals) {
            w = ChainWitness::finite("{y}", {y});
        } else {
            w = shifted(y, "(a+2^-k,b+2^-k)", [](std::size_t k) { return pow2_neg(unsigned(k)); });
        }
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
        if (p_ == Cone::Dyadic)
            return std::nullopt;
        return approximants(y);
    }

    std::optional<ChainWitness> sigma_compact_approximants(Elem const& e) const override
    {
        require_idempotent(e);
        return compact_approximants(e);
    }

    std::optional<NonAlgebraicWitness> non_algebraic_witness() const override
    {
        if (p_ == Cone::Naturals)
            return std::nullopt;
        return NonAlgebraicWitness{enc(0, 0), std::nullopt};
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
        if (p_ == Cone::Naturals) {
            auto w = ChainWitness::finite("{y+2,y+1,y}", {shift(y, 2), shift(y, 1), y});
            w.claimed_sup_in_s = y;
            out.push_back(std::move(w));
        } else {
            out.push_back(approximants(y));
            auto w = shifted(y, "(a+4^-k,b+4^-k)", [](std::size_t k) { return pow2_neg(unsigned(2 * k)); });
            w.claimed_sup_in_s = y;
            out.push_back(std::move(w));
        }
        auto single = ChainWitness::finite("{y}", {y});
        single.claimed_sup_in_s = y;
        out.push_back(std::move(single));
        return out;
    }

    std::vector<Elem> h_class_sample(Elem const& e, Rng& rng, std::size_t count) const override
    {
        require_idempotent(e);
        std::vector<Elem> out{e};
        for (std::size_t i = 0; out.size() < count && i < count * 4; ++i) {
            Elem s = enc(coord(rng), e.c[1]);
            if (std::find(out.begin(), out.end(), s) == out.end())
                out.push_back(s);
        }
        return out;
    }

    std::vector<ChainWitness> sigma_chains() const override
    {
        std::vector<ChainWitness> out;
        if (p_ == Cone::Naturals) {
            auto a = ChainWitness::finite("{(3,3),(2,2),(1,1),(0,0)}",
                                          {enc(3, 3), enc(2, 2), enc(1, 1), enc(0, 0)});
            a.claimed_sup_in_sigma = a.claimed_sup_in_s = enc(0, 0);
            auto b = ChainWitness::finite("{(5,5),(4,4)}", {enc(5, 5), enc(4, 4)});
            b.claimed_sup_in_sigma = b.claimed_sup_in_s = enc(4, 4);
            out.push_back(std::move(a));
            out.push_back(std::move(b));
        } else {
            for (Rational b : {Rational(0), Rational(1), Rational(5, 2)}) {
                Elem e = enc(b, b);
                out.push_back(sigma_approximants(e));
                out.back().label = "(b+2^-k,b+2^-k), b=" + to_string(b);
            }
        }
        return out;
    }

private:
    Rational coord(Rng& rng) const
    {
        if (p_ == Cone::Naturals)
            return Rational(std::uniform_int_distribution<int>(0, 8)(rng));
        return sample_dyadic(rng, 6);
    }

    void require_idempotent(Elem const& e) const
    {
        if (!is_idempotent(e))
            throw NotIdempotent(format(e));
    }

    static Elem shift(Elem const& y, Rational const& t) { return enc(y.c[0] + t, y.c[1] + t); }

    template <class F>
    static ChainWitness shifted(Elem const& y, std::string label, F offset)
    {
        return ChainWitness::omega(std::move(label), [y, offset](std::size_t k) { return shift(y, offset(k)); });
    }

    Cone p_;
};

} // namespace

FamilyPtr make_bicyclic(Cone p)
{
    return std::make_shared<Bicyclic>(p);
}

} // namespace invsg
