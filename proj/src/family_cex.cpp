#include "invsg/errors.hpp"
#include "invsg/families.hpp"

namespace invsg {

CexElem cex_op(CexElem const& x, CexElem const& y)
{
    if (!x.omega && !y.omega)
        return CexElem::real(std::min(x.v, y.v));
    if (x.omega && y.omega)
        return CexElem::real(1);
    CexElem const& s = x.omega ? y : x;
    return s.v < 1 ? s : CexElem::w();
}

bool cex_le(CexElem const& x, CexElem const& y)
{
    if (y.omega)
        return x.omega || x.v < 1;
    return !x.omega && x.v <= y.v;
}

Elem cex_encode(CexElem const& x)
{
    return x.omega ? Elem{{Rational(1), Rational(1)}} : Elem{{x.v, Rational(0)}};
}

CexElem cex_decode(Elem const& x)
{
    return x.c[1] != 0 ? CexElem::w() : CexElem::real(x.c[0]);
}

namespace {

Elem unit_point(Rational v)
{
    return cex_encode(CexElem::real(std::move(v)));
}

Elem const kOmega = cex_encode(CexElem::w());

ChainWitness scaled(Rational top, std::string label)
{
    return ChainWitness::omega(std::move(label),
                               [top](std::size_t k) { return unit_point(top * (1 - pow2_neg(unsigned(k)))); });
}

} // namespace

ChainWitness cex_mirror_witness()
{
    auto w = scaled(1, "1-2^-k");
    w.claimed_sup_in_sigma = unit_point(1);
    w.claimed_upper_bounds = {unit_point(1), kOmega};
    return w;
}

namespace {

class Cex final : public SymbolicFamily {
public:
    std::string name() const override { return "cex"; }

    std::string format(Elem const& x) const override
    {
        auto d = cex_decode(x);
        return d.omega ? "ω" : to_string(d.v);
    }

    Elem op(Elem const& x, Elem const& y) const override { return cex_encode(cex_op(cex_decode(x), cex_decode(y))); }
    Elem inv(Elem const& x) const override { return x; }
    bool le(Elem const& x, Elem const& y) const override { return cex_le(cex_decode(x), cex_decode(y)); }
    bool is_idempotent(Elem const& x) const override { return x.c[1] == 0; }

    Elem sample(Rng& rng) const override
    {
        if (std::uniform_int_distribution<int>(0, 7)(rng) == 0)
            return kOmega;
        return unit_point(sample_unit(rng));
    }

    Elem sample_idempotent(Rng& rng) const override { return unit_point(sample_unit(rng)); }

    std::vector<Elem> landmarks() const override
    {
        return {unit_point(0), unit_point(Rational(1, 2)), unit_point(1), kOmega};
    }

    bool wb(Elem const& x, Elem const& y) const override
    {
        if (!le(x, y))
            return false;
        auto dy = cex_decode(y);
        if (dy.omega || dy.v == 1)
            return true;
        auto dx = cex_decode(x);
        return dx.v == 0 || dx.v < dy.v;
    }

    bool wb_sigma(Elem const& e, Elem const& f) const override
    {
        require_idempotent(e);
        require_idempotent(f);
        return e.c[0] == 0 || e.c[0] < f.c[0];
    }

    ChainWitness approximants(Elem const& y) const override
    {
        if (is_compact(y)) {
            auto w = ChainWitness::finite("{y}", {y});
            w.claimed_sup_in_s = y;
            if (is_idempotent(y))
                w.claimed_sup_in_sigma = y;
            return w;
        }
        auto w = scaled(y.c[0], "c(1-2^-k)");
        w.claimed_sup_in_s = w.claimed_sup_in_sigma = y;
        return w;
    }

    ChainWitness sigma_approximants(Elem const& e) const override
    {
        require_idempotent(e);
        if (e.c[0] == 0) {
            auto w = ChainWitness::finite("{0}", {e});
            w.claimed_sup_in_s = w.claimed_sup_in_sigma = e;
            return w;
        }
        if (e.c[0] == 1)
            return cex_mirror_witness();
        return approximants(e);
    }

    std::optional<ChainWitness> compact_approximants(Elem const& y) const override
    {
        if (!is_compact(y))
            return std::nullopt;
        return approximants(y);
    }

    std::optional<ChainWitness> sigma_compact_approximants(Elem const& e) const override
    {
        require_idempotent(e);
        if (e.c[0] != 0)
            return std::nullopt;
        return sigma_approximants(e);
    }

    std::optional<NonAlgebraicWitness> non_algebraic_witness() const override
    {
        return NonAlgebraicWitness{unit_point(Rational(1, 2)), unit_point(0)};
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
        if (!le(e, f)) {
            auto w = ChainWitness::finite("{f}", {f});
            w.claimed_sup_in_s = w.claimed_sup_in_sigma = f;
            return w;
        }
        return sigma_approximants(f);
    }

    std::vector<ChainWitness> chains_reaching(Elem const& y) const override
    {
        std::vector<ChainWitness> out;
        auto single = ChainWitness::finite("{y}", {y});
        single.claimed_sup_in_s = y;
        if (is_compact(y)) {
            auto w = ChainWitness::finite("{0,y}", {unit_point(0), y});
            w.claimed_sup_in_s = y;
            out.push_back(std::move(w));
        } else {
            out.push_back(approximants(y));
            auto w = ChainWitness::omega("c(1-3^-k)", [c = y.c[0]](std::size_t k) {
                Rational t = 1;
                for (std::size_t i = 0; i < k; ++i)
                    t /= 3;
                return unit_point(c * (1 - t));
            });
            w.claimed_sup_in_s = y;
            out.push_back(std::move(w));
        }
        out.push_back(std::move(single));
        return out;
    }

    std::vector<Elem> h_class_sample(Elem const& e, Rng&, std::size_t) const override
    {
        require_idempotent(e);
        if (e.c[0] == 1)
            return {e, kOmega};
        return {e};
    }

    std::vector<ChainWitness> sigma_chains() const override
    {
        std::vector<ChainWitness> out;
        out.push_back(cex_mirror_witness());
        auto half = scaled(Rational(1, 2), "1/2(1-2^-k)");
        half.claimed_sup_in_sigma = half.claimed_sup_in_s = unit_point(Rational(1, 2));
        out.push_back(std::move(half));
        auto w = ChainWitness::finite("{0,1/3}", {unit_point(0), unit_point(Rational(1, 3))});
        w.claimed_sup_in_sigma = w.claimed_sup_in_s = unit_point(Rational(1, 3));
        out.push_back(std::move(w));
        return out;
    }

private:
    static bool is_compact(Elem const& y) { return y.c[1] != 0 || y.c[0] == 0 || y.c[0] == 1; }

    void require_idempotent(Elem const& e) const
    {
        if (!is_idempotent(e))
            throw NotIdempotent(format(e));
    }
};

} // namespace

FamilyPtr make_cex()
{
    return std::make_shared<Cex>();
}

} // namespace invsg
