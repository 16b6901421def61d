#include "invsg/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "invsg/errors.hpp"
#include "invsg/io.hpp"

namespace invsg {

std::vector<Elem> ChainWitness::members(std::size_t depth) const
{
    std::size_t n = kind == Kind::FiniteList ? std::min(depth, length) : depth;
    std::vector<Elem> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(generator(k));
    return out;
}

ChainWitness ChainWitness::finite(std::string label, std::vector<Elem> elems)
{
    ChainWitness w;
    w.kind = Kind::FiniteList;
    w.label = std::move(label);
    w.length = elems.size();
    auto shared = std::make_shared<const std::vector<Elem>>(std::move(elems));
    w.generator = [shared](std::size_t k) { return (*shared)[k]; };
    return w;
}

ChainWitness ChainWitness::omega(std::string label, std::function<Elem(std::size_t)> gen)
{
    ChainWitness w;
    w.kind = Kind::OmegaChain;
    w.label = std::move(label);
    w.generator = std::move(gen);
    return w;
}

FamilyOptions options_from_env(FamilyOptions base)
{
    if (char const* env = std::getenv("INVSG_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw InvalidInput(std::string("INVSG_BUDGET must be a positive integer, got '") + env + "'");
        base.budget = std::size_t(v);
    }
    return base;
}

namespace {

[[noreturn]] void no_oracle(SymbolicFamily const& f)
{
    throw std::logic_error("family " + f.name() + " has no way-below oracle");
}

} // namespace

bool SymbolicFamily::wb(Elem const&, Elem const&) const { no_oracle(*this); }
bool SymbolicFamily::wb_sigma(Elem const&, Elem const&) const { no_oracle(*this); }
ChainWitness SymbolicFamily::approximants(Elem const&) const { no_oracle(*this); }
ChainWitness SymbolicFamily::sigma_approximants(Elem const&) const { no_oracle(*this); }
std::optional<ChainWitness> SymbolicFamily::compact_approximants(Elem const&) const { no_oracle(*this); }
std::optional<ChainWitness> SymbolicFamily::sigma_compact_approximants(Elem const&) const { no_oracle(*this); }
std::optional<NonAlgebraicWitness> SymbolicFamily::non_algebraic_witness() const { no_oracle(*this); }
std::optional<NonAlgebraicWitness> SymbolicFamily::sigma_non_algebraic_witness() const { no_oracle(*this); }
std::optional<ChainWitness> SymbolicFamily::wb_refuter(Elem const&, Elem const&) const { no_oracle(*this); }
std::optional<ChainWitness> SymbolicFamily::wb_sigma_refuter(Elem const&, Elem const&) const { no_oracle(*this); }
std::vector<ChainWitness> SymbolicFamily::chains_reaching(Elem const&) const { no_oracle(*this); }

std::vector<Elem> SymbolicFamily::h_class_sample(Elem const& e, Rng& rng, std::size_t count) const
{
    // Generic fallback: translate samples into H_e by s -> s·e when that lands there.
    std::vector<Elem> out{e};
    for (std::size_t i = 0; i < count * 8 && out.size() < count; ++i) {
        Elem s = op(sample(rng), e);
        if (sigma(s) == e && std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(s);
    }
    return out;
}

FamilyPtr family_by_name(std::string const& name)
{
    if (name == "bicyclic-nat")
        return make_bicyclic(Cone::Naturals);
    if (name == "bicyclic-dyadic")
        return make_bicyclic(Cone::Dyadic);
    if (name == "rotation")
        return make_rotation();
    if (name == "cex")
        return make_cex();
    std::string const prefix = "characters:";
    if (name.rfind(prefix, 0) == 0) {
        std::string path = name.substr(prefix.size());
        return make_characters(read_carrier_file(path), path);
    }
    throw InvalidInput("unknown family: " + name);
}

} // namespace invsg
