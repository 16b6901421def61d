#pragma once

#include <memory>
#include <optional>
#include <string>

#include "invsg/checkers.hpp"
#include "invsg/poset.hpp"

namespace invsg::detail {

/// Result of evaluating one property: whether it held, the first instance
/// where it did not, and how many instances were looked at.
struct Outcome {
    bool holds = true;
    std::optional<Counterexample> cex;
    std::size_t budget = 0;
    std::string note;
    /// False when the property could not be evaluated at all (no oracle).
    bool applicable = true;
    /// Set when a family's own claims were refuted while evaluating; the
    /// verdict then says nothing about the property itself.
    std::optional<Counterexample> broken;
};

/// A finite carrier plus everything the suites derive from it, computed on
/// first use and shared between suites.
class FiniteContext {
public:
    FiniteContext(std::string id, FiniteInvSemigroup s);

    std::string const& id() const { return id_; }
    FiniteInvSemigroup const& s() const { return s_; }
    FinitePoset const& order() const { return order_; }
    IdempotentPoset const& sigma() const { return sigma_; }

    WayBelow const& wb_s();
    WayBelow const& wb_sigma();

    Outcome const& mirror();
    Outcome const& ssc();
    bool meet_continuous_sigma();
    bool continuous_s();
    bool continuous_sigma();
    bool algebraic_s();
    bool algebraic_sigma();
    Outcome const& multiplicative_s();
    Outcome const& multiplicative_sigma();

    std::string render(std::vector<ElementId> const& ids) const;

private:
    std::string id_;
    FiniteInvSemigroup s_;
    FinitePoset order_;
    IdempotentPoset sigma_;
    std::optional<WayBelow> wb_s_, wb_sigma_;
    std::optional<Outcome> mirror_, ssc_, mult_s_, mult_sigma_;
    std::optional<bool> meet_sigma_, cont_s_, cont_sigma_, alg_s_, alg_sigma_;
};

CheckReport finite_suite(std::string const& suite, FiniteContext& ctx);
bool finite_replay(CheckReport const& r, FiniteContext& ctx);

/// Family counterpart of FiniteContext.
class FamilyContext {
public:
    FamilyContext(FamilyPtr f, FamilyOptions opts);

    SymbolicFamily const& f() const { return *f_; }
    FamilyOptions const& opts() const { return opts_; }

    Outcome const& mirror();
    Outcome const& reduced();
    Outcome const& projection();
    Outcome const& ssc();
    Outcome const& meet_continuous_sigma();
    Outcome const& continuous_s();
    Outcome const& continuous_sigma();
    Outcome const& algebraic_s();
    Outcome const& algebraic_sigma();
    Outcome const& multiplicative_s();
    Outcome const& multiplicative_sigma();

    /// The finite stand-in, for families without way-below oracles.
    FiniteContext* shadow();

private:
    FamilyPtr f_;
    FamilyOptions opts_;
    std::optional<Outcome> mirror_, reduced_, projection_, ssc_, meet_sigma_, cont_s_, cont_sigma_, alg_s_,
        alg_sigma_, mult_s_, mult_sigma_;
    bool shadow_built_ = false;
    std::unique_ptr<FiniteContext> shadow_;
};

CheckReport family_suite(std::string const& suite, FamilyContext& ctx);
bool family_replay(CheckReport const& r, FamilyContext& ctx);

} // namespace invsg::detail
