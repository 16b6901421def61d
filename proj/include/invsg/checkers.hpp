#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsg/core.hpp"
#include "invsg/families.hpp"

namespace invsg {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

/// A concrete instance on which a suite failed. Finite subjects fill `ids`,
/// families fill `elems`; `chain` names the family chain involved, if any.
struct Counterexample {
    std::string what;
    std::vector<ElementId> ids;
    std::vector<Elem> elems;
    std::string chain;
    std::string rendered;
};

struct CheckReport {
    std::string suite;
    std::string subject;
    Verdict verdict = Verdict::Pass;
    std::optional<Counterexample> counterexample;
    std::size_t budget = 0;  ///< instances examined
    std::string note;
    /// Independently evaluated sides of a biconditional, e.g. {"mirror", true}.
    std::vector<std::pair<std::string, bool>> facts;

    std::optional<bool> fact(std::string const& key) const;
};

/// One-line JSON with the keys suite, subject, verdict, counterexample,
/// budget, and, when present, note and facts.
std::string to_json(CheckReport const& r);

/// What a suite runs on: a finite carrier or a symbolic family.
struct Subject {
    std::string id;
    std::optional<FiniteInvSemigroup> finite;
    FamilyPtr family;

    static Subject of(std::string id, FiniteInvSemigroup s);
    static Subject of(FamilyPtr f);
};

/// "family:<name>" (any name family_by_name accepts), "coset:<group>", or a
/// path to a carrier or topology JSON file.
Subject resolve_subject(std::string const& text);

/// Suite names in canonical order.
std::vector<std::string> const& suite_names();

/// Throws InvalidInput for unknown suite names.
CheckReport run_suite(std::string const& suite, Subject const& subject, FamilyOptions const& opts = {});

/// Every suite, in canonical order.
std::vector<CheckReport> run_all(Subject const& subject, FamilyOptions const& opts = {});

/// Re-evaluates a failing report on its counterexample alone; true when the
/// failure reproduces.
bool replay(CheckReport const& report, Subject const& subject, FamilyOptions const& opts = {});

/// Per-flag classification backed by checker evidence. An absent value
/// means the evidence was only partial.
struct Flag {
    std::optional<bool> value;
    std::string evidence;
};

struct Classification {
    std::string subject;
    Flag reduced;
    Flag mirror;
    Flag continuous;
    Flag algebraic;
    Flag sigma_continuous;
    Flag sigma_algebraic;
    Flag stably_continuous;
    std::size_t depth = 0;
    std::size_t budget = 0;
};

Classification classify(Subject const& subject, FamilyOptions const& opts = {});
std::string to_json(Classification const& c);

} // namespace invsg
