// invsg: validate carriers, enumerate inverse subsemigroups, classify
// families, run property suites and draw order diagrams.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "invsg/checkers.hpp"
#include "invsg/errors.hpp"
#include "invsg/io.hpp"
#include "invsg/pbij.hpp"
#include "invsg/poset.hpp"

using namespace invsg;

namespace {

enum Exit { kOk = 0, kSuiteFailed = 1, kInvalid = 2, kLimit = 3 };

struct Common {
    std::uint64_t seed = 1;
    std::size_t depth = 64;
    bool json = false;

    void attach(CLI::App* app)
    {
        app->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
        app->add_option("--depth", depth, "Chain depth for families")->capture_default_str()->check(CLI::Range(1, 4096));
        app->add_flag("--json", json, "Machine-readable output");
    }

    FamilyOptions options() const
    {
        FamilyOptions o;
        o.seed = seed;
        o.depth = depth;
        return options_from_env(o);
    }
};

int cmd_validate(std::string const& path, bool json)
{
    try {
        auto s = read_finite_subject(path);
        if (json)
            std::cout << nlohmann::json{{"valid", true}, {"carrier", nlohmann::json::parse(carrier_to_json(s))}}.dump()
                      << "\n";
        else
            std::cout << carrier_to_json(s) << "\n";
        return kOk;
    } catch (ValidationError const& e) {
        if (json)
            std::cout << nlohmann::json{{"valid", false},
                                        {"kind", to_string(e.kind())},
                                        {"witness", e.witness()},
                                        {"message", e.what()}}
                             .dump()
                      << "\n";
        else
            std::cout << "invalid: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kInvalid;
    }
}

int cmd_enumerate(int ground, int max_order)
{
    enumerate_inverse_subsemigroups(ground, max_order, [](FiniteInvSemigroup const& s) {
        std::cout << carrier_to_json(s) << "\n";
    });
    return kOk;
}

int cmd_classify(Subject const& subject, Common const& c)
{
    auto cl = classify(subject, c.options());
    if (c.json) {
        std::cout << to_json(cl) << "\n";
        return kOk;
    }
    std::cout << cl.subject << "\n";
    auto line = [](char const* name, Flag const& f) {
        std::string v = f.value ? (*f.value ? "true" : "false") : "unknown";
        std::cout << "  " << name << ": " << v << "  (" << f.evidence << ")\n";
    };
    line("reduced", cl.reduced);
    line("mirror", cl.mirror);
    line("continuous", cl.continuous);
    line("algebraic", cl.algebraic);
    line("sigma_continuous", cl.sigma_continuous);
    line("sigma_algebraic", cl.sigma_algebraic);
    line("stably_continuous", cl.stably_continuous);
    return kOk;
}

int cmd_check(std::string const& suite, Subject const& subject, Common const& c)
{
    std::vector<CheckReport> reports;
    if (suite == "all")
        reports = run_all(subject, c.options());
    else
        reports.push_back(run_suite(suite, subject, c.options()));
    int code = kOk;
    for (auto const& r : reports) {
        if (r.verdict == Verdict::Fail)
            code = kSuiteFailed;
        if (c.json) {
            std::cout << to_json(r) << "\n";
            continue;
        }
        std::cout << r.suite << ": " << to_string(r.verdict) << " (" << r.budget << " instances";
        if (!r.note.empty())
            std::cout << "; " << r.note;
        std::cout << ")\n";
        for (auto const& [k, v] : r.facts)
            std::cout << "  " << k << " = " << (v ? "true" : "false") << "\n";
        if (r.counterexample)
            std::cout << "  counterexample: " << r.counterexample->rendered << "\n";
    }
    return code;
}

std::string family_hasse(SymbolicFamily const& f, std::size_t window, std::uint64_t seed)
{
    std::vector<Elem> xs;
    auto add = [&](Elem const& x) {
        if (xs.size() < window && std::find(xs.begin(), xs.end(), x) == xs.end())
            xs.push_back(x);
    };
    for (auto const& x : f.landmarks())
        add(x);
    Rng rng(seed);
    for (std::size_t i = 0; i < window * 4 && xs.size() < window; ++i)
        add(f.sample(rng));
    std::size_t n = xs.size();
    std::vector<std::uint8_t> le(n * n);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(f.format(xs[a]));
        for (std::size_t b = 0; b < n; ++b)
            le[a * n + b] = f.le(xs[a], xs[b]);
    }
    return hasse_dot(FinitePoset::from_relation(n, std::move(le)), labels);
}

int cmd_hasse(Subject const& subject, std::string const& out, std::size_t window, Common const& c)
{
    std::string dot;
    if (subject.family) {
        dot = family_hasse(*subject.family, window, c.seed);
    } else {
        auto const& s = *subject.finite;
        if (s.size() > window)
            throw LimitExceeded("carrier has " + std::to_string(s.size()) + " elements, more than the window of " +
                                std::to_string(window));
        std::vector<std::string> labels;
        for (ElementId x = 0; x < s.size(); ++x)
            labels.push_back(s.name_of(x));
        dot = hasse_dot(FinitePoset::of(s), labels);
    }
    if (out == "dot" || out == "-") {
        std::cout << dot;
        return kOk;
    }
    std::ofstream f(out);
    if (!f)
        throw InvalidInput("cannot write " + out);
    f << dot;
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Inverse semigroups, their intrinsic order and mirror properties"};
    app.require_subcommand(1, 1);

    Common common;
    std::string path, subject_arg, suite = "all", family, out = "dot";
    int ground = 2, max_order = 10;
    std::size_t window = 40;

    auto* validate = app.add_subcommand("validate", "Check a carrier table and print it normalized");
    validate->add_option("file", path, "Carrier JSON")->required();
    validate->add_flag("--json", common.json, "Machine-readable output");

    auto* enumerate = app.add_subcommand("enumerate", "Inverse subsemigroups of I_n up to isomorphism, one JSON per line");
    enumerate->add_option("--ground", ground, "n")->required()->check(CLI::Range(1, 3));
    enumerate->add_option("--max-order", max_order, "Largest carrier to emit")->check(CLI::Range(1, 10))->capture_default_str();

    auto* cls = app.add_subcommand("classify", "Reduced, mirror and continuity flags with their evidence");
    auto* fam_opt = cls->add_option("--family", family, "Family name, e.g. rotation");
    cls->add_option("--subject", subject_arg, "Subject, as for check")->excludes(fam_opt);
    common.attach(cls);

    auto* check = app.add_subcommand("check", "Run property suites");
    check->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
    check->add_option("--subject", subject_arg, "family:<name>, coset:<group>, or a carrier/topology file")->required();
    common.attach(check);

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the intrinsic order in DOT");
    hasse->add_option("--subject", subject_arg, "Subject, as for check")->required();
    hasse->add_option("--out", out, "'dot' or '-' for stdout, otherwise a file path")->capture_default_str();
    hasse->add_option("--window", window, "Most elements to draw")->check(CLI::Range(1, 40))->capture_default_str();
    common.attach(hasse);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*validate)
            return cmd_validate(path, common.json);
        if (*enumerate)
            return cmd_enumerate(ground, max_order);
        if (*cls) {
            if (family.empty() && subject_arg.empty())
                throw InvalidInput("classify needs --family or --subject");
            return cmd_classify(resolve_subject(family.empty() ? subject_arg : "family:" + family), common);
        }
        if (*check)
            return cmd_check(suite, resolve_subject(subject_arg), common);
        if (*hasse)
            return cmd_hasse(resolve_subject(subject_arg), out, window, common);
    } catch (LimitExceeded const& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kLimit;
    } catch (InvalidInput const& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
