#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invsg/checkers.hpp"
#include "invsg/errors.hpp"
#include "invsg/groups.hpp"
#include "invsg/io.hpp"
#include "invsg/pbij.hpp"
#include "invsg/poset.hpp"

namespace py = pybind11;
using namespace invsg;

namespace {

// Family elements cross the boundary as tuples of exact rationals in
// string form, e.g. ("1/2", "1/3").
using PyElem = std::vector<std::string>;

Elem to_elem(PyElem const& v)
{
    Elem e;
    for (auto const& s : v)
        e.c.push_back(parse_rational(s));
    return e;
}

PyElem from_elem(Elem const& e)
{
    PyElem v;
    for (auto const& q : e.c)
        v.push_back(to_string(q));
    return v;
}

FamilyOptions make_options(std::uint64_t seed, std::size_t depth, std::size_t budget)
{
    FamilyOptions o;
    o.seed = seed;
    o.depth = depth;
    o.budget = budget;
    return o;
}

py::object json_loads(std::string const& s)
{
    return py::module_::import("json").attr("loads")(s);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Inverse semigroups: finite carriers, symbolic families and property suites";

    auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", invalid.ptr());
    py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

    py::class_<FiniteInvSemigroup>(m, "Carrier")
        .def_static("validate", &FiniteInvSemigroup::validate, py::arg("table"),
                    py::arg("names") = std::vector<std::string>{})
        .def_static("from_json", &parse_carrier, py::arg("text"))
        .def("to_json", &carrier_to_json)
        .def("__len__", &FiniteInvSemigroup::size)
        .def_property_readonly("size", &FiniteInvSemigroup::size)
        .def("mul", &FiniteInvSemigroup::mul)
        .def("inverse", &FiniteInvSemigroup::inverse)
        .def("le", &FiniteInvSemigroup::le)
        .def("source", &FiniteInvSemigroup::source)
        .def("is_idempotent", &FiniteInvSemigroup::is_idempotent)
        .def("idempotents", [](FiniteInvSemigroup const& s) { return s.idempotents().members; })
        .def_property_readonly("identity", &FiniteInvSemigroup::identity)
        .def("sup", [](FiniteInvSemigroup const& s, std::vector<ElementId> const& a) { return s.sup(a); })
        .def("h_class", &FiniteInvSemigroup::h_class)
        .def("is_reduced", &FiniteInvSemigroup::is_reduced)
        .def("is_commutative", &FiniteInvSemigroup::is_commutative)
        .def("rows", &FiniteInvSemigroup::rows)
        .def("name_of", &FiniteInvSemigroup::name_of)
        .def("hasse_dot",
             [](FiniteInvSemigroup const& s) {
                 std::vector<std::string> labels;
                 for (ElementId x = 0; x < s.size(); ++x)
                     labels.push_back(s.name_of(x));
                 return hasse_dot(FinitePoset::of(s), labels);
             })
        .def("__eq__", [](FiniteInvSemigroup const& a, FiniteInvSemigroup const& b) { return a == b; });

    m.def("canonical_form", [](FiniteInvSemigroup const& s) { return canonical_form(s); });
    m.def("isomorphic", &isomorphic);
    m.def("read_subject_file", &read_finite_subject, py::arg("path"));
    m.def("symmetric_inverse_monoid", [](int n) { return symmetric_inverse_monoid(n).carrier; }, py::arg("n"));
    m.def("enumerate_inverse_subsemigroups", py::overload_cast<int, int>(&enumerate_inverse_subsemigroups),
          py::arg("ground"), py::arg("max_order") = 10);
    m.def("coset_monoid", [](std::string const& group) { return coset_monoid(group_by_name(group)); },
          py::arg("group"));
    m.def("small_group_names", &small_group_names);

    py::class_<SymbolicFamily, std::shared_ptr<SymbolicFamily>>(m, "Family")
        .def_property_readonly("name", &SymbolicFamily::name)
        .def("op", [](SymbolicFamily const& f, PyElem const& x, PyElem const& y) {
            return from_elem(f.op(to_elem(x), to_elem(y)));
        })
        .def("inv", [](SymbolicFamily const& f, PyElem const& x) { return from_elem(f.inv(to_elem(x))); })
        .def("le", [](SymbolicFamily const& f, PyElem const& x, PyElem const& y) {
            return f.le(to_elem(x), to_elem(y));
        })
        .def("sigma", [](SymbolicFamily const& f, PyElem const& x) { return from_elem(f.sigma(to_elem(x))); })
        .def("is_idempotent", [](SymbolicFamily const& f, PyElem const& x) { return f.is_idempotent(to_elem(x)); })
        .def("format", [](SymbolicFamily const& f, PyElem const& x) { return f.format(to_elem(x)); })
        .def("landmarks", [](SymbolicFamily const& f) {
            std::vector<PyElem> out;
            for (auto const& x : f.landmarks())
                out.push_back(from_elem(x));
            return out;
        });

    // pybind11 holders cannot point to const; the bound methods are all const.
    m.def(
        "family", [](std::string const& name) { return std::const_pointer_cast<SymbolicFamily>(family_by_name(name)); },
        py::arg("name"));

    m.def("suite_names", &suite_names);
    m.def(
        "check",
        [](std::string const& suite, std::string const& subject, std::uint64_t seed, std::size_t depth,
           std::size_t budget) {
            Subject s = resolve_subject(subject);
            auto opts = make_options(seed, depth, budget);
            py::list out;
            if (suite == "all") {
                for (auto const& r : run_all(s, opts))
                    out.append(json_loads(to_json(r)));
            } else {
                out.append(json_loads(to_json(run_suite(suite, s, opts))));
            }
            return out;
        },
        py::arg("suite"), py::arg("subject"), py::arg("seed") = 1, py::arg("depth") = 64, py::arg("budget") = 10000,
        "Runs one suite, or every suite for \"all\"; returns report dicts.");
    m.def(
        "classify",
        [](std::string const& subject, std::uint64_t seed, std::size_t depth, std::size_t budget) {
            return json_loads(to_json(classify(resolve_subject(subject), make_options(seed, depth, budget))));
        },
        py::arg("subject"), py::arg("seed") = 1, py::arg("depth") = 64, py::arg("budget") = 10000);
}
