#include "braidties/expr.hpp"
#include "braidties/identities.hpp"
#include "braidties/io.hpp"
#include "braidties/specht.hpp"
#include "braidties/tensor.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

namespace py = pybind11;
using namespace braidties;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GenKind kind_of(const std::string& s) {
    if (s == "T") return GenKind::T;
    if (s == "E") return GenKind::E;
    if (s == "Tinv") return GenKind::Tinv;
    throw std::invalid_argument("generator kind must be 'T', 'E' or 'Tinv'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic in the algebra of braids and ties";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeMismatch>(m, "SizeMismatch", PyExc_ValueError);

    py::class_<Element>(m, "Element")
        .def_property_readonly("n", &Element::n)
        .def("is_zero", &Element::is_zero)
        .def("terms", [](const Element& x) { return to_py(to_json(x)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &to_text)
        .def("__repr__", [](const Element& x) { return "Element(n=" + std::to_string(x.n()) + ", " + to_text(x) + ")"; });

    m.def("parse", &parse_word, py::arg("text"), py::arg("n"), "Normal form of an expression in T_i, E_i, E{...} and u.");
    m.def("one", &Element::one, py::arg("n"));
    m.def(
        "gen", [](const std::string& kind, int i, int n) { return gen(kind_of(kind), i, n); }, py::arg("kind"), py::arg("i"),
        py::arg("n"));
    m.def(
        "e_set",
        [](const std::vector<std::vector<int>>& blocks, int n) { return e_set(SetPartition::from_blocks(blocks, n)); },
        py::arg("blocks"), py::arg("n"));
    m.def("star", &star);
    m.def("flip", &flip);
    m.def("epsilon", [](const Element& x) { return epsilon(x).to_string(); });
    m.def("form", [](const Element& x, const Element& y) { return form(x, y).to_string(); });

    m.def("dim", [](int n) { return factorial(n) * bell_number(n); }, py::arg("n"));
    m.def(
        "basis",
        [](int n) {
            check_guard(n, 6, false, "basis");
            std::vector<std::string> out;
            for (const auto& k : basis_keys(n)) out.push_back(to_text(Element::basis(k)));
            return out;
        },
        py::arg("n"));

    m.def(
        "verify_relations", [](int n) { return to_py(to_json(verify_relations(n))); }, py::arg("n"));
    m.def(
        "verify_tensor_relations",
        [](int n, bool exact, int points, std::uint64_t seed) {
            check_guard(n, 4, false, "verify_tensor_relations");
            std::mt19937_64 rng(seed);
            return to_py(to_json(verify_tensor_relations(n, exact, points, rng)));
        },
        py::arg("n"), py::arg("exact") = true, py::arg("points") = 3, py::arg("seed") = 0x5eed);
    m.def(
        "faithfulness",
        [](int n, int points, std::uint64_t seed) {
            FaithfulnessOptions o;
            o.points = points;
            o.seed = seed;
            return to_py(to_json(faithfulness_certificate(n, o)));
        },
        py::arg("n"), py::arg("points") = 1, py::arg("seed") = 0x5eed);
    m.def(
        "quotient_checks", [](int n) { return to_py(to_json(quotient_checks(n))); }, py::arg("n"));

    m.def(
        "labels",
        [](int n) {
            json a = json::array();
            for (const auto& l : enumerate_labels(n)) a.push_back(to_json(l));
            return to_py(a);
        },
        py::arg("n"));
    m.def(
        "specht", [](int n) { return to_py(to_json(classification_report(n))); }, py::arg("n"),
        "Label list, dimensions and square sum.");
    m.def(
        "specht_dim",
        [](int n, int index) {
            const auto labels = enumerate_labels(n);
            if (index < 1 || index > static_cast<int>(labels.size())) throw py::index_error("label index out of range");
            return specht_module(labels[static_cast<std::size_t>(index - 1)]).dim;
        },
        py::arg("n"), py::arg("index"));

    m.def(
        "moebius",
        [](const std::vector<std::vector<int>>& blocks, int n) {
            const auto A = SetPartition::from_blocks(blocks, n);
            return py::make_tuple(moebius_coefficient(A).to_fraction_string(), sp_moebius(A, SetPartition::top(n)));
        },
        py::arg("blocks"), py::arg("n"), "(brute-force coefficient, lattice value).");

    m.def(
        "gram_rank",
        [](int n, const std::string& at) {
            check_guard(n, 4, false, "gram_rank");
            const auto rows = gram_matrix(n).specialized_rows(Rational::parse(at));
            if (!rows) throw std::invalid_argument("pole at u = " + at);
            return rank_of(*rows);
        },
        py::arg("n"), py::arg("at") = "1");
}
