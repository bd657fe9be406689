#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bezsub/bench.hpp"
#include "bezsub/parse.hpp"
#include "bezsub/roots_oracle.hpp"
#include "bezsub/subresultant.hpp"
#include "bezsub/system_io.hpp"

namespace py = pybind11;
using namespace bezsub;

namespace {

// Rationals cross the boundary as strings ("p/q" or "n") so no precision is
// ever lost to floats.
std::vector<Rat> rats_from_strings(const std::vector<std::string>& in) {
    std::vector<Rat> out;
    out.reserve(in.size());
    for (const auto& s : in) out.push_back(Rat::from_string(s));
    return out;
}

PolySystem make_system(const std::vector<Poly>& polys) { return PolySystem(polys); }

DeltaIndex make_delta(const PolySystem& sys, const std::vector<int>& delta) {
    return DeltaIndex(delta, sys.degrees());
}

std::vector<std::vector<std::string>> matrix_strings(const PMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).to_string());
    }
    return out;
}

std::vector<std::vector<std::string>> matrix_strings(const RMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).str());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_bezsub, m) {
    m.doc() = "Exact Bezout-type subresultants for several univariate polynomials";

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }), py::arg("text"))
        .def_property_readonly("degree", &Poly::degree)
        .def("coeff", [](const Poly& p, int k) { return p.coeff(k).str(); }, py::arg("power"))
        .def("coeffs",
             [](const Poly& p) {
                 std::vector<std::string> out;
                 out.reserve(p.coeffs().size());
                 for (const Rat& c : p.coeffs()) out.push_back(c.str());
                 return out;
             })
        .def("__call__", [](const Poly& p, const std::string& at) { return p(Rat::from_string(at)).str(); })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__neg__", [](const Poly& a) { return -a; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__str__", &Poly::to_string)
        .def("__repr__", [](const Poly& p) { return "Poly(\"" + p.to_string() + "\")"; });

    m.def("parse_poly", [](const std::string& s) { return parse_poly(s); }, py::arg("text"));
    m.def(
        "from_roots",
        [](const std::string& lc, const std::vector<std::string>& roots) {
            return Poly::from_roots(Rat::from_string(lc), rats_from_strings(roots));
        },
        py::arg("lc"), py::arg("roots"));

    m.def(
        "subresultant",
        [](const std::vector<Poly>& polys, const std::vector<int>& delta, const std::string& formula) {
            const PolySystem sys = make_system(polys);
            return subresultant(sys, make_delta(sys, delta), formula_from_name(formula));
        },
        py::arg("polys"), py::arg("delta"), py::arg("formula") = "nonhom",
        "S_delta of (F0, ..., Ft) through the chosen determinant formula "
        "(\"bezout\", \"hybrid\" or \"nonhom\").");

    m.def(
        "subresultant_matrix",
        [](const std::vector<Poly>& polys, const std::vector<int>& delta, const std::string& formula) {
            const PolySystem sys = make_system(polys);
            return matrix_strings(subresultant_matrix(sys, make_delta(sys, delta), formula_from_name(formula)));
        },
        py::arg("polys"), py::arg("delta"), py::arg("formula"),
        "The assembled delta-indexed matrix, entries rendered as text.");

    m.def(
        "scale_exponent",
        [](const std::vector<Poly>& polys, const std::vector<int>& delta, const std::string& formula) {
            const PolySystem sys = make_system(polys);
            return scale_exponent(sys, make_delta(sys, delta), formula_from_name(formula));
        },
        py::arg("polys"), py::arg("delta"), py::arg("formula"));

    m.def(
        "oracle_subresultant",
        [](const std::string& lc, const std::vector<std::string>& roots, const std::vector<Poly>& tail,
           const std::vector<int>& delta) {
            const RootSystem rs(Rat::from_string(lc), rats_from_strings(roots), tail);
            return oracle_subresultant(rs, DeltaIndex(delta, rs.degrees()));
        },
        py::arg("lc"), py::arg("roots"), py::arg("tail"), py::arg("delta"),
        "S_delta from the root-based definition; the ground-truth oracle.");

    m.def(
        "bezout_matrix",
        [](const Poly& a, const Poly& b) { return matrix_strings(bezout_matrix(a, b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "hybrid_bezout_matrix",
        [](const Poly& a, const Poly& b) { return matrix_strings(hybrid_bezout_matrix(a, b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "nonhom_bezout_matrix",
        [](const Poly& a, const Poly& b) { return matrix_strings(nonhom_bezout_matrix(a, b)); },
        py::arg("a"), py::arg("b"));

    m.def("enumerate_deltas", &enumerate_deltas, py::arg("degrees"),
          "Every valid delta != 0 for the degree vector, lexicographically.");

    m.def(
        "load_system",
        [](const std::string& path) {
            const PolySystem sys = load_system(path);
            std::vector<Poly> out;
            for (std::size_t i = 0; i < sys.size(); ++i) out.push_back(sys.poly(i));
            return out;
        },
        py::arg("path"));

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SystemFileError>(m, "SystemFileError", PyExc_ValueError);
}
