#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symprod/betti.hpp"
#include "symprod/errors.hpp"
#include "symprod/expression.hpp"
#include "symprod/orbifold_ring.hpp"
#include "symprod/table.hpp"

namespace py = pybind11;
using namespace symprod;

namespace {

// AlgebraPtr points at a const object, which pybind11 holders do not take.
struct Algebra {
    AlgebraPtr ptr;
};

py::dict to_dict(const PoincarePolynomial& p) {
    py::dict out;
    py::object as_int = py::module_::import("builtins").attr("int");
    for (const auto& [degree, dim] : p) out[py::int_(degree)] = as_int(dim.get_str());
    return out;
}

SectorTerm single_term(const std::string& text, const AlgebraPtr& alg, int n) {
    auto terms = split_terms(parse_ring_element(text, alg, n));
    if (terms.size() != 1) throw ExpressionError("expected exactly one sector term", 0);
    return terms.front();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact orbifold cohomology rings of symmetric products";

    auto base = py::register_exception<Error>(m, "SymprodError", PyExc_RuntimeError);
    py::register_exception<ExpressionError>(m, "ExpressionError", base.ptr());
    py::register_exception<NotASurface>(m, "NotASurface", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

    py::class_<Algebra>(m, "Algebra")
        .def_static(
            "load", [](const std::string& path, bool twist) { return Algebra{load_algebra_file(path, twist)}; },
            py::arg("path"), py::arg("twist") = false)
        .def_property_readonly("name", [](const Algebra& a) { return a.ptr->name(); })
        .def_property_readonly("complex_dim", [](const Algebra& a) { return a.ptr->complex_dim(); })
        .def_property_readonly("sign_twist", [](const Algebra& a) { return a.ptr->sign_twist(); })
        .def_property_readonly("basis",
                               [](const Algebra& a) {
                                   std::vector<std::pair<std::string, int>> out;
                                   for (const auto& b : a.ptr->basis()) out.emplace_back(b.id, b.degree);
                                   return out;
                               })
        .def("euler_class", [](const Algebra& a) {
            RingElement e(a.ptr, 1);
            for (const auto& [index, coeff] : a.ptr->euler_class().terms()) e.add(Permutation::identity(1), {index}, coeff);
            return format_ring_element(e);
        });

    m.def(
        "multiply",
        [](const Algebra& a, int n, const std::string& lhs, const std::string& rhs, bool sym) {
            RingElement x = parse_ring_element(lhs, a.ptr, n);
            RingElement y = parse_ring_element(rhs, a.ptr, n);
            if (sym) {
                x = symmetrize(x).full;
                y = symmetrize(y).full;
            }
            return format_ring_element(x * y);
        },
        py::arg("algebra"), py::arg("n"), py::arg("lhs"), py::arg("rhs"), py::arg("sym") = false);

    m.def(
        "three_point",
        [](const Algebra& a, int n, const std::string& x, const std::string& y, const std::string& z) {
            return to_string(three_point(single_term(x, a.ptr, n), single_term(y, a.ptr, n), single_term(z, a.ptr, n)));
        },
        py::arg("algebra"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "orbifold_poincare", [](const Algebra& a, int n) { return to_dict(orbifold_poincare(a.ptr, n)); },
        py::arg("algebra"), py::arg("n"));
    m.def(
        "gottsche_polynomial", [](const Algebra& a, int n) { return to_dict(gottsche_polynomial(*a.ptr, n)); },
        py::arg("algebra"), py::arg("n"));
    m.def(
        "invariant_dimensions",
        [](const Algebra& a, int n) { return invariant_dimensions(invariant_basis(a.ptr, n)); }, py::arg("algebra"),
        py::arg("n"));

    m.def(
        "table_json",
        [](const Algebra& a, int n, std::optional<int> min_degree, std::optional<int> max_degree) {
            std::optional<DegreeRange> range;
            if (min_degree || max_degree) {
                range = DegreeRange{min_degree.value_or(0), max_degree.value_or(2 * a.ptr->complex_dim() * n)};
            }
            MultiplicationTable table(a.ptr, n, range);
            std::vector<TableRow> rows;
            {
                py::gil_scoped_release release;
                for (std::size_t i = 0; i < table.size(); ++i) rows.push_back(table.row(i));
            }
            return table.render_json(rows);
        },
        py::arg("algebra"), py::arg("n"), py::arg("min_degree") = py::none(), py::arg("max_degree") = py::none());

    m.def(
        "graph_defects",
        [](const std::string& pi, const std::string& rho, int n) {
            return graph_defects(Permutation::parse(pi, n), Permutation::parse(rho, n));
        },
        py::arg("pi"), py::arg("rho"), py::arg("n"));
}
