// Python bindings. Unbounded integers cross the boundary as native python
// ints via an mpz <-> PyLong caster (decimal-string based; exact).

#include "descent_forge/descent.hpp"
#include "descent_forge/oracle.hpp"
#include "descent_forge/tree.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
namespace df = descent_forge;

namespace pybind11::detail {

template <>
struct type_caster<df::Int> {
    PYBIND11_TYPE_CASTER(df::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) {
            return false;
        }
        py::object as_str = py::str(src);
        value = df::Int(as_str.cast<std::string>());
        return true;
    }

    static handle cast(const df::Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

py::object rational_to_fraction(const df::Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::cast(r.num()), py::cast(r.den()));
}

py::dict step_to_dict(const df::DescentStep& step) {
    py::dict d;
    d["child"] = py::cast(step.child);
    d["parent"] = py::cast(step.parent);
    d["kind"] = std::string(df::to_string(step.kind));
    d["variant"] = step.variant;
    d["theta"] = rational_to_fraction(step.theta);
    d["delta"] = py::cast(step.delta);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "all primitive positive solutions of 7x^2 + 59y^2 = 3^m";

    py::class_<df::PPSolution>(m, "PPSolution")
        .def(py::init<df::Int, df::Int, unsigned long>(), py::arg("x"), py::arg("y"),
             py::arg("m"))
        .def_property_readonly("x", &df::PPSolution::x)
        .def_property_readonly("y", &df::PPSolution::y)
        .def_property_readonly("m", &df::PPSolution::m)
        .def("__eq__", &df::PPSolution::operator==)
        .def("__lt__", &df::PPSolution::operator<)
        .def("__repr__", [](const df::PPSolution& s) {
            return "PPSolution(x=" + s.x().get_str() + ", y=" + s.y().get_str() +
                   ", m=" + std::to_string(s.m()) + ")";
        });

    py::class_<df::TreeNode>(m, "TreeNode")
        .def_readonly("solution", &df::TreeNode::solution)
        .def_readonly("depth", &df::TreeNode::depth)
        .def_readonly("path", &df::TreeNode::path);

    // core arithmetic
    m.def("gcd", &df::gcd);
    m.def("valuation_3", &df::valuation_3);
    m.def("isqrt", &df::isqrt);
    m.def("is_perfect_square", &df::is_perfect_square);
    m.def("legendre_symbol", &df::legendre_symbol);
    m.def("jacobi_symbol", &df::jacobi_symbol);
    m.def("ternary_solvable", &df::ternary_solvable);

    // forms
    m.def("eval_forms", [](const df::Int& p, const df::Int& q) {
        df::FormTriple t = df::eval_forms(p, q);
        return py::make_tuple(t.a, t.b, t.c);
    });
    m.def("check_identity", [](const df::Int& a, const df::Int& b, const df::Int& c) {
        return df::check_identity(df::FormTriple{a, b, c});
    });
    m.def("incidence", [](const df::Int& x, const df::Int& y, const df::Int& z) {
        return rational_to_fraction(df::incidence(x, y, z));
    });
    m.def("reconstruct_from_incidence", [](const df::Int& p, const df::Int& q) {
        df::Reconstruction r = df::reconstruct_from_incidence(p, q);
        return py::make_tuple(r.x, r.y, r.z, r.delta);
    });

    // solutions
    m.def("verify", [](const df::Int& x, const df::Int& y, long m) {
        df::SolutionClass cls = df::verify(x, y, m);
        return py::make_tuple(std::string(df::to_string(cls.tag)), cls.scaled_by);
    });
    m.def("is_suitable", &df::is_suitable);
    m.def("parity_check", &df::parity_check);

    // successors and descent
    m.def("first_successor", &df::first_successor);
    m.def("second_successor", &df::second_successor);
    m.def("recognize_successor", [](const df::PPSolution& c, const df::PPSolution& p) {
        return std::string(df::to_string(df::recognize_successor(c, p)));
    });
    m.def("predecessor", [](const df::PPSolution& s) { return step_to_dict(df::predecessor(s)); });
    m.def("descend_to_root", [](const df::PPSolution& s) {
        py::list steps;
        for (const df::DescentStep& step : df::descend_to_root(s).steps) {
            steps.append(step_to_dict(step));
        }
        return steps;
    });
    m.def("descent_certificate", [](const df::PPSolution& s) {
        return df::certificate_json(df::descend_to_root(s)).dump(2);
    });
    m.def("check_certificate", [](const std::string& text) {
        return df::check_certificate(df::json::parse(text));
    });

    // tree and oracle
    m.def("enumerate_tree", &df::enumerate_tree, py::arg("max_m"));
    m.def(
        "brute_force",
        [](const df::Int& a, const df::Int& b, const df::Int& lambda, const df::Int& k,
           unsigned long m, std::uint64_t budget) {
            py::list hits;
            for (const df::OracleHit& h : df::brute_force(df::EquationSpec(a, b, lambda, k), m, budget)) {
                hits.append(py::make_tuple(h.x, h.y, h.primitive));
            }
            return hits;
        },
        py::arg("a"), py::arg("b"), py::arg("lambda"), py::arg("k"), py::arg("m"),
        py::arg("budget") = df::kDefaultIterationBudget);
    m.def(
        "oracle_sweep",
        [](const df::Int& a, const df::Int& b, const df::Int& lambda, const df::Int& k,
           unsigned long m_max, std::uint64_t budget) {
            df::OracleSweep sweep =
                df::oracle_sweep(df::EquationSpec(a, b, lambda, k), m_max, budget);
            py::dict hits;
            for (const auto& [m, mhits] : sweep.hits) {
                py::list rows;
                for (const df::OracleHit& h : mhits) {
                    rows.append(py::make_tuple(h.x, h.y, h.primitive));
                }
                hits[py::cast(m)] = rows;
            }
            py::dict out;
            out["hits"] = hits;
            out["suitable"] = py::cast(sweep.suitable);
            out["truncated"] = sweep.truncated;
            out["truncated_at"] = sweep.truncated_at;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("lambda"), py::arg("k"), py::arg("m_max"),
        py::arg("budget") = df::kDefaultIterationBudget);
}
