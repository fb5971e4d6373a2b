#include "commop/bipoly.hpp"
#include "commop/cli.hpp"
#include "commop/curve.hpp"
#include "commop/kncheck.hpp"
#include "commop/opdata.hpp"
#include "commop/opexpr.hpp"
#include "commop/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace commop;

namespace {

Rational to_rational(const py::object& v) {
    if (py::isinstance<py::int_>(v)) return Rational::parse(py::str(v).cast<std::string>());
    if (py::isinstance<py::str>(v)) return Rational::parse(v.cast<std::string>());
    // fractions.Fraction and anything else with numerator/denominator
    if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator"))
        return Rational::parse(py::str(v.attr("numerator")).cast<std::string>() + "/" +
                               py::str(v.attr("denominator")).cast<std::string>());
    throw py::type_error("expected an int, a Fraction or a string such as '-3/2'");
}

ZSeries eigen_series(const std::string& name, int order) {
    if (name == "lambda") return curve_series(lambda_fn(), order);
    if (name == "mu") return curve_series(mu_fn(), order);
    throw py::value_error("eigenvalue must be 'lambda' or 'mu'");
}

py::dict rank3_dict(const pipeline::Rank3Report& r) {
    py::dict d;
    d["pass"] = r.pass;
    d["verified_through"] = r.verified_through;
    d["lowest_z_order"] = r.lowest_z_order;
    d["detail"] = r.detail;
    if (r.first_failure) d["first_failure"] = py::make_tuple(r.first_failure->first, r.first_failure->second);
    return d;
}

py::object parse_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for a commuting pair of rank-3 differential operators";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NonCommutingError>(m, "NonCommutingError", PyExc_ArithmeticError);

    py::class_<XOp>(m, "Operator", "Differential operator sum c_k(x, eps) D^k with exact coefficients")
        .def(py::init([](const std::string& text) { return parse_op(text); }), py::arg("text"))
        .def_static("from_json", [](const std::string& j) { return parse_op_json(j); })
        .def_property_readonly("order", [](const XOp& a) { return a.is_zero() ? -1 : a.order(); })
        .def("is_zero", &XOp::is_zero)
        .def("coefficient", [](const XOp& a, int k) { return a.coefficient(k).str(); }, py::arg("k"))
        .def("to_json", [](const XOp& a) { return print_op(a, OpFormat::Json); })
        .def("to_tex", [](const XOp& a) { return print_op(a, OpFormat::Tex); })
        .def("substitute_eps", [](const XOp& a, const py::object& v) { return substitute_eps(a, to_rational(v)); })
        .def("__str__", [](const XOp& a) { return print_op(a); })
        .def("__repr__", [](const XOp& a) { return "Operator('" + print_op(a) + "')"; })
        .def("__eq__", [](const XOp& a, const XOp& b) { return a == b; })
        .def("__add__", [](const XOp& a, const XOp& b) { return a + b; })
        .def("__sub__", [](const XOp& a, const XOp& b) { return a - b; })
        .def("__neg__", [](const XOp& a) { return -a; })
        .def("__mul__", [](const XOp& a, const XOp& b) { return compose(a, b); })
        .def("__pow__", [](const XOp& a, int k) { return op_power(a, k); })
        .def("__hash__", [](const XOp& a) { return py::hash(py::str(print_op(a))); });

    m.def("parse", [](const std::string& text) { return parse_op(text); }, py::arg("text"));
    m.def("commutator", [](const XOp& a, const XOp& b) { return commutator(a, b); });
    m.def(
        "right_reduce",
        [](const XOp& a, const XOp& t) {
            const auto r = right_reduce(a, t);
            return py::make_tuple(r.quotient, r.remainder);
        },
        py::arg("a"), py::arg("t"), "A = Q o T + R for monic T; returns (Q, R)");

    m.def("l1", &opdata::make_L1, "L1 as printed");
    m.def("l2", &opdata::make_L2, "L2 as printed");
    m.def("l2_mu", &opdata::make_L2_mu, "L2 with the g0 constant term restored");
    m.def("calL", &opdata::make_calL, "the eps = 0 cube root of L1 + 1");
    m.def("bc_polynomial", [] { return opdata::bc_polynomial().str(); });

    m.def(
        "commutes", [](const XOp& a, const XOp& b) { return commutator(a, b).is_zero(); }, py::arg("a"),
        py::arg("b"));
    m.def(
        "eval_bc", [](const XOp& a, const XOp& b) { return eval_poly_at_pair(opdata::bc_polynomial(), a, b); },
        py::arg("a"), py::arg("b"), "w^3 - (eps^4/15552) w^2 - z^4 - z^3 at (z, w) = (a, b)");

    m.def(
        "derive",
        [](const std::string& eigen, int order, int series_order) {
            const auto d = pipeline::derive_coeffs(pipeline::chi_series(series_order), eigen_series(eigen, series_order),
                                                   order);
            if (!d.ok) throw py::value_error(d.diagnostic);
            return d.op;
        },
        py::arg("eigen") = "lambda", py::arg("order") = 9, py::arg("series_order") = 16,
        "Monic operator of the given order whose remainder mod T is the eigenvalue");
    m.def(
        "verify_rank3",
        [](const XOp& op, const std::string& eigen, int order) {
            return rank3_dict(
                pipeline::verify_rank3(op, pipeline::chi_series(order), eigen_series(eigen, order), order - 4));
        },
        py::arg("op"), py::arg("eigen"), py::arg("order") = 16);
    m.def(
        "solve_commuting",
        [](const XOp& a, int target, int lo, int hi, int eps_degree) {
            const auto s = pipeline::solve_commuting(a, target, pipeline::Window{lo, hi}, eps_degree);
            py::dict d;
            d["consistent"] = s.consistent;
            d["dimension"] = s.dimension;
            d["rational_dimension"] = s.rational_dimension;
            d["spanned_by_identity_and_input"] = s.spanned_by_identity_and_input;
            d["verified"] = s.verified;
            d["unknowns"] = s.unknowns;
            d["rank"] = s.rank;
            d["particular"] = s.particular;
            d["basis"] = s.basis;
            d["contains"] = py::cpp_function([s](const XOp& b) { return s.contains(b); });
            return d;
        },
        py::arg("a"), py::arg("order"), py::arg("lo") = -16, py::arg("hi") = 28, py::arg("eps_degree") = 8);
    m.def(
        "find_bc_relation",
        [](const XOp& a, const XOp& b, int weight) {
            const auto r = pipeline::find_bc_relation(a, b, weight);
            py::dict d;
            d["found"] = r.found;
            d["relation"] = r.q.str();
            d["weight"] = r.weight;
            d["unique"] = r.unique;
            d["verified"] = r.verified;
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("weight_bound") = 36);
    m.def("bc_function_identity", [](bool eps2_variant) {
        return bc_function_identity(eps2_variant ? CurveDef::eps2_variant() : CurveDef::standard());
    }, py::arg("eps2_variant") = false);

    m.def(
        "kn_check",
        [](const std::vector<py::object>& points, const py::object& eps, unsigned precision, bool literal) {
            std::vector<Rational> xs;
            for (const auto& p : points) xs.push_back(to_rational(p));
            kn::KnOptions o;
            o.precision = precision;
            o.literal_h = literal;
            o.literal_d1 = literal;
            const Rational e = to_rational(eps);
            kn::KnReport r;
            {
                py::gil_scoped_release release;
                r = kn::kn_check(xs, e, o);
            }
            py::list pts;
            for (const auto& p : r.points) {
                py::dict d;
                d["x"] = p.x.str();
                d["success"] = p.success;
                d["branches"] = p.branches.str();
                d["max_residual"] = kn::format_real(p.max_residual, 6);
                d["log10_max_residual"] = kn::log10_abs(p.max_residual);
                pts.append(d);
            }
            py::dict d;
            d["pass"] = r.pass;
            d["precision"] = r.precision;
            d["max_residual"] = kn::format_real(r.max_residual, 6);
            d["log10_max_residual"] = kn::log10_abs(r.max_residual);
            d["points"] = pts;
            return d;
        },
        py::arg("points") = std::vector<py::object>{py::int_(1), py::str("3/2"), py::int_(2), py::int_(3), py::int_(5)},
        py::arg("eps") = py::int_(-1), py::arg("precision") = 60u, py::arg("literal") = false);

    m.def(
        "verify",
        [](const std::string& suite, bool literal) {
            cli::Options o;
            o.literal = literal;
            std::string text;
            {
                py::gil_scoped_release release;
                text = cli::to_json(cli::verify(suite, o));
            }
            return parse_json(text);
        },
        py::arg("suite") = "all", py::arg("literal") = false, "Runs a verification suite; returns the JSON report");

    m.attr("__version__") = COMMOP_VERSION;
}
