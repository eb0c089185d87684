#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qprime/exterior.hpp"
#include "qprime/groebner.hpp"
#include "qprime/laurent.hpp"
#include "qprime/minors.hpp"
#include "qprime/parser.hpp"
#include "qprime/verify.hpp"

namespace py = pybind11;
using namespace qprime;

namespace {

Permutation perm_of(const std::string& s) { return Permutation::parse(s); }

py::dict cert_to_dict(const Certificate& c) {
    py::dict d;
    d["claim"] = c.claim;
    d["m"] = c.m;
    d["n"] = c.n;
    if (c.y) d["y"] = *c.y;
    d["pass"] = c.pass;
    d["witnesses"] = c.witnesses;
    py::list scalars;
    for (const auto& s : c.scalars) {
        py::dict e;
        e["generator"] = s.generator;
        e["predicted"] = s.predicted;
        if (s.observed) e["observed"] = *s.observed;
        else e["observed"] = py::none();
        e["both_sides_zero"] = s.both_sides_zero;
        scalars.append(e);
    }
    d["scalars"] = scalars;
    d["elapsed_ms"] = c.elapsed_ms;
    return d;
}

} // namespace

PYBIND11_MODULE(_qprime, mod) {
    mod.doc() = "exact computations with torus-invariant prime ideals of quantum matrices";

    py::class_<QMElement>(mod, "Element")
        .def(py::init([](int m, int n, const std::string& text) {
                 return parse_element(m, n, text);
             }),
             py::arg("m"), py::arg("n"), py::arg("text"))
        .def_property_readonly("m", &QMElement::rows)
        .def_property_readonly("n", &QMElement::cols)
        .def("is_zero", &QMElement::is_zero)
        .def("degree", &QMElement::degree)
        .def("__str__", &QMElement::str)
        .def("__repr__", [](const QMElement& e) { return "Element(" + e.str() + ")"; })
        .def("__add__", [](const QMElement& a, const QMElement& b) { return a + b; })
        .def("__sub__", [](const QMElement& a, const QMElement& b) { return a - b; })
        .def("__mul__", [](const QMElement& a, const QMElement& b) { return a * b; })
        .def("__neg__", [](const QMElement& a) { return -a; })
        .def("__eq__", [](const QMElement& a, const QMElement& b) { return a == b; })
        .def("torus_weight",
             [](const QMElement& e) -> py::object {
                 auto w = e.torus_weight();
                 if (std::holds_alternative<std::vector<long>>(w))
                     return py::cast(std::get<std::vector<long>>(w));
                 return py::none();
             })
        .def("q_degree", [](const QMElement& e) -> py::object {
            auto d = e.q_degree();
            if (std::holds_alternative<RootElt>(d)) return py::cast(std::get<RootElt>(d).coords());
            return py::none();
        });

    py::class_<GroebnerBasis>(mod, "GroebnerBasis")
        .def_static(
            "two_sided",
            [](int m, int n, const std::vector<QMElement>& gens, int degree_guard) {
                GBOptions opts;
                opts.degree_guard = degree_guard;
                return GroebnerBasis::two_sided(m, n, gens, opts);
            },
            py::arg("m"), py::arg("n"), py::arg("gens"), py::arg("degree_guard") = 0)
        .def_static(
            "left",
            [](int m, int n, const std::vector<QMElement>& gens, int degree_guard) {
                GBOptions opts;
                opts.degree_guard = degree_guard;
                return GroebnerBasis::left(m, n, gens, opts);
            },
            py::arg("m"), py::arg("n"), py::arg("gens"), py::arg("degree_guard") = 0)
        .def("elements", &GroebnerBasis::elements)
        .def("normal_form", &GroebnerBasis::normal_form)
        .def("contains", &GroebnerBasis::contains)
        .def("gk_dim_quotient", &GroebnerBasis::gk_dim_quotient)
        .def("to_json", &GroebnerBasis::to_json);

    mod.def("qint", [](long n, long d) { return qint(n, d).str(); }, py::arg("n"), py::arg("d") = 1);
    mod.def(
        "gauss_binom", [](long n, long k, long d) { return gauss_binom(n, k, d).str(); },
        py::arg("n"), py::arg("k"), py::arg("d") = 1);

    mod.def("length", [](const std::string& y) { return perm_of(y).length(); });
    mod.def("bruhat_leq",
            [](const std::string& y, const std::string& w) { return bruhat_leq(perm_of(y), perm_of(w)); });
    mod.def("coxeter_cm", [](int m, int n) {
        auto [cm, word] = coxeter_cm(m, n);
        return py::make_tuple(cm.str(), word);
    });
    mod.def("bruhat_interval", [](const std::string& w) {
        std::vector<std::string> out;
        for (const auto& y : bruhat_interval(perm_of(w))) out.push_back(y.str());
        return out;
    });

    mod.def("upsilon",
            [](const std::string& y, int m, int n) { return upsilon(perm_of(y), m, n); });
    mod.def(
        "quantum_minor",
        [](int m, int n, const std::vector<int>& rows, const std::vector<int>& cols) {
            return quantum_minor(m, n, rows, cols);
        },
        py::arg("m"), py::arg("n"), py::arg("rows"), py::arg("cols"));
    mod.def(
        "generating_sequence",
        [](const std::string& y, int m, int n, bool dedup) {
            py::list out;
            for (const auto& [idx, u] : generating_sequence(perm_of(y), m, n, dedup)) {
                py::dict d;
                d["J"] = idx.J;
                d["rows"] = idx.rows;
                d["cols"] = idx.cols;
                d["element"] = u;
                out.append(d);
            }
            return out;
        },
        py::arg("y"), py::arg("m"), py::arg("n"), py::arg("dedup") = false);
    mod.def("predicted_scalar", [](const std::vector<int>& J, int a, int b, int m, int n) {
        return predicted_scalar(J, a, b, m, n);
    });

    mod.def("verify_polynormal", [](const std::string& y, int m, int n) {
        return cert_to_dict(verify_polynormal(perm_of(y), m, n));
    });
    mod.def("verify_poset", [](int m, int n) { return cert_to_dict(verify_poset(m, n)); });
    mod.def("verify_heights", [](int m, int n) { return cert_to_dict(verify_heights(m, n)); });
    mod.def("verify_separation", [](int m, int n) { return cert_to_dict(verify_separation(m, n)); });
    mod.def("verify_exterior", [](int m, int n) {
        py::list out;
        const int N = m + n;
        out.append(cert_to_dict(ext_ac_suite(N)));
        out.append(cert_to_dict(ext_uq_relations_suite(std::min(N, 4))));
        out.append(cert_to_dict(ext_braid_basics_suite()));
        out.append(cert_to_dict(ext_extreme_demazure_suite(std::min(N, 4))));
        out.append(cert_to_dict(ext_inter_suite(m, n)));
        return out;
    });
    mod.def("poset_dot", &poset_dot);
}
