// Python bindings for the exact-rational operator library. Scalars cross the
// boundary as fractions.Fraction (never floats); weights as their canonical
// "eps|delta" strings; check lists as lists of {name, pass, detail} dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfq/decompose.hpp"
#include "gfq/verify.hpp"
#include "gfq/version.hpp"

namespace py = pybind11;
using namespace gfq;

namespace {

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(rational_str(r));
}

py::list checks_list(const CheckList& checks) {
    py::list out;
    for (const auto& c : checks.items) {
        py::dict d;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["detail"] = c.detail;
        out.append(std::move(d));
    }
    return out;
}

OperatorAlgebra two_spin_algebra(int m, int n, std::uint64_t dim_cap) {
    return OperatorAlgebra(std::make_shared<FockContext>(make_spec(m, n), 2, dim_cap));
}

py::dict component_dict(const ComponentReport& c, const AlgebraSpec& spec) {
    py::dict d;
    d["c"] = c.c;
    d["weight"] = osp_weight_str(c.weight, spec);
    d["dim"] = c.dim;
    d["qbar"] = fraction(c.qbar);
    d["casimir"] = fraction(c.casimir);
    d["status"] = c.status;
    return d;
}

}  // namespace

PYBIND11_MODULE(gfq, mod) {
    mod.doc() =
        "exact-rational construction of graded-fermion operator algebras and "
        "their orthosymplectic branching";
    mod.attr("__version__") = code_version;

    mod.def(
        "algebra_info",
        [](int m, int n) {
            const AlgebraSpec spec = make_spec(m, n);
            py::dict d;
            d["m"] = spec.m;
            d["n"] = spec.n;
            d["h"] = spec.h();
            d["k"] = spec.k();
            d["rho"] = osp_weight_str(rho(spec), spec);
            return d;
        },
        py::arg("m"), py::arg("n"),
        "basic invariants of the algebra pair: orbital counts, Cartan ranks "
        "and the Weyl vector");

    mod.def(
        "sector_dimension",
        [](int m, int n, int spins, int N) {
            return sector_dimension(make_spec(m, n), spins, N);
        },
        py::arg("m"), py::arg("n"), py::arg("spins"), py::arg("N"),
        "dimension of the N-particle sector from the closed form");

    mod.def(
        "casimir_eigenvalue",
        [](int m, int n, int a, int b) {
            return fraction(casimir_eigenvalue_labels(LabelPair{a, b}, make_spec(m, n)));
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"),
        "quadratic casimir eigenvalue on the (a,b) component, closed form");

    mod.def(
        "casimir_eigenvalue_at",
        [](int m, int n, const std::string& weight) {
            const AlgebraSpec spec = make_spec(m, n);
            return fraction(casimir_eigenvalue_osp(parse_osp_weight(weight, spec), spec));
        },
        py::arg("m"), py::arg("n"), py::arg("weight"),
        "quadratic casimir eigenvalue at an arbitrary weight \"eps|delta\"");

    mod.def(
        "casimir_gap_scan",
        [](int m, int n, int a, int b) {
            const AlgebraSpec spec = make_spec(m, n);
            const LabelPair labels{a, b};
            py::list rows;
            for (const auto& cand : scan_candidates(labels, spec)) {
                py::dict row;
                row["weight"] = osp_weight_str(scan_weight_to_osp(cand, spec), spec);
                row["gap"] = fraction(casimir_gap(cand, labels, spec));
                rows.append(std::move(row));
            }
            return rows;
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"),
        "candidate component weights for block (a,b) with their eigenvalue gaps");

    mod.def(
        "highest_weight",
        [](int m, int n, int a, int b) {
            const AlgebraSpec spec = make_spec(m, n);
            const Weight w = gl_highest_weight(LabelPair{a, b}, spec);
            std::string out;
            for (size_t i = 0; i < w.coords.size(); ++i) {
                if (i) out += ",";
                out += rational_str(w.coords[i]);
            }
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"),
        "highest weight of the two-column block (a,b) in orbital coordinates");

    mod.def(
        "predict_branching",
        [](int m, int n, int a, int b) {
            const AlgebraSpec spec = make_spec(m, n);
            const BranchingPrediction pred = predict_branching(LabelPair{a, b}, spec);
            py::dict d;
            d["a"] = pred.labels.a;
            d["b"] = pred.labels.b;
            d["exceptional"] = pred.exceptional;
            py::list comps;
            for (const auto& c : pred.components) {
                py::dict cd;
                cd["c"] = c.c;
                cd["weight"] = osp_weight_str(c.weight, spec);
                cd["irreducible"] = c.irreducible;
                cd["exceptional"] = c.exceptional;
                cd["absorbed"] = c.absorbed;
                comps.append(std::move(cd));
            }
            d["components"] = std::move(comps);
            py::list factors;
            for (const auto& [w, mult] : pred.composition_factors) {
                py::dict fd;
                fd["weight"] = osp_weight_str(w, spec);
                fd["multiplicity"] = mult;
                factors.append(std::move(fd));
            }
            d["composition_factors"] = std::move(factors);
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"),
        "predicted decomposition of block (a,b) under the orthosymplectic "
        "subalgebra, including the equal-size indecomposable case");

    mod.def(
        "verify_relations",
        [](int m, int n, int spins, int N, std::uint64_t dim_cap) {
            OperatorAlgebra ops(
                std::make_shared<FockContext>(make_spec(m, n), spins, dim_cap));
            return checks_list(relation_suite(ops, N));
        },
        py::arg("m"), py::arg("n"), py::arg("spins"), py::arg("N"),
        py::arg("dim_cap") = default_dim_cap,
        "run every applicable exact relation suite on one sector");

    mod.def(
        "verify_branching",
        [](int m, int n, int a, int b, std::uint64_t dim_cap) {
            auto ops = two_spin_algebra(m, n, dim_cap);
            const BranchingReport rep = verify_branching(ops, LabelPair{a, b});
            py::dict d;
            d["m"] = rep.m;
            d["n"] = rep.n;
            d["a"] = rep.a;
            d["b"] = rep.b;
            d["N"] = rep.N;
            d["block_dim"] = rep.block_dim;
            d["exceptional"] = rep.exceptional;
            py::list comps;
            for (const auto& c : rep.components) comps.append(component_dict(c, ops.spec()));
            d["components"] = std::move(comps);
            d["checks"] = checks_list(rep.checks);
            d["all_pass"] = rep.checks.all_pass();
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"),
        py::arg("dim_cap") = default_dim_cap,
        "run the computational branching pipeline on block (a,b) and report "
        "components, certificates and dimensions");

    mod.def(
        "exceptional_series",
        [](int n, std::uint64_t dim_cap) {
            auto ops = two_spin_algebra(n, n, dim_cap);
            const ExceptionalReport rep = exceptional_composition_series(ops);
            py::dict d;
            d["n"] = rep.n;
            d["block_dim"] = rep.block_dim;
            d["chain_dims"] = rep.chain_dims;
            py::list factors;
            for (const auto& f : rep.factors) factors.append(component_dict(f, ops.spec()));
            d["factors"] = std::move(factors);
            d["checks"] = checks_list(rep.checks);
            d["all_pass"] = rep.checks.all_pass();
            return d;
        },
        py::arg("n"), py::arg("dim_cap") = default_dim_cap,
        "composition series of the equal-size spin-singlet block at two "
        "particles");

    mod.def(
        "verify_root_data",
        [](int m, int n) { return checks_list(check_rho_roots(make_spec(m, n))); },
        py::arg("m"), py::arg("n"),
        "check the Weyl vector against the half graded sum of positive roots");
}
