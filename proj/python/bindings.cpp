// Copyright 2026 The qcw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Binary matrices cross the boundary as 2-D numpy uint8
// arrays; exact rationals as fractions.Fraction.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcw/codes.hpp"
#include "qcw/distance.hpp"
#include "qcw/library.hpp"
#include "qcw/lpbounds.hpp"
#include "qcw/structure.hpp"
#include "qcw/tanner.hpp"

namespace py = pybind11;
using namespace qcw;

namespace {

using U8Array = py::array_t<uint8_t, py::array::c_style | py::array::forcecast>;

BinaryMatrix to_matrix(const U8Array &a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
    auto v = a.unchecked<2>();
    BinaryMatrix m(v.shape(0), v.shape(1));
    for (py::ssize_t r = 0; r < v.shape(0); r++) {
        for (py::ssize_t c = 0; c < v.shape(1); c++) {
            if (v(r, c) & 1) m.set(r, c, true);
        }
    }
    return m;
}

U8Array to_array(const BinaryMatrix &m) {
    U8Array out({m.rows(), m.cols()});
    auto v = out.mutable_unchecked<2>();
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) v(r, c) = m.get(r, c);
    }
    return out;
}

py::object fraction(const Rational &q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(q.get_str());
}

py::list fractions(const std::vector<Rational> &v) {
    py::list out;
    for (const auto &q : v) out.append(fraction(q));
    return out;
}

std::vector<Rational> rationals(const py::sequence &seq) {
    std::vector<Rational> out;
    for (auto item : seq) {
        Rational q(py::str(item).cast<std::string>());
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

py::dict params_dict(const CssParams &p) {
    py::dict d;
    d["n"] = p.n;
    d["k"] = p.k;
    d["w"] = p.w();
    d["w_x"] = p.w_x;
    d["w_z"] = p.w_z;
    d["q_x"] = p.q_x;
    d["q_z"] = p.q_z;
    d["wbar"] = p.wbar;
    d["qbar"] = p.qbar;
    return d;
}

py::object support_or_none(const std::optional<BinaryVector> &v) {
    if (!v) return py::none();
    return py::cast(v->support());
}

py::dict surface_dict(const SurfaceReport &rep) {
    py::dict d;
    d["recognized"] = rep.recognized;
    py::list comps;
    for (const auto &c : rep.components) {
        py::dict cd;
        cd["vertices"] = c.vertices;
        cd["edges"] = c.edges;
        cd["faces"] = c.faces;
        cd["euler"] = c.euler;
        cd["k"] = c.k;
        comps.append(cd);
    }
    d["components"] = comps;
    d["removed_pairs"] = rep.removed_pairs;
    d["diagnostics"] = rep.diagnostics;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Check-weight-constrained quantum code tools";

    py::register_exception<MalformedCode>(m, "MalformedCode", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<SurfaceRejected>(m, "SurfaceRejected", PyExc_ValueError);

    // GF(2) linear algebra.
    m.def("rank", [](const U8Array &a) { return rank(to_matrix(a)); }, py::arg("matrix"));
    m.def("nullspace", [](const U8Array &a) { return to_array(nullspace(to_matrix(a))); }, py::arg("matrix"),
          "Basis of {x : A x = 0} as rows.");
    m.def("load_matrix", [](const std::string &path) { return to_array(load_matrix(path)); }, py::arg("path"),
          "Reads .alist (default) or .bm.");
    m.def("save_matrix", [](const std::string &path, const U8Array &a) { save_matrix(path, to_matrix(a)); },
          py::arg("path"), py::arg("matrix"));

    // Codes.
    py::class_<CssCode>(m, "CssCode")
        .def(py::init([](const U8Array &hx, const U8Array &hz) { return CssCode(to_matrix(hx), to_matrix(hz)); }),
             py::arg("hx"), py::arg("hz"))
        .def_property_readonly("n", &CssCode::n)
        .def_property_readonly("k", &CssCode::k)
        .def_property_readonly("hx", [](const CssCode &c) { return to_array(c.hx()); })
        .def_property_readonly("hz", [](const CssCode &c) { return to_array(c.hz()); })
        .def("params", [](const CssCode &c) { return params_dict(css_params(c)); })
        .def("weight_enumerators", [](const CssCode &c) {
            auto [ax, az] = css_weight_enumerators(c);
            return py::make_tuple(fractions(ax), fractions(az));
        });
    m.def("steane_code", &steane_code);
    m.def("toric_code", &toric_code, py::arg("l"));
    m.def("shor_code", &shor_code);

    // LP bounds.
    m.def("krawtchouk", [](size_t l, size_t j, size_t n, unsigned q) { return fraction(krawtchouk(l, j, n, q)); },
          py::arg("l"), py::arg("j"), py::arg("n"), py::arg("q"));
    m.def("macwilliams_transform",
          [](const py::sequence &a, unsigned q) { return fractions(macwilliams_transform(rationals(a), q)); },
          py::arg("distribution"), py::arg("q"));
    m.def(
        "max_feasible_k",
        [](const std::string &family, size_t n, size_t d, size_t w, bool strict) -> py::object {
            LpOptions opts;
            opts.drop_wide_rows = strict;
            auto r = max_feasible_k(parse_family(family), n, d, w, opts);
            if (!r.k) return py::none();
            return py::cast(*r.k);
        },
        py::arg("family"), py::arg("n"), py::arg("d"), py::arg("w"), py::arg("strict") = false,
        "Largest k with a feasible LP instance, or None.");
    m.def(
        "bound_table",
        [](const std::string &family, const std::vector<size_t> &ns, const std::vector<size_t> &ds,
           const std::vector<size_t> &ws, bool strict, size_t workers) {
            SweepSpec spec;
            spec.family = parse_family(family);
            spec.ns = ns;
            spec.ds = ds;
            spec.ws = ws;
            spec.options.drop_wide_rows = strict;
            BoundTable t;
            {
                py::gil_scoped_release release;
                t = postprocess(sweep(spec, workers), spec.family);
            }
            py::list rows;
            auto opt = [](const std::optional<size_t> &v) { return v ? py::cast(*v) : py::none(); };
            for (const auto &[key, c] : t.cells) {
                auto [n, d, w] = key;
                py::dict row;
                row["n"] = n;
                row["d"] = d;
                row["w"] = w;
                row["k_bar1"] = opt(c.k_bar1);
                row["k_bar2"] = opt(c.k_bar2);
                row["k_final"] = opt(c.k_final);
                row["status"] = cell_status_name(c.status);
                rows.append(row);
            }
            return rows;
        },
        py::arg("family"), py::arg("ns"), py::arg("ds"), py::arg("ws"), py::arg("strict") = false,
        py::arg("workers") = 0);

    // Distance.
    m.def(
        "estimate_distance",
        [](const CssCode &c, size_t trials, uint64_t seed) {
            EstimateOptions opts;
            opts.trials = trials;
            opts.seed = seed;
            DistanceEstimate e;
            {
                py::gil_scoped_release release;
                e = estimate_distance(c, opts);
            }
            py::dict d;
            d["d_x"] = e.x.d_upper;
            d["d_z"] = e.z.d_upper;
            d["d"] = e.d_upper();
            d["failure_bound"] = e.failure_bound();
            d["witness_x"] = e.x.witness.support();
            d["witness_z"] = e.z.witness.support();
            return d;
        },
        py::arg("code"), py::arg("trials") = 50000, py::arg("seed") = 0);
    m.def(
        "certify_distance",
        [](const CssCode &c, size_t t, size_t cap, uint64_t budget) {
            CertifyOptions opts{cap, budget};
            Certificate cert = certify_distance(c, t, opts);
            py::dict d;
            d["claimed_d"] = cert.claimed_d;
            d["verified"] = cert.verified;
            d["witness"] = support_or_none(cert.witness);
            d["witness_type"] = cert.witness ? py::cast(cert.witness_is_x ? "X" : "Z") : py::none();
            d["enumerated_count"] = cert.enumerated;
            return d;
        },
        py::arg("code"), py::arg("t"), py::arg("cap") = 9, py::arg("budget") = 200'000'000);
    m.def("exact_distance", [](const CssCode &c) { return exact_distance(c); }, py::arg("code"));
    m.def(
        "falsify_weight3",
        [](size_t n_exhaustive, size_t random_n, uint64_t trials, uint64_t seed) {
            FalsifierOptions opts{n_exhaustive, random_n, trials, seed};
            FalsifierReport rep = falsify_weight3(opts);
            py::dict d;
            d["exhaustive_codes"] = rep.exhaustive_codes;
            d["random_codes"] = rep.random_codes;
            d["codes_with_logicals"] = rep.codes_with_logicals;
            py::list ces;
            for (const auto &c : rep.counterexamples) {
                py::list checks;
                for (const auto &p : c.code.checks()) checks.append(p.str());
                ces.append(checks);
            }
            d["counterexamples"] = ces;
            return d;
        },
        py::arg("n_exhaustive") = 5, py::arg("random_n") = 8, py::arg("trials") = 100000, py::arg("seed") = 0);

    // Structure.
    m.def(
        "matrix_distances",
        [](const U8Array &a) {
            auto d = matrix_distances(to_matrix(a));
            return py::make_tuple(d.rank, d.d_row, d.d_col);
        },
        py::arg("matrix"), "(rank, d_row, d_col) of a binary matrix.");
    m.def(
        "subsystem_from_matrix",
        [](const U8Array &a) {
            SubsystemCode c = subsystem_from_matrix(to_matrix(a));
            std::vector<std::string> out;
            for (const auto &g : c.gauge()) out.push_back(g.str());
            return out;
        },
        py::arg("matrix"), "Gauge generators (Pauli strings) of the weight-2 subsystem code of A.");
    m.def(
        "matrix_from_gauge",
        [](const std::vector<std::string> &gauge) {
            if (gauge.empty()) throw std::invalid_argument("empty gauge group");
            std::vector<PauliOperator> ops;
            for (const auto &s : gauge) ops.push_back(PauliOperator::from_string(s));
            return to_array(analyze_weight2_subsystem(SubsystemCode(ops.front().size(), ops)));
        },
        py::arg("gauge"), "Binary matrix A of a weight-2 subsystem code.");
    m.def(
        "subsystem_parameters",
        [](const std::vector<std::string> &gauge) {
            if (gauge.empty()) throw std::invalid_argument("empty gauge group");
            std::vector<PauliOperator> ops;
            for (const auto &s : gauge) ops.push_back(PauliOperator::from_string(s));
            SubsystemCode c(ops.front().size(), ops);
            auto [dx, dz] = subsystem_css_distances(c);
            return py::make_tuple(c.n(), subsystem_decompose(c).k, std::min(dx, dz));
        },
        py::arg("gauge"), "(n, k, d) of a small CSS subsystem code.");
    m.def("check_surface", [](const CssCode &c) { return surface_dict(check_surface(c)); }, py::arg("code"));

    // Tanner codes.
    m.def(
        "tanner_code",
        [](const std::string &group, const std::vector<std::string> &a, const std::vector<std::string> &b,
           const U8Array &h_a, const U8Array &h_b, bool allow_identity) {
            FiniteGroup g = make_group(group);
            auto lookup = [&](const std::vector<std::string> &labels) {
                GeneratingSet s;
                for (const auto &l : labels) {
                    auto it = std::find(g.labels.begin(), g.labels.end(), l);
                    if (it == g.labels.end()) throw std::invalid_argument("unknown group element " + l);
                    s.elements.push_back(static_cast<uint32_t>(it - g.labels.begin()));
                }
                return s;
            };
            auto cx = build_complex(g, lookup(a), lookup(b), allow_identity);
            std::vector<size_t> identity(b.size());
            for (size_t i = 0; i < identity.size(); i++) identity[i] = i;
            return build_tanner_code(cx, to_matrix(h_a), to_matrix(h_b), identity);
        },
        py::arg("group"), py::arg("a"), py::arg("b"), py::arg("h_a"), py::arg("h_b"), py::arg("allow_identity") = false,
        "Quantum Tanner code on the left-right Cayley complex; group elements by label.");
}
