// Copyright 2026 The picode Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "picode/checks.hpp"
#include "picode/cli.hpp"
#include "picode/code_builder.hpp"
#include "picode/damping_analytics.hpp"
#include "picode/fidelity_bound.hpp"
#include "picode/number_theory.hpp"
#include "picode/oracle_suite.hpp"
#include "picode/reports.hpp"

namespace py = pybind11;
using namespace picode;

namespace {

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_py(const BigRational& x) {
  return fraction_type()(to_py(x.get_num()), to_py(x.get_den()));
}

py::list to_py(const GammaPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

BigInt to_bigint(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

// Fraction, int, str ("p/q", decimal) or float (exact binary value).
BigRational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) return exact_from_double(h.cast<double>());
  if (py::isinstance(h, fraction_type()))
    return ratio(to_bigint(h.attr("numerator")), to_bigint(h.attr("denominator")));
  return parse_rational(py::str(h).cast<std::string>());
}

py::dict report_dict(const DampingReport& r) {
  py::dict d;
  d["d"] = r.d;
  d["k0k0"] = to_py(r.k0k0);
  d["f1f1"] = to_py(r.f1f1);
  d["f1fm"] = to_py(r.f1fm);
  d["fourier_diag_l1"] = to_py(r.fourier_diag_l1);
  d["fourier_diag_lgt1"] = to_py(r.fourier_diag_lgt1);
  return d;
}

py::object surd(const SurdSum& s) {
  if (auto r = s.rational()) return to_py(*r);
  return py::str(s.to_string());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic permutation-invariant codes under amplitude damping";

  m.def("binomial", [](std::uint64_t n, std::uint64_t k) { return to_py(binomial(n, k)); });
  m.def("moment_sum", [](std::uint64_t n, unsigned r) { return to_py(moment_sum(n, r)); });
  m.def("is_prime", &is_prime);
  m.def("nth_prime", &nth_prime);
  m.def("build_coprime_sequence", [](std::uint64_t k, unsigned D) { return build_coprime_sequence(k, D).values; });
  m.def("diophantine_solvable", [](const py::int_& g, const py::int_& g2, const py::int_& s) {
    return diophantine_solvable(to_bigint(g), to_bigint(g2), to_bigint(s));
  });
  m.def("min_positive_solution", [](const py::int_& g, const py::int_& g2) {
    auto s = min_positive_solution(to_bigint(g), to_bigint(g2));
    return py::make_tuple(to_py(s.x), to_py(s.y));
  });
  m.def("index_set", &index_set);

  py::class_<CodeParameters>(m, "CodeParameters")
      .def_property_readonly("n", [](const CodeParameters& p) { return p.n; })
      .def_property_readonly("q", [](const CodeParameters& p) { return p.q; })
      .def_property_readonly("N", [](const CodeParameters& p) { return to_py(p.N); })
      .def_property_readonly("m", [](const CodeParameters& p) { return to_py(p.m); })
      .def_property_readonly("g", [](const CodeParameters& p) {
        py::list out;
        for (const auto& g : p.g) out.append(to_py(g));
        return out;
      })
      .def_property_readonly("D", &CodeParameters::D)
      .def_property_readonly("legacy", [](const CodeParameters& p) { return p.legacy; })
      .def("__repr__", [](const CodeParameters& p) {
        std::ostringstream s;
        s << "CodeParameters(n=[";
        for (std::size_t i = 0; i < p.n.size(); ++i) s << (i ? ", " : "") << p.n[i];
        s << "], q=" << p.q << ", N=" << p.N << ")";
        return s.str();
      });

  m.def(
      "validate",
      [](const std::vector<std::uint64_t>& n, unsigned q, bool allow_odd_N, bool legacy) {
        return validate(n, q, ValidateOptions{allow_odd_N, legacy});
      },
      py::arg("n"), py::arg("q"), py::arg("allow_odd_N") = false, py::arg("legacy") = false);
  m.def("toy_parameters", &toy_parameters, py::arg("n"), py::arg("g"), py::arg("m"));

  m.def("logical_state", [](std::size_t d, const CodeParameters& p) {
    py::dict out;
    for (const auto& [w, a2] : logical_state(d, p).support) out[to_py(w)] = to_py(a2);
    return out;
  });
  m.def("gram_matrix", [](const CodeParameters& p) {
    const auto gm = gram_matrix(p);
    py::list rows;
    for (const auto& row : gm.entries) {
      py::list r;
      for (const auto& e : row) r.append(surd(e));
      rows.append(r);
    }
    return rows;
  });

  m.def(
      "damping_report",
      [](std::size_t d, const CodeParameters& p, std::optional<std::size_t> max_order) {
        return report_dict(damping_report(d, p, max_order.value_or(kFullExpansion)));
      },
      py::arg("d"), py::arg("params"), py::arg("max_order") = py::none());
  m.def("dicke_pair_expectation", [](const py::int_& w, const py::int_& mm, const std::string& pair) {
    KrausPair k;
    if (pair == "K0K0") k = KrausPair::K0K0;
    else if (pair == "F1F1") k = KrausPair::F1F1;
    else if (pair == "F1Fm") k = KrausPair::F1Fm;
    else throw py::value_error("pair must be K0K0, F1F1 or F1Fm");
    return to_py(dicke_pair_expectation(to_bigint(w), to_bigint(mm), k));
  });
  m.def("cross_term_vanishes", [](std::size_t d, std::size_t d2, long shift, const CodeParameters& p) {
    auto v = cross_term_vanishes(d, d2, shift, p);
    py::object witness = py::none();
    if (v.witness) witness = py::make_tuple(to_py(v.witness->t), to_py(v.witness->t2), to_py(v.witness->weight));
    return py::make_tuple(v.vanishes, witness);
  });

  m.def("fidelity_bound", [](const CodeParameters& p, const py::iterable& gammas) {
    std::vector<BigRational> grid;
    for (auto g : gammas) grid.push_back(to_rational(g));
    const auto report = fidelity_lower_bound(p, grid);
    py::list rows;
    for (const auto& pt : report.points) {
      py::dict r;
      r["gamma"] = to_py(pt.gamma);
      r["raw_bound"] = to_py(pt.raw_bound);
      r["discounted_bound"] = to_py(pt.discounted_bound);
      r["lambda_K0"] = to_py(pt.lambda_k0);
      r["lambda_K1"] = to_py(pt.lambda_k1);
      r["lambda_Kl"] = to_py(pt.lambda_kl);
      r["argmin"] = py::make_tuple(pt.argmin[0], pt.argmin[1], pt.argmin[2]);
      rows.append(r);
    }
    return rows;
  });
  m.def("taylor_comparison", [](const CodeParameters& p, unsigned order) {
    const auto t = taylor_comparison(p, order);
    py::dict out;
    out["order"] = t.order;
    out["reference"] = to_py(t.reference_value);
    out["c"] = to_py(t.constants.c);
    out["c_prime"] = to_py(t.constants.c_prime);
    py::dict assemblies;
    for (const auto& a : t.assemblies) {
      py::dict ad;
      ad["d"] = py::make_tuple(a.d[0], a.d[1], a.d[2]);
      ad["coefficient"] = to_py(a.coefficient);
      ad["delta"] = to_py(a.delta);
      assemblies[py::str(a.name)] = ad;
    }
    out["assemblies"] = assemblies;
    return out;
  });
  m.def("check_code", [](const CodeParameters& p) {
    const auto r = check_code(p);
    return py::make_tuple(r.passed(), r.failures, to_py(r.max_overlap));
  });
  m.def("code_descriptor", [](const CodeParameters& p) { return code_descriptor(p).dump(2); });

  m.def("run_oracle_suite", [](unsigned mm, double gamma, std::uint64_t seed) {
    const auto r = oracle::run_oracle_suite(mm, gamma, seed);
    py::list checks;
    for (const auto& c : r.checks) {
      py::dict d;
      d["name"] = c.name;
      d["computed"] = c.computed;
      d["reference"] = c.reference;
      d["tolerance"] = c.tolerance;
      d["passed"] = c.passed();
      checks.append(d);
    }
    return checks;
  });

  m.def("cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "picode");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
