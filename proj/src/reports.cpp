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

#include "picode/reports.hpp"

#include <cstdio>
#include <sstream>

#include "picode/code_builder.hpp"

namespace picode {

namespace {

Json assembly_json(const Assembly& a) {
  Json j;
  j["name"] = a.name;
  j["d"] = {a.d[0], a.d[1], a.d[2]};
  j["coefficient"] = to_fraction_string(a.coefficient);
  j["delta_vs_closed_form"] = to_fraction_string(a.delta);
  j["equal"] = a.equal;
  j["at_least_closed_form"] = a.at_least_reference;
  return j;
}

Json comparison_json(const TaylorComparison& c) {
  Json j;
  j["order"] = c.order;
  j["closed_form"] = to_fraction_string(c.reference_value);
  j["assemblies"] = Json::array();
  for (const auto& a : c.assemblies) j["assemblies"].push_back(assembly_json(a));
  return j;
}

std::string pair_label(std::size_t d, std::size_t d2) {
  return "(" + std::to_string(d) + "," + std::to_string(d2) + ")";
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

Json code_descriptor(const CodeParameters& params) {
  Json j;
  j["n"] = params.n;
  j["q"] = params.q;
  j["N"] = params.N.get_str();
  Json g = Json::array();
  for (const auto& x : params.g) g.push_back(x.get_str());
  j["g"] = g;
  j["m"] = params.m.get_str();
  j["legacy"] = params.legacy;
  Json states = Json::array();
  for (std::size_t d = 1; d <= params.D(); ++d) {
    const DickeVector v = logical_state(d, params);
    Json s;
    s["d"] = d;
    Json weights = Json::array();
    Json amps = Json::array();
    for (const auto& [w, a2] : v.support) {
      weights.push_back(w.get_str());
      amps.push_back(to_fraction_string(a2));
    }
    s["weights"] = weights;
    s["squared_amplitudes"] = amps;
    states.push_back(s);
  }
  j["states"] = states;
  return j;
}

CodeParameters parse_code_descriptor(const Json& doc) {
  CodeParameters params;
  try {
    const auto n = doc.at("n").get<std::vector<std::uint64_t>>();
    const auto q = doc.at("q").get<unsigned>();
    const bool legacy = doc.value("legacy", false);
    if (legacy && q == 0) {
      std::vector<std::uint64_t> g;
      for (const auto& x : doc.at("g")) g.push_back(std::stoull(x.get<std::string>()));
      params = toy_parameters(n, g, std::stoull(doc.at("m").get<std::string>()));
    } else {
      ValidateOptions opts;
      opts.legacy = legacy;
      opts.allow_odd_product = true;
      params = validate(n, q, opts);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DescriptorError(std::string("DescriptorError: ") + e.what());
  }
  const Json expected = code_descriptor(params);
  for (const char* key : {"N", "g", "m", "states"}) {
    if (doc.contains(key) && doc.at(key) != expected.at(key)) {
      throw DescriptorError(std::string("DescriptorError: field '") + key + "' does not match the parameters");
    }
  }
  return params;
}

Json damping_report_json(const DampingReport& report) {
  Json j;
  j["d"] = report.d;
  j["k0k0"] = report.k0k0.to_strings();
  j["f1f1"] = report.f1f1.to_strings();
  j["f1fm"] = report.f1fm.to_strings();
  j["fourier_diag_l1"] = report.fourier_diag_l1.to_strings();
  j["fourier_diag_lgt1"] = report.fourier_diag_lgt1.to_strings();
  return j;
}

std::string fidelity_csv(const FidelityReport& report, bool discounted) {
  std::ostringstream out;
  out << "gamma,raw_bound";
  if (discounted) out << ",discounted_bound";
  out << ",lambda_K0,lambda_K1,lambda_Kl,argmin_K0,argmin_K1,argmin_Kl\n";
  for (const auto& p : report.points) {
    out << to_scientific(p.gamma, 6) << ',' << to_scientific(p.raw_bound, 12);
    if (discounted) out << ',' << to_scientific(p.discounted_bound, 12);
    out << ',' << to_scientific(p.lambda_k0, 12) << ',' << to_scientific(p.lambda_k1, 12) << ','
        << to_scientific(p.lambda_kl, 12) << ',' << p.argmin[0] << ',' << p.argmin[1] << ',' << p.argmin[2]
        << '\n';
  }
  return out.str();
}

Json taylor_json(const TaylorReport& report) {
  const auto& pc = report.first.constants;
  Json j;
  j["constants"] = {
      {"first_order", to_fraction_string(pc.first_order)},
      {"c", to_fraction_string(pc.c)},
      {"c_prime", to_fraction_string(pc.c_prime)},
      {"second_order", to_fraction_string(pc.second_order)},
      {"second_order_prime", to_fraction_string(pc.second_order_prime)},
      {"q_scaling", to_fraction_string(pc.q_scaling)},
  };
  j["first_order"] = comparison_json(report.first);
  j["second_order"] = comparison_json(report.second);
  j["q_scaling_holds"] = report.q_scaling_holds;
  j["first_order_closed_form_consistent"] = report.first_order_closed_form_consistent;
  j["failures"] = report.failures;
  j["passed"] = report.passed();
  return j;
}

Json check_json(const CodeCheckReport& report) {
  Json j;
  Json overlaps = Json::array();
  for (const auto& o : report.overlaps) {
    Json w = Json::array();
    for (const auto& x : o.overlap.colliding_weights) w.push_back(x.get_str());
    overlaps.push_back({{"pair", pair_label(o.d, o.d2)}, {"overlap", o.overlap.value.to_string()}, {"colliding_weights", w}});
  }
  j["overlaps"] = overlaps;

  Json pairs = Json::array();
  for (const auto& p : report.collisions.pairs) {
    pairs.push_back({{"pair", pair_label(p.d, p.d2)},
                     {"gcd", p.gcd.get_str()},
                     {"expected_gcd", p.expected_gcd.get_str()},
                     {"lcm", p.lcm.get_str()},
                     {"holds", p.holds()}});
  }
  j["interior_collision"] = pairs;

  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json e{{"pair", pair_label(v.d, v.d2)}, {"shift", v.shift}, {"solvable", v.solvable}, {"vanishes", v.verdict.vanishes}};
    if (v.verdict.witness) {
      e["witness"] = {{"t", v.verdict.witness->t.get_str()},
                      {"t2", v.verdict.witness->t2.get_str()},
                      {"weight", v.verdict.witness->weight.get_str()}};
    }
    verdicts.push_back(e);
  }
  j["diophantine"] = verdicts;
  j["max_overlap"] = to_fraction_string(report.max_overlap);
  j["overlap_envelope"] = to_fraction_string(report.overlap_envelope);
  j["failures"] = report.failures;
  j["passed"] = report.passed();
  return j;
}

Json oracle_json(const oracle::OracleReport& report) {
  Json j;
  j["m"] = report.m;
  j["gamma"] = format_double(report.gamma);
  j["seed"] = report.seed;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"computed", format_double(c.computed)},
                      {"reference", format_double(c.reference)},
                      {"delta", format_double(c.delta())},
                      {"tolerance", format_double(c.tolerance)},
                      {"comparison", c.one_sided ? "computed >= reference - tolerance" : "|delta| <= tolerance"},
                      {"pass", c.passed()}});
  }
  j["checks"] = checks;
  j["notes"] = report.notes;
  j["passed"] = report.all_passed();
  return j;
}

}  // namespace picode
