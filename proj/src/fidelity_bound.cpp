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

#include "picode/fidelity_bound.hpp"

#include <algorithm>
#include <cmath>

namespace picode {

namespace {

constexpr std::array<LambdaLabel, 3> kBoundTerms{LambdaLabel::K0, LambdaLabel::K1, LambdaLabel::Kl};

BigRational term_multiplicity(LambdaLabel label, const BigInt& m) {
  return label == LambdaLabel::Kl ? BigRational(m - 1) : BigRational(1);
}

void check_gamma(const BigRational& gamma, bool allow_zero) {
  if (gamma < 0 || gamma >= 1 || (!allow_zero && gamma == 0)) {
    throw GridOutOfRange("GridOutOfRange: gamma=" + gamma.get_str() +
                         (allow_zero ? " outside [0, 1)" : " outside (0, 1)"));
  }
}

}  // namespace

std::string to_string(LambdaLabel label) {
  switch (label) {
    case LambdaLabel::K0: return "K0";
    case LambdaLabel::K1: return "K1";
    case LambdaLabel::Kl: return "Kl";
    case LambdaLabel::F1F1: return "F1F1";
    case LambdaLabel::F1Fm: return "F1Fm";
  }
  return "?";
}

const GammaPolynomial& expectation_of(const DampingReport& report, LambdaLabel label) {
  switch (label) {
    case LambdaLabel::K0: return report.k0k0;
    case LambdaLabel::K1: return report.fourier_diag_l1;
    case LambdaLabel::Kl: return report.fourier_diag_lgt1;
    case LambdaLabel::F1F1: return report.f1f1;
    case LambdaLabel::F1Fm: return report.f1fm;
  }
  throw std::invalid_argument("unknown label");
}

LambdaValue lambda_min(LambdaLabel label, const DampingAnalytics& analytics, const BigRational& gamma) {
  check_gamma(gamma, true);
  LambdaValue best;
  bool first = true;
  for (const auto& report : analytics.reports()) {
    BigRational v = expectation_of(report, label).evaluate(gamma);
    if (first || v < best.value) {
      best.value = v;
      best.argmin_d = report.d;
      first = false;
    }
  }
  return best;
}

std::size_t asymptotic_argmin(std::span<const GammaPolynomial> per_d) {
  if (per_d.empty()) throw std::invalid_argument("asymptotic_argmin of nothing");
  std::size_t best = 0;
  for (std::size_t i = 1; i < per_d.size(); ++i) {
    const auto& a = per_d[i];
    const auto& b = per_d[best];
    const std::size_t len = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
    for (std::size_t j = 0; j < len; ++j) {
      const BigRational ca = a.coefficient(j);
      const BigRational cb = b.coefficient(j);
      if (ca == cb) continue;
      if (ca < cb) best = i;
      break;
    }
  }
  return best + 1;
}

std::size_t asymptotic_argmin(LambdaLabel label, const DampingAnalytics& analytics) {
  std::vector<GammaPolynomial> polys;
  for (const auto& r : analytics.reports()) polys.push_back(expectation_of(r, label));
  return asymptotic_argmin(polys);
}

BoundPoint bound_at(const DampingAnalytics& analytics, const BigRational& max_overlap,
                    const BigRational& gamma) {
  check_gamma(gamma, true);
  const auto& params = analytics.params();
  BoundPoint p;
  p.gamma = gamma;
  const LambdaValue k0 = lambda_min(LambdaLabel::K0, analytics, gamma);
  const LambdaValue k1 = lambda_min(LambdaLabel::K1, analytics, gamma);
  const LambdaValue kl = lambda_min(LambdaLabel::Kl, analytics, gamma);
  p.lambda_k0 = k0.value;
  p.lambda_k1 = k1.value;
  p.lambda_kl = kl.value;
  p.argmin = {k0.argmin_d, k1.argmin_d, kl.argmin_d};
  p.raw_bound = k0.value + k1.value + BigRational(params.m - 1) * kl.value;
  p.discounted_bound =
      p.raw_bound * (BigRational(1) - BigRational(static_cast<unsigned long>(params.D())) * max_overlap);
  return p;
}

FidelityReport fidelity_lower_bound(const DampingAnalytics& analytics, const GramMatrix& gram,
                                    std::span<const BigRational> gamma_grid) {
  if (gamma_grid.empty()) throw GridOutOfRange("GridOutOfRange: empty grid");
  for (const auto& g : gamma_grid) check_gamma(g, false);

  FidelityReport report;
  report.gram_correction = gram.max_off_diagonal_upper();
  for (const auto& g : gamma_grid) report.points.push_back(bound_at(analytics, report.gram_correction, g));

  for (std::size_t i = 1; i < report.points.size(); ++i) {
    const auto& prev = report.points[i - 1];
    const auto& cur = report.points[i];
    if (cur.gamma > prev.gamma && cur.raw_bound > prev.raw_bound) report.monotone = false;
    for (std::size_t k = 0; k < kBoundTerms.size(); ++k) {
      if (cur.argmin[k] != prev.argmin[k]) report.argmin_switches.push_back({i, kBoundTerms[k], cur.argmin[k]});
    }
  }
  return report;
}

FidelityReport fidelity_lower_bound(const CodeParameters& params, std::span<const BigRational> gamma_grid) {
  const DampingAnalytics analytics(params);
  return fidelity_lower_bound(analytics, gram_matrix(params), gamma_grid);
}

std::vector<BigRational> gamma_grid(double lo, double hi, std::size_t count, bool log_spacing) {
  if (count < 1) throw GridOutOfRange("GridOutOfRange: count must be >= 1");
  if (!(lo > 0 && lo < 1 && hi > 0 && hi < 1 && lo <= hi))
    throw GridOutOfRange("GridOutOfRange: need 0 < min <= max < 1");
  std::vector<BigRational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = lo;
    if (count > 1) {
      const double f = static_cast<double>(i) / static_cast<double>(count - 1);
      x = log_spacing ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
    }
    if (i + 1 == count) x = hi;
    out.push_back(round_significant(exact_from_double(x), 6));
  }
  return out;
}

ClosedFormConstants closed_form_constants(const CodeParameters& params) {
  const BigRational N(params.N);
  const BigRational m(params.m);
  const BigRational g1(params.g.front());
  const BigRational gD(params.g.back());
  ClosedFormConstants pc;
  pc.first_order = -(N * g1) / (4 * m);
  pc.c_prime = 1 + (2 * gD - g1) / N - BigRational(2) / N + 4 * g1 / N;
  pc.c = pc.c_prime + 3 * g1 / m;
  pc.second_order = -pc.c * N * N / 8;
  pc.second_order_prime = -pc.c_prime * N * N / 8;
  if (params.q >= 2) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), params.N.get_mpz_t(), params.q - 2);
    pc.q_scaling = -ratio(1, 4 * p);
  }
  return pc;
}

const Assembly& TaylorComparison::assembly(const std::string& name) const {
  for (const auto& a : assemblies)
    if (a.name == name) return a;
  throw std::out_of_range("no assembly named " + name);
}

TaylorComparison taylor_comparison(const CodeParameters& params, unsigned order) {
  if (order < 1 || order > 2) throw std::invalid_argument("taylor_comparison: order must be 1 or 2");
  // One order past the requested one so asymptotic argmins see the next term.
  const DampingAnalytics analytics(params, 3);
  const BigInt& m = params.m;

  TaylorComparison cmp;
  cmp.order = order;
  cmp.constants = closed_form_constants(params);
  cmp.reference_value = order == 1 ? cmp.constants.first_order : cmp.constants.second_order;

  auto finish = [&](Assembly a) {
    a.delta = a.coefficient - cmp.reference_value;
    a.equal = a.delta == 0;
    a.at_least_reference = a.delta >= 0;
    cmp.assemblies.push_back(std::move(a));
  };

  Assembly per_term;
  per_term.name = "per_term";
  for (std::size_t k = 0; k < kBoundTerms.size(); ++k) {
    const std::size_t d = asymptotic_argmin(kBoundTerms[k], analytics);
    per_term.d[k] = d;
    per_term.coefficient +=
        term_multiplicity(kBoundTerms[k], m) * expectation_of(analytics.report(d), kBoundTerms[k]).coefficient(order);
  }
  finish(per_term);

  std::vector<GammaPolynomial> totals;
  for (const auto& r : analytics.reports()) {
    totals.push_back(r.k0k0 + r.fourier_diag_l1 + BigRational(m - 1) * r.fourier_diag_lgt1);
  }
  Assembly uniform;
  uniform.name = "uniform";
  const std::size_t du = asymptotic_argmin(totals);
  uniform.d = {du, du, du};
  uniform.coefficient = totals[du - 1].coefficient(order);
  finish(uniform);

  Assembly per_order;
  per_order.name = "per_order";
  per_order.d = {0, 0, 0};
  for (auto label : kBoundTerms) {
    BigRational best;
    bool first = true;
    for (const auto& r : analytics.reports()) {
      BigRational c = term_multiplicity(label, m) * expectation_of(r, label).coefficient(order);
      if (first || c < best) best = c;
      first = false;
    }
    per_order.coefficient += best;
  }
  finish(per_order);
  return cmp;
}

}  // namespace picode
