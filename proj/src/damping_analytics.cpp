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

#include "picode/damping_analytics.hpp"

#include <stdexcept>

#include "picode/number_theory.hpp"

namespace picode {

namespace {

std::uint64_t to_u64(const BigInt& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw std::domain_error(std::string(what) + " exceeds 64 bits");
  return x.get_ui();
}

void check_expansion_size(const BigInt& max_weight, std::size_t max_order) {
  if (max_order == kFullExpansion && max_weight > kMaxFullExpansionWeight) {
    throw std::domain_error("full expansion of degree " + max_weight.get_str() +
                            " requested; pass a truncation order for codes this large");
  }
}

BigRational squared_amplitude(std::uint64_t n_d, std::uint64_t t) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n_d - 1);
  return ratio(binomial(n_d, t), den);
}

struct Summand {
  BigRational weight_prob;  // C(n_d, t) / 2^(n_d - 1)
  BigInt w;                 // g_d t
};

std::vector<Summand> summands(std::size_t d, const CodeParameters& params, std::size_t max_order) {
  if (d < 1 || d > params.D()) throw std::out_of_range("logical index out of range");
  const std::uint64_t n_d = params.n_at(d);
  std::vector<Summand> out;
  for (std::uint64_t t : index_set(n_d)) {
    out.push_back({squared_amplitude(n_d, t), params.g_at(d) * static_cast<unsigned long>(t)});
  }
  check_expansion_size(out.back().w, max_order);
  return out;
}

}  // namespace

std::string to_string(KrausPair pair) {
  switch (pair) {
    case KrausPair::K0K0: return "K0K0";
    case KrausPair::F1F1: return "F1F1";
    case KrausPair::F1Fm: return "F1Fm";
  }
  return "?";
}

GammaPolynomial dicke_pair_expectation(const BigInt& w, const BigInt& m, KrausPair pair,
                                       std::size_t max_order) {
  if (w < 0 || w > m) throw std::invalid_argument("Dicke weight outside [0, m]");
  check_expansion_size(w, max_order);
  const std::uint64_t wu = to_u64(w, "weight");
  if (pair == KrausPair::K0K0) return one_minus_gamma_pow(wu, max_order);
  if (wu == 0) return {};

  const std::size_t inner_order = max_order == kFullExpansion ? kFullExpansion : max_order - (max_order > 0);
  GammaPolynomial p = max_order == 0 ? GammaPolynomial() : one_minus_gamma_pow(wu - 1, inner_order);
  if (pair == KrausPair::F1F1) {
    p *= ratio(w, m);
  } else {
    if (m < 2) return {};
    p *= ratio(w * (m - w), m * (m - 1));
  }
  return p.times_gamma(max_order);
}

GammaPolynomial k0_expectation(std::size_t d, const CodeParameters& params, std::size_t max_order) {
  GammaPolynomial total;
  for (const auto& s : summands(d, params, max_order)) {
    total += s.weight_prob * one_minus_gamma_pow(to_u64(s.w, "weight"), max_order);
  }
  return total;
}

GammaPolynomial f1f1_expectation(std::size_t d, const CodeParameters& params, std::size_t max_order) {
  if (max_order == 0) return {};
  const std::size_t inner = max_order == kFullExpansion ? kFullExpansion : max_order - 1;
  GammaPolynomial sum;
  for (const auto& s : summands(d, params, max_order)) {
    const BigRational c = s.weight_prob * ratio(s.w, params.m);
    sum += c * one_minus_gamma_pow(to_u64(s.w, "weight") - 1, inner);
  }
  return sum.times_gamma(max_order);
}

GammaPolynomial f1fm_expectation(std::size_t d, const CodeParameters& params, std::size_t max_order) {
  if (max_order == 0 || params.m < 2) return {};
  const std::size_t inner = max_order == kFullExpansion ? kFullExpansion : max_order - 1;
  const BigInt& m = params.m;
  GammaPolynomial sum;
  for (const auto& s : summands(d, params, max_order)) {
    const BigRational c = s.weight_prob * ratio(s.w * (m - s.w), m * (m - 1));
    sum += c * one_minus_gamma_pow(to_u64(s.w, "weight") - 1, inner);
  }
  return sum.times_gamma(max_order);
}

DampingReport damping_report(std::size_t d, const CodeParameters& params, std::size_t max_order) {
  DampingReport r;
  r.d = d;
  r.k0k0 = k0_expectation(d, params, max_order);
  r.f1f1 = f1f1_expectation(d, params, max_order);
  r.f1fm = f1fm_expectation(d, params, max_order);
  r.fourier_diag_l1 = r.f1f1 + BigRational(params.m - 1) * r.f1fm;
  r.fourier_diag_lgt1 = r.f1f1 - r.f1fm;
  return r;
}

DampingAnalytics::DampingAnalytics(CodeParameters params, std::size_t max_order)
    : params_(std::move(params)), max_order_(max_order) {
  reports_.reserve(params_.D());
  for (std::size_t d = 1; d <= params_.D(); ++d) reports_.push_back(damping_report(d, params_, max_order_));
}

GammaPolynomial fourier_expectation(const DampingReport& report, const BigInt& l, const BigInt& l2,
                                    const BigInt& m) {
  if (l < 1 || l > m || l2 < 1 || l2 > m) throw std::out_of_range("Fourier index outside 1..m");
  if (l != l2) return {};
  return l == 1 ? report.fourier_diag_l1 : report.fourier_diag_lgt1;
}

GammaPolynomial fourier_expectation(std::size_t d, const BigInt& l, const BigInt& l2,
                                    const CodeParameters& params) {
  return fourier_expectation(damping_report(d, params), l, l2, params.m);
}

CrossTermVerdict cross_term_vanishes(std::size_t d, std::size_t d2, long shift,
                                     const CodeParameters& params) {
  if (d == d2) throw std::invalid_argument("cross_term_vanishes needs distinct logical states");
  const BigInt& g = params.g_at(d);
  const BigInt& g2 = params.g_at(d2);
  const BigInt s(shift);
  CrossTermVerdict verdict;
  if (!diophantine_solvable(g, g2, s)) return verdict;

  // Solutions of t*g - t2*g2 = s step by (g2/h, g/h); walk the ones with t in
  // the index range of state d.
  auto particular = diophantine_particular(g, g2, s);
  BigInt h;
  mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), g2.get_mpz_t());
  const BigInt step_t = g2 / h;
  const BigInt step_t2 = g / h;
  const auto idx = index_set(params.n_at(d));
  const auto idx2 = index_set(params.n_at(d2));
  const BigInt t_max(static_cast<unsigned long>(idx.back()));
  const BigInt t2_max(static_cast<unsigned long>(idx2.back()));

  // Smallest k with t0 + k*step_t >= 1.
  BigInt k;
  BigInt num = BigInt(1) - particular->first;
  mpz_cdiv_q(k.get_mpz_t(), num.get_mpz_t(), step_t.get_mpz_t());
  for (BigInt t = particular->first + k * step_t, t2 = particular->second + k * step_t2; t <= t_max;
       t += step_t, t2 += step_t2) {
    const bool t_ok = mpz_odd_p(t.get_mpz_t()) != 0;
    const bool t2_ok = t2 >= 1 && t2 <= t2_max && mpz_odd_p(t2.get_mpz_t()) != 0;
    if (t_ok && t2_ok) {
      verdict.vanishes = false;
      verdict.witness = CollisionWitness{t, t2, g * t};
      return verdict;
    }
  }
  return verdict;
}

std::optional<GammaPolynomial> CrossFourierExpectation::rational() const {
  GammaPolynomial total;
  for (const auto& term : terms) {
    SurdSum s{{term.amplitude_product_squared}};
    auto r = s.rational();
    if (!r) return std::nullopt;
    total += *r * term.diagonal;
  }
  return total;
}

CrossFourierExpectation cross_fourier_expectation(std::size_t d, std::size_t d2, bool l_is_one,
                                                  const CodeParameters& params) {
  const DickeVector a = logical_state(d, params);
  const DickeVector b = logical_state(d2, params);
  CrossFourierExpectation out;
  for (const auto& [w, a2] : a.support) {
    auto it = b.support.find(w);
    if (it == b.support.end()) continue;
    const GammaPolynomial f11 = dicke_pair_expectation(w, params.m, KrausPair::F1F1);
    const GammaPolynomial f1m = dicke_pair_expectation(w, params.m, KrausPair::F1Fm);
    GammaPolynomial diag = l_is_one ? f11 + BigRational(params.m - 1) * f1m : f11 - f1m;
    out.terms.push_back({w, a2 * it->second, std::move(diag)});
  }
  return out;
}

}  // namespace picode
