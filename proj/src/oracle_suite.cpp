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

#include "picode/oracle_suite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "picode/code_builder.hpp"
#include "picode/damping_analytics.hpp"
#include "picode/fidelity_bound.hpp"

namespace picode::oracle {

namespace {

constexpr double kKernelTolerance = 1e-12;
constexpr double kFourierTolerance = 1e-10;
constexpr double kCompletenessTolerance = 1e-10;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kRecoverySlack = 1e-9;
// Full-channel completeness applies 2^m operators to 2^m-dimensional vectors.
constexpr unsigned kMaxCompletenessQubits = 12;

double exact_kernel(unsigned w, unsigned m, KrausPair pair, double gamma) {
  const GammaPolynomial p = dicke_pair_expectation(BigInt(w), BigInt(m), pair);
  return p.evaluate(exact_from_double(gamma)).get_d();
}

DenseState random_symmetric_state(unsigned m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Amplitude> c(m + 1);
  double norm = 0.0;
  for (auto& a : c) {
    a = Amplitude(normal(rng), normal(rng));
    norm += std::norm(a);
  }
  for (auto& a : c) a /= std::sqrt(norm);
  return symmetric_state(m, c);
}

std::string fmt_index(const char* prefix, unsigned i) { return std::string(prefix) + std::to_string(i); }

}  // namespace

double OracleCheck::delta() const { return std::abs(computed - reference); }

bool OracleCheck::passed() const {
  if (!std::isfinite(computed) || !std::isfinite(reference)) return false;
  return one_sided ? computed >= reference - tolerance : delta() <= tolerance;
}

bool OracleReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

std::vector<CodeParameters> standard_toy_codes(unsigned m) {
  if (m < 8) throw std::invalid_argument("toy codes need m >= 8");
  const std::uint64_t mm = m;
  const std::vector<std::uint64_t> n1{3, 2}, g1{2, 4};
  const std::vector<std::uint64_t> n2{4, 2}, g2{2, 4};
  const std::vector<std::uint64_t> n3{3, 2, 2}, g3{2, 4, 8};
  return {toy_parameters(n1, g1, mm), toy_parameters(n2, g2, mm), toy_parameters(n3, g3, mm)};
}

std::vector<DenseState> dense_code_basis(const CodeParameters& params) {
  std::vector<DenseState> basis;
  for (std::size_t d = 1; d <= params.D(); ++d) basis.push_back(from_dicke_vector(logical_state(d, params)));
  return basis;
}

RecoveryComparison compare_recovery(const CodeParameters& toy, double gamma, const Eigen::MatrixXcd& rho,
                                    std::uint64_t seed) {
  const auto basis = dense_code_basis(toy);
  const unsigned m = basis.front().m;
  const auto omega = fourier_kraus_set(m, gamma);
  const Recovery rec = recovery_map(basis, omega);
  const auto channel = damping_channel(m, gamma);
  const DensityOperator density = code_density(basis, rho);

  RecoveryComparison out;
  out.fidelity = entanglement_fidelity(density, compose_channels(rec.kraus, channel));
  out.fidelity_without_completion = entanglement_fidelity(density, compose_channels(rec.without_completion(), channel));
  out.completeness = completeness_defect(rec.kraus, m, seed);

  const DampingAnalytics analytics(toy);
  out.lambda_sum = bound_at(analytics, BigRational(0), exact_from_double(gamma)).raw_bound.get_d();
  for (const auto& a : omega) out.lambda_sum_dense += lambda_dense(basis, a);
  return out;
}

OracleReport run_oracle_suite(unsigned m, double gamma, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("oracle needs m >= 2");
  if (m > kMaxQubits) throw TooLarge("TooLarge: m=" + std::to_string(m) + " exceeds " + std::to_string(kMaxQubits) + " qubits");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("oracle gamma must lie in (0, 1)");

  OracleReport report;
  report.m = m;
  report.gamma = gamma;
  report.seed = seed;
  std::mt19937_64 rng(seed);

  // Dicke kernels, and symmetry of F_j^dag F_j across j.
  const DenseOperator k0 = kraus_k0(m, gamma);
  std::vector<DenseOperator> f;
  for (unsigned j = 1; j <= m; ++j) f.push_back(kraus_f(m, gamma, j));
  double fj_spread = 0.0;
  for (unsigned w = 0; w <= m; ++w) {
    const DenseState d = dicke_dense(m, w);
    const double kk = expectation_dense(d, k0, k0).real();
    const double ff = expectation_dense(d, f.front(), f.front()).real();
    const double fm = expectation_dense(d, f.front(), f.back()).real();
    report.checks.push_back({fmt_index("kernel_K0K0_w", w), kk, exact_kernel(w, m, KrausPair::K0K0, gamma), kKernelTolerance});
    report.checks.push_back({fmt_index("kernel_F1F1_w", w), ff, exact_kernel(w, m, KrausPair::F1F1, gamma), kKernelTolerance});
    report.checks.push_back({fmt_index("kernel_F1Fm_w", w), fm, exact_kernel(w, m, KrausPair::F1Fm, gamma), kKernelTolerance});
    for (unsigned j = 1; j < m; ++j) {
      fj_spread = std::max(fj_spread, std::abs(expectation_dense(d, f[j], f[j]).real() - ff));
    }
  }
  report.checks.push_back({"FjFj_independent_of_j", fj_spread, 0.0, kKernelTolerance});

  // Diagonalization of the Fourier Kraus operators on a symmetric state.
  {
    const DenseState psi = random_symmetric_state(m, rng);
    std::vector<DenseState> kpsi;
    for (unsigned l = 1; l <= m; ++l) kpsi.push_back(kraus_k(m, gamma, l)(psi));
    const double a = expectation_dense(psi, f.front(), f.front()).real();
    const double b = expectation_dense(psi, f.front(), f.back()).real();
    double off = 0.0;
    double diag_err = 0.0;
    for (unsigned l = 0; l < m; ++l) {
      for (unsigned l2 = 0; l2 < m; ++l2) {
        const Amplitude v = inner(kpsi[l], kpsi[l2]);
        if (l != l2) {
          off = std::max(off, std::abs(v));
        } else {
          const double expected = a + ((l == 0 ? static_cast<double>(m) : 0.0) - 1.0) * b;
          diag_err = std::max(diag_err, std::abs(v - Amplitude(expected, 0.0)));
        }
      }
    }
    report.checks.push_back({"fourier_off_diagonal_max", off, 0.0, kFourierTolerance});
    report.checks.push_back({"fourier_diagonal_closed_form_max_error", diag_err, 0.0, kFourierTolerance});

    std::vector<DenseOperator> ks;
    for (unsigned l = 1; l <= m; ++l) ks.push_back(kraus_k(m, gamma, l));
    const DenseState v = random_state(m, rng());
    DenseState lhs(m), rhs(m);
    for (unsigned i = 0; i < m; ++i) {
      const DenseState x = ks[i].adjoint(ks[i](v));
      const DenseState y = f[i].adjoint(f[i](v));
      for (std::size_t s = 0; s < v.dimension(); ++s) {
        lhs.amplitudes[s] += x.amplitudes[s];
        rhs.amplitudes[s] += y.amplitudes[s];
      }
    }
    double diff = 0.0;
    for (std::size_t s = 0; s < v.dimension(); ++s) diff += std::norm(lhs.amplitudes[s] - rhs.amplitudes[s]);
    report.checks.push_back({"fourier_rotation_preserves_sum", std::sqrt(diff), 0.0, kFourierTolerance});
  }

  // Completeness of the full tensor-product Kraus set and of the Fourier form.
  if (m <= kMaxCompletenessQubits) {
    const auto channel = damping_channel(m, gamma);
    report.checks.push_back({"damping_channel_completeness", completeness_defect(channel, m, rng(), 2), 0.0, kCompletenessTolerance});
    std::vector<DenseOperator> fourier = fourier_kraus_set(m, gamma);
    for (std::uint64_t mask = 0; mask < channel.size(); ++mask) {
      if (std::popcount(mask) >= 2) fourier.push_back(channel[mask]);
    }
    report.checks.push_back({"fourier_channel_completeness", completeness_defect(fourier, m, rng(), 2), 0.0, kCompletenessTolerance});
  } else {
    report.notes.push_back("completeness checks skipped above " + std::to_string(kMaxCompletenessQubits) + " qubits");
  }
  report.checks.push_back({"K0_linearity", linearity_defect(k0, rng(), 2), 0.0, kCompletenessTolerance});

  // Permutation symmetry of constructed states.
  report.checks.push_back({"dicke_permutation_invariance", permutation_invariance_check(dicke_dense(m, m / 2), 20, rng()), 0.0, kSymmetryTolerance});
  report.checks.push_back({"symmetric_state_permutation_invariance",
                           permutation_invariance_check(random_symmetric_state(m, rng), 20, rng()), 0.0, kSymmetryTolerance});

  // Toy codes: cross terms, recovery completeness and the fidelity bound.
  if (m >= 8) {
    const auto toys = standard_toy_codes(m);
    for (std::size_t i = 0; i < toys.size(); ++i) {
      const auto& toy = toys[i];
      const std::string tag = "toy" + std::to_string(i + 1) + "_";
      const auto basis = dense_code_basis(toy);
      report.checks.push_back({tag + "logical_permutation_invariance",
                               permutation_invariance_check(basis.back(), 20, rng()), 0.0, kSymmetryTolerance});
      double cross = 0.0;
      for (const auto& a : basis)
        for (const auto& b : basis)
          for (const auto& fj : f) cross = std::max(cross, std::abs(inner(k0(a), fj(b))));
      report.checks.push_back({tag + "K0_Fj_cross_terms", cross, 0.0, kKernelTolerance});

      const auto k = static_cast<Eigen::Index>(basis.size());
      const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(k, k) / static_cast<double>(k);
      const RecoveryComparison cmp = compare_recovery(toy, gamma, mixed, rng());
      report.checks.push_back({tag + "recovery_completeness", cmp.completeness, 0.0, kCompletenessTolerance});
      report.checks.push_back({tag + "fidelity_vs_lambda_sum", cmp.fidelity, cmp.lambda_sum, kRecoverySlack, true});
      report.checks.push_back({tag + "fidelity_no_completion_vs_lambda_sum", cmp.fidelity_without_completion,
                               cmp.lambda_sum, kRecoverySlack, true});
      report.checks.push_back({tag + "lambda_sum_dense_vs_exact", cmp.lambda_sum_dense, cmp.lambda_sum, kFourierTolerance});
    }
  } else {
    report.notes.push_back("toy-code recovery checks need m >= 8");
  }
  return report;
}

}  // namespace picode::oracle
