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

#pragma once

// Brute-force 2^m state-vector checks for small m. Qubit j (1-based) is bit
// j-1 of the basis index; a set bit is the excited state |1>.
//
// Oracle codes are deliberately tiny and need not satisfy the multi-state
// construction constraints; they exercise the formulas, not code quality.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "picode/code_builder.hpp"

namespace picode::oracle {

inline constexpr unsigned kMaxQubits = 14;
inline constexpr double kSvdTolerance = 1e-10;
inline constexpr double kOrthogonalityTolerance = 1e-8;

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotCorrectable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BadDensity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Amplitude = std::complex<double>;

struct DenseState {
  unsigned m = 0;
  std::vector<Amplitude> amplitudes;

  DenseState() = default;
  explicit DenseState(unsigned qubits);

  std::size_t dimension() const { return amplitudes.size(); }
  double norm() const;
};

Amplitude inner(const DenseState& a, const DenseState& b);  // <a|b>

enum class OperatorLabel { A0Tensor, F, K, Tensor, Recovery, Custom };

/// Matrix-free linear operator on m qubits with its adjoint.
struct DenseOperator {
  OperatorLabel label = OperatorLabel::Custom;
  std::string name;
  unsigned m = 0;
  std::function<DenseState(const DenseState&)> apply;
  std::function<DenseState(const DenseState&)> apply_adjoint;

  DenseState operator()(const DenseState& psi) const;
  DenseState adjoint(const DenseState& psi) const;
};

/// after ∘ before
DenseOperator compose(const DenseOperator& after, const DenseOperator& before);
DenseOperator identity_operator(unsigned m);

/// |D^m_w>, amplitude 1/sqrt(C(m, w)) on every weight-w string.
DenseState dicke_dense(unsigned m, unsigned w);

/// Dense realization of a permutation-invariant state given by squared
/// amplitudes per weight (positive square roots).
DenseState from_dicke_vector(const DickeVector& v);

/// Superposition of Dicke states with the given per-weight amplitudes.
DenseState symmetric_state(unsigned m, std::span<const Amplitude> per_weight);

/// K0 = A0^{⊗m}.
DenseOperator kraus_k0(unsigned m, double gamma);
/// F_j: A1 on qubit j (1-based), A0 elsewhere.
DenseOperator kraus_f(unsigned m, double gamma, unsigned j);
/// K_l = m^{-1/2} Σ_j ω^{(l-1)(j-1)} F_j, ω = exp(2πi/m), l in 1..m.
DenseOperator kraus_k(unsigned m, double gamma, unsigned l);
/// A_{x_1} ⊗ ... ⊗ A_{x_m} with x read from the bits of `mask`.
DenseOperator kraus_tensor(unsigned m, double gamma, std::uint64_t mask);

/// Dispatch by label: A0Tensor (index ignored), F (j), K (l), Tensor (mask).
DenseOperator kraus_dense(OperatorLabel label, unsigned m, double gamma, std::uint64_t index);

/// Every tensor-product Kraus operator of the m-qubit damping channel.
std::vector<DenseOperator> damping_channel(unsigned m, double gamma);
/// {K0, K_1, ..., K_m}.
std::vector<DenseOperator> fourier_kraus_set(unsigned m, double gamma);

/// <psi|A^dag B|psi>.
Amplitude expectation_dense(const DenseState& psi, const DenseOperator& a, const DenseOperator& b);

DenseState permute_qubits(const DenseState& psi, std::span<const unsigned> permutation);

/// Max ||P psi - psi|| over `trials` seeded random qubit permutations.
double permutation_invariance_check(const DenseState& psi, unsigned trials, std::uint64_t seed);

/// Max over seeded random vectors v of ||Σ A^dag A v - v||.
double completeness_defect(std::span<const DenseOperator> ops, unsigned m, std::uint64_t seed,
                           unsigned samples = 4);

/// Max over seeded random u, v, α, β of ||A(αu+βv) - αAu - βAv||.
double linearity_defect(const DenseOperator& op, std::uint64_t seed, unsigned samples = 4);

DenseState random_state(unsigned m, std::uint64_t seed);

/// ρ = Σ_i p_i |ψ_i><ψ_i|.
struct DensityOperator {
  std::vector<double> weights;
  std::vector<DenseState> states;
};

/// Density operator on the code from a k x k matrix in the (orthonormalized)
/// code basis.
DensityOperator code_density(std::span<const DenseState> code_basis, const Eigen::MatrixXcd& rho);

/// Σ_k |tr(ρ E_k)|². Throws BadDensity when weights or norms are off by more
/// than 1e-10.
double entanglement_fidelity(const DensityOperator& rho, std::span<const DenseOperator> channel);

/// Kraus operators of R∘A for every pair.
std::vector<DenseOperator> compose_channels(std::span<const DenseOperator> recovery,
                                            std::span<const DenseOperator> channel);

/// Orthonormalizes a set of states (symmetric orthogonalization).
std::vector<DenseState> orthonormalize(std::span<const DenseState> basis);

struct Recovery {
  /// One operator Π U_A^dag per kept A, followed by the completion when present.
  std::vector<DenseOperator> kraus;
  bool has_completion = false;
  std::vector<std::string> dropped;  // operators that annihilate the code
  std::vector<std::string> warnings;

  std::span<const DenseOperator> without_completion() const {
    return {kraus.data(), kraus.size() - (has_completion ? 1 : 0)};
  }
};

/// Truncated recovery for the codespace spanned by `code_basis` under Ω.
/// Requires the images A·C to be pairwise orthogonal (NotCorrectable
/// otherwise). The polar factor of A·Π comes from an SVD restricted to the
/// code; singular values below kSvdTolerance count as zero.
Recovery recovery_map(std::span<const DenseState> code_basis, std::span<const DenseOperator> omega,
                      bool include_completion = true);

/// min over normalized ψ in the code of <ψ|A^dag A|ψ> (smallest eigenvalue of
/// the compressed operator).
double lambda_dense(std::span<const DenseState> code_basis, const DenseOperator& a);

}  // namespace picode::oracle
