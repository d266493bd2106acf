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

#include "picode/dense_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace picode::oracle {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

void require_size(unsigned m) {
  if (m > kMaxQubits) {
    throw TooLarge("TooLarge: m=" + std::to_string(m) + " exceeds " + std::to_string(kMaxQubits) + " qubits");
  }
}

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma outside [0, 1]");
}

void require_same(const DenseState& a, const DenseState& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("DimensionMismatch: " + std::to_string(a.dimension()) + " vs " +
                            std::to_string(b.dimension()));
  }
}

unsigned weight(std::uint64_t s) { return static_cast<unsigned>(std::popcount(s)); }

// (1-γ)^{k/2} for k = 0..m.
std::vector<double> sqrt_survival(unsigned m, double gamma) {
  std::vector<double> t(m + 1);
  const double base = std::sqrt(1.0 - gamma);
  for (unsigned k = 0; k <= m; ++k) t[k] = std::pow(base, static_cast<double>(k));
  return t;
}

VectorXcd to_eigen(const DenseState& s) {
  return Eigen::Map<const VectorXcd>(s.amplitudes.data(), static_cast<Eigen::Index>(s.dimension()));
}

DenseState from_eigen(unsigned m, const VectorXcd& v) {
  DenseState s(m);
  std::copy(v.data(), v.data() + v.size(), s.amplitudes.begin());
  return s;
}

MatrixXcd to_matrix(std::span<const DenseState> columns) {
  const auto dim = static_cast<Eigen::Index>(columns.front().dimension());
  MatrixXcd c(dim, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i) c.col(static_cast<Eigen::Index>(i)) = to_eigen(columns[i]);
  return c;
}

MatrixXcd apply_columns(const DenseOperator& op, unsigned m, const MatrixXcd& c) {
  MatrixXcd out(c.rows(), c.cols());
  for (Eigen::Index i = 0; i < c.cols(); ++i) out.col(i) = to_eigen(op(from_eigen(m, c.col(i))));
  return out;
}

}  // namespace

DenseState::DenseState(unsigned qubits) : m(qubits) {
  require_size(qubits);
  amplitudes.assign(std::size_t{1} << qubits, Amplitude(0.0, 0.0));
}

double DenseState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

Amplitude inner(const DenseState& a, const DenseState& b) {
  require_same(a, b);
  Amplitude s(0.0, 0.0);
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

DenseState DenseOperator::operator()(const DenseState& psi) const {
  if (psi.m != m) throw DimensionMismatch("DimensionMismatch: operator on " + std::to_string(m) + " qubits");
  return apply(psi);
}

DenseState DenseOperator::adjoint(const DenseState& psi) const {
  if (psi.m != m) throw DimensionMismatch("DimensionMismatch: operator on " + std::to_string(m) + " qubits");
  return apply_adjoint(psi);
}

DenseOperator compose(const DenseOperator& after, const DenseOperator& before) {
  if (after.m != before.m) throw DimensionMismatch("DimensionMismatch: composing different sizes");
  DenseOperator op;
  op.label = OperatorLabel::Custom;
  op.name = after.name + "*" + before.name;
  op.m = after.m;
  op.apply = [after, before](const DenseState& s) { return after(before(s)); };
  op.apply_adjoint = [after, before](const DenseState& s) { return before.adjoint(after.adjoint(s)); };
  return op;
}

DenseOperator identity_operator(unsigned m) {
  require_size(m);
  DenseOperator op;
  op.label = OperatorLabel::Custom;
  op.name = "I";
  op.m = m;
  op.apply = [](const DenseState& s) { return s; };
  op.apply_adjoint = op.apply;
  return op;
}

DenseState dicke_dense(unsigned m, unsigned w) {
  require_size(m);
  if (w > m) throw std::invalid_argument("Dicke weight exceeds m");
  DenseState s(m);
  std::size_t count = 0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i)
    if (weight(i) == w) ++count;
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::uint64_t i = 0; i < s.dimension(); ++i)
    if (weight(i) == w) s.amplitudes[i] = amp;
  return s;
}

DenseState symmetric_state(unsigned m, std::span<const Amplitude> per_weight) {
  require_size(m);
  if (per_weight.size() != m + 1) throw DimensionMismatch("DimensionMismatch: need m+1 weight amplitudes");
  DenseState s(m);
  for (unsigned w = 0; w <= m; ++w) {
    if (per_weight[w] == Amplitude(0.0, 0.0)) continue;
    const DenseState d = dicke_dense(m, w);
    for (std::size_t i = 0; i < s.dimension(); ++i) s.amplitudes[i] += per_weight[w] * d.amplitudes[i];
  }
  return s;
}

DenseState from_dicke_vector(const DickeVector& v) {
  if (!v.length.fits_uint_p() || v.length > kMaxQubits) {
    throw TooLarge("TooLarge: m=" + v.length.get_str() + " exceeds " + std::to_string(kMaxQubits) + " qubits");
  }
  const unsigned m = static_cast<unsigned>(v.length.get_ui());
  std::vector<Amplitude> per_weight(m + 1, Amplitude(0.0, 0.0));
  for (const auto& [w, a2] : v.support) per_weight[w.get_ui()] = std::sqrt(a2.get_d());
  return symmetric_state(m, per_weight);
}

DenseOperator kraus_k0(unsigned m, double gamma) {
  require_size(m);
  require_gamma(gamma);
  const auto surv = sqrt_survival(m, gamma);
  DenseOperator op;
  op.label = OperatorLabel::A0Tensor;
  op.name = "K0";
  op.m = m;
  op.apply = [surv](const DenseState& in) {
    DenseState out = in;
    for (std::uint64_t s = 0; s < out.dimension(); ++s) out.amplitudes[s] *= surv[weight(s)];
    return out;
  };
  op.apply_adjoint = op.apply;
  return op;
}

DenseOperator kraus_f(unsigned m, double gamma, unsigned j) {
  require_size(m);
  require_gamma(gamma);
  if (j < 1 || j > m) throw std::out_of_range("F_j index outside 1..m");
  const auto surv = sqrt_survival(m, gamma);
  const double decay = std::sqrt(gamma);
  const std::uint64_t bit = std::uint64_t{1} << (j - 1);
  DenseOperator op;
  op.label = OperatorLabel::F;
  op.name = "F" + std::to_string(j);
  op.m = m;
  op.apply = [=](const DenseState& in) {
    DenseState out(in.m);
    for (std::uint64_t s = 0; s < in.dimension(); ++s) {
      if (s & bit) out.amplitudes[s ^ bit] = in.amplitudes[s] * decay * surv[weight(s) - 1];
    }
    return out;
  };
  op.apply_adjoint = [=](const DenseState& in) {
    DenseState out(in.m);
    for (std::uint64_t s = 0; s < in.dimension(); ++s) {
      if (s & bit) out.amplitudes[s] = in.amplitudes[s ^ bit] * decay * surv[weight(s) - 1];
    }
    return out;
  };
  return op;
}

DenseOperator kraus_k(unsigned m, double gamma, unsigned l) {
  require_size(m);
  if (l < 1 || l > m) throw std::out_of_range("K_l index outside 1..m");
  std::vector<DenseOperator> f;
  std::vector<Amplitude> phase;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (unsigned j = 1; j <= m; ++j) {
    f.push_back(kraus_f(m, gamma, j));
    const auto k = static_cast<double>((static_cast<std::uint64_t>(l - 1) * (j - 1)) % m);
    phase.push_back(scale * std::polar(1.0, 2.0 * std::numbers::pi * k / static_cast<double>(m)));
  }
  DenseOperator op;
  op.label = OperatorLabel::K;
  op.name = "K_" + std::to_string(l);
  op.m = m;
  op.apply = [f, phase](const DenseState& in) {
    DenseState out(in.m);
    for (std::size_t j = 0; j < f.size(); ++j) {
      const DenseState fj = f[j](in);
      for (std::size_t i = 0; i < out.dimension(); ++i) out.amplitudes[i] += phase[j] * fj.amplitudes[i];
    }
    return out;
  };
  op.apply_adjoint = [f, phase](const DenseState& in) {
    DenseState out(in.m);
    for (std::size_t j = 0; j < f.size(); ++j) {
      const DenseState fj = f[j].adjoint(in);
      for (std::size_t i = 0; i < out.dimension(); ++i) out.amplitudes[i] += std::conj(phase[j]) * fj.amplitudes[i];
    }
    return out;
  };
  return op;
}

DenseOperator kraus_tensor(unsigned m, double gamma, std::uint64_t mask) {
  require_size(m);
  require_gamma(gamma);
  const std::uint64_t dim = std::uint64_t{1} << m;
  if (mask >= dim) throw std::out_of_range("tensor mask has bits beyond m");
  const auto surv = sqrt_survival(m, gamma);
  const unsigned decays = weight(mask);
  const double decay = std::pow(std::sqrt(gamma), static_cast<double>(decays));
  DenseOperator op;
  op.label = OperatorLabel::Tensor;
  op.name = "A[" + std::to_string(mask) + "]";
  op.m = m;
  op.apply = [=](const DenseState& in) {
    DenseState out(in.m);
    for (std::uint64_t t = 0; t < in.dimension(); ++t) {
      if (t & mask) continue;
      out.amplitudes[t] = in.amplitudes[t | mask] * decay * surv[weight(t)];
    }
    return out;
  };
  op.apply_adjoint = [=](const DenseState& in) {
    DenseState out(in.m);
    for (std::uint64_t t = 0; t < in.dimension(); ++t) {
      if (t & mask) continue;
      out.amplitudes[t | mask] = in.amplitudes[t] * decay * surv[weight(t)];
    }
    return out;
  };
  return op;
}

DenseOperator kraus_dense(OperatorLabel label, unsigned m, double gamma, std::uint64_t index) {
  switch (label) {
    case OperatorLabel::A0Tensor: return kraus_k0(m, gamma);
    case OperatorLabel::F: return kraus_f(m, gamma, static_cast<unsigned>(index));
    case OperatorLabel::K: return kraus_k(m, gamma, static_cast<unsigned>(index));
    case OperatorLabel::Tensor: return kraus_tensor(m, gamma, index);
    default: throw std::invalid_argument("kraus_dense: not a damping Kraus label");
  }
}

std::vector<DenseOperator> damping_channel(unsigned m, double gamma) {
  require_size(m);
  std::vector<DenseOperator> ops;
  ops.reserve(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) ops.push_back(kraus_tensor(m, gamma, mask));
  return ops;
}

std::vector<DenseOperator> fourier_kraus_set(unsigned m, double gamma) {
  std::vector<DenseOperator> ops{kraus_k0(m, gamma)};
  for (unsigned l = 1; l <= m; ++l) ops.push_back(kraus_k(m, gamma, l));
  return ops;
}

Amplitude expectation_dense(const DenseState& psi, const DenseOperator& a, const DenseOperator& b) {
  return inner(a(psi), b(psi));
}

DenseState permute_qubits(const DenseState& psi, std::span<const unsigned> permutation) {
  if (permutation.size() != psi.m) throw DimensionMismatch("DimensionMismatch: permutation size");
  DenseState out(psi.m);
  for (std::uint64_t s = 0; s < psi.dimension(); ++s) {
    std::uint64_t t = 0;
    for (unsigned i = 0; i < psi.m; ++i)
      if (s >> i & 1) t |= std::uint64_t{1} << permutation[i];
    out.amplitudes[t] = psi.amplitudes[s];
  }
  return out;
}

double permutation_invariance_check(const DenseState& psi, unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<unsigned> perm(psi.m);
  double worst = 0.0;
  for (unsigned trial = 0; trial < trials; ++trial) {
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    const DenseState moved = permute_qubits(psi, perm);
    double diff = 0.0;
    for (std::size_t i = 0; i < psi.dimension(); ++i) diff += std::norm(moved.amplitudes[i] - psi.amplitudes[i]);
    worst = std::max(worst, std::sqrt(diff));
  }
  return worst;
}

DenseState random_state(unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseState s(m);
  for (auto& a : s.amplitudes) a = Amplitude(normal(rng), normal(rng));
  const double n = s.norm();
  for (auto& a : s.amplitudes) a /= n;
  return s;
}

double completeness_defect(std::span<const DenseOperator> ops, unsigned m, std::uint64_t seed, unsigned samples) {
  double worst = 0.0;
  for (unsigned k = 0; k < samples; ++k) {
    const DenseState v = random_state(m, seed + k);
    DenseState sum(m);
    for (const auto& op : ops) {
      const DenseState w = op.adjoint(op(v));
      for (std::size_t i = 0; i < sum.dimension(); ++i) sum.amplitudes[i] += w.amplitudes[i];
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < sum.dimension(); ++i) diff += std::norm(sum.amplitudes[i] - v.amplitudes[i]);
    worst = std::max(worst, std::sqrt(diff));
  }
  return worst;
}

double linearity_defect(const DenseOperator& op, std::uint64_t seed, unsigned samples) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = 0.0;
  for (unsigned k = 0; k < samples; ++k) {
    const DenseState u = random_state(op.m, rng());
    const DenseState v = random_state(op.m, rng());
    const Amplitude alpha(normal(rng), normal(rng));
    const Amplitude beta(normal(rng), normal(rng));
    DenseState mix(op.m);
    for (std::size_t i = 0; i < mix.dimension(); ++i) mix.amplitudes[i] = alpha * u.amplitudes[i] + beta * v.amplitudes[i];
    const DenseState lhs = op(mix);
    const DenseState au = op(u);
    const DenseState av = op(v);
    double diff = 0.0;
    for (std::size_t i = 0; i < mix.dimension(); ++i)
      diff += std::norm(lhs.amplitudes[i] - alpha * au.amplitudes[i] - beta * av.amplitudes[i]);
    worst = std::max(worst, std::sqrt(diff));
  }
  return worst;
}

std::vector<DenseState> orthonormalize(std::span<const DenseState> basis) {
  if (basis.empty()) throw std::invalid_argument("empty code basis");
  const unsigned m = basis.front().m;
  const MatrixXcd c = to_matrix(basis);
  const MatrixXcd gram = c.adjoint() * c;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(gram);
  if (eig.eigenvalues().minCoeff() < kSvdTolerance) throw std::invalid_argument("code basis is linearly dependent");
  const MatrixXcd inv_sqrt =
      eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().adjoint();
  const MatrixXcd q = c * inv_sqrt;
  std::vector<DenseState> out;
  for (Eigen::Index i = 0; i < q.cols(); ++i) out.push_back(from_eigen(m, q.col(i)));
  return out;
}

DensityOperator code_density(std::span<const DenseState> code_basis, const Eigen::MatrixXcd& rho) {
  const auto k = static_cast<Eigen::Index>(code_basis.size());
  if (rho.rows() != k || rho.cols() != k) throw DimensionMismatch("DimensionMismatch: density size");
  if (std::abs(rho.trace() - Amplitude(1.0, 0.0)) > 1e-10) throw BadDensity("BadDensity: trace != 1");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw BadDensity("BadDensity: not Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(rho);
  if (eig.eigenvalues().minCoeff() < -1e-10) throw BadDensity("BadDensity: negative eigenvalue");

  const auto basis = orthonormalize(code_basis);
  const MatrixXcd c = to_matrix(basis);
  DensityOperator out;
  for (Eigen::Index i = 0; i < k; ++i) {
    const double p = eig.eigenvalues()(i);
    if (p <= 1e-15) continue;
    out.weights.push_back(p);
    out.states.push_back(from_eigen(code_basis.front().m, c * eig.eigenvectors().col(i)));
  }
  // Renormalize away the clipped negligible eigenvalues.
  const double total = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  for (auto& w : out.weights) w /= total;
  return out;
}

double entanglement_fidelity(const DensityOperator& rho, std::span<const DenseOperator> channel) {
  if (rho.weights.size() != rho.states.size() || rho.states.empty()) throw BadDensity("BadDensity: empty ensemble");
  double total = 0.0;
  for (std::size_t i = 0; i < rho.weights.size(); ++i) {
    if (rho.weights[i] < -1e-10) throw BadDensity("BadDensity: negative weight");
    if (std::abs(rho.states[i].norm() - 1.0) > 1e-10) throw BadDensity("BadDensity: unnormalized state");
    total += rho.weights[i];
  }
  if (std::abs(total - 1.0) > 1e-10) throw BadDensity("BadDensity: weights sum to " + std::to_string(total));

  double fidelity = 0.0;
  for (const auto& e : channel) {
    Amplitude tr(0.0, 0.0);
    for (std::size_t i = 0; i < rho.states.size(); ++i) tr += rho.weights[i] * inner(rho.states[i], e(rho.states[i]));
    fidelity += std::norm(tr);
  }
  return fidelity;
}

std::vector<DenseOperator> compose_channels(std::span<const DenseOperator> recovery,
                                            std::span<const DenseOperator> channel) {
  std::vector<DenseOperator> out;
  out.reserve(recovery.size() * channel.size());
  for (const auto& r : recovery)
    for (const auto& e : channel) out.push_back(compose(r, e));
  return out;
}

Recovery recovery_map(std::span<const DenseState> code_basis, std::span<const DenseOperator> omega,
                      bool include_completion) {
  const auto basis = orthonormalize(code_basis);
  const unsigned m = basis.front().m;
  const MatrixXcd c = to_matrix(basis);

  struct Image {
    const DenseOperator* op;
    MatrixXcd w;  // orthonormal basis of A·C
    MatrixXcd v;  // right singular vectors, code coordinates
  };
  std::vector<Image> images;
  Recovery rec;
  for (const auto& a : omega) {
    if (a.m != m) throw DimensionMismatch("DimensionMismatch: Kraus operator size");
    const MatrixXcd ac = apply_columns(a, m, c);
    Eigen::JacobiSVD<MatrixXcd> svd(ac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > kSvdTolerance) ++rank;
    if (rank == 0) {
      rec.dropped.push_back(a.name);
      rec.warnings.push_back("RankDeficient: " + a.name + " annihilates the code; dropped");
      continue;
    }
    if (rank < sv.size()) rec.warnings.push_back("RankDeficient: " + a.name + " has rank " + std::to_string(rank));
    images.push_back({&a, svd.matrixU().leftCols(rank), svd.matrixV().leftCols(rank)});
  }

  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const double overlap = (images[i].w.adjoint() * images[j].w).cwiseAbs().maxCoeff();
      if (overlap > kOrthogonalityTolerance) {
        throw NotCorrectable("NotCorrectable: images of " + images[i].op->name + " and " + images[j].op->name +
                             " overlap by " + std::to_string(overlap));
      }
    }
  }

  for (const auto& img : images) {
    DenseOperator r;
    r.label = OperatorLabel::Recovery;
    r.name = "R[" + img.op->name + "]";
    r.m = m;
    // Π U_A^dag = C V W^dag.
    r.apply = [c, w = img.w, v = img.v, m](const DenseState& s) {
      return from_eigen(m, c * (v * (w.adjoint() * to_eigen(s))));
    };
    r.apply_adjoint = [c, w = img.w, v = img.v, m](const DenseState& s) {
      return from_eigen(m, w * (v.adjoint() * (c.adjoint() * to_eigen(s))));
    };
    rec.kraus.push_back(std::move(r));
  }

  if (include_completion) {
    // Σ R^dag R = B B^dag with B = [W_A ...]. With G = B^dag B = Q μ Q^dag and
    // X = B Q μ^{-1/2}: sqrt(I - B B^dag) = (I - X X^dag) + X sqrt(1 - μ) X^dag.
    Eigen::Index cols = 0;
    for (const auto& img : images) cols += img.w.cols();
    MatrixXcd b(c.rows(), cols);
    Eigen::Index at = 0;
    for (const auto& img : images) {
      b.middleCols(at, img.w.cols()) = img.w;
      at += img.w.cols();
    }
    MatrixXcd x(c.rows(), 0);
    Eigen::VectorXd root;
    if (cols > 0) {
      Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(b.adjoint() * b);
      const auto& mu = eig.eigenvalues();
      std::vector<Eigen::Index> keep;
      for (Eigen::Index i = 0; i < mu.size(); ++i)
        if (mu(i) > 1e-12) keep.push_back(i);
      x.resize(c.rows(), static_cast<Eigen::Index>(keep.size()));
      root.resize(static_cast<Eigen::Index>(keep.size()));
      for (std::size_t k = 0; k < keep.size(); ++k) {
        const auto i = keep[k];
        x.col(static_cast<Eigen::Index>(k)) = b * eig.eigenvectors().col(i) / std::sqrt(mu(i));
        root(static_cast<Eigen::Index>(k)) = std::sqrt(std::max(0.0, 1.0 - mu(i)));
      }
    }
    DenseOperator comp;
    comp.label = OperatorLabel::Recovery;
    comp.name = "R[completion]";
    comp.m = m;
    comp.apply = [x, root, m](const DenseState& s) {
      const VectorXcd v = to_eigen(s);
      const VectorXcd proj = x.adjoint() * v;
      return from_eigen(m, v - x * proj + x * (root.asDiagonal() * proj));
    };
    comp.apply_adjoint = comp.apply;
    rec.kraus.push_back(std::move(comp));
    rec.has_completion = true;
  }
  return rec;
}

double lambda_dense(std::span<const DenseState> code_basis, const DenseOperator& a) {
  const auto basis = orthonormalize(code_basis);
  const MatrixXcd c = to_matrix(basis);
  const MatrixXcd ac = apply_columns(a, basis.front().m, c);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(ac.adjoint() * ac);
  return eig.eigenvalues().minCoeff();
}

}  // namespace picode::oracle
