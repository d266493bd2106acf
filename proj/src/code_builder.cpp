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

#include "picode/code_builder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "picode/number_theory.hpp"

namespace picode {

namespace {

std::string pair_text(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

BigInt big(std::uint64_t x) { return BigInt(std::to_string(x)); }

BigRational squared_amplitude(std::uint64_t n_d, std::uint64_t j) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n_d - 1);
  BigRational r(binomial(n_d, j), den);
  r.canonicalize();
  return r;
}

std::optional<BigRational> exact_sqrt(const BigRational& x) {
  if (x < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
    return std::nullopt;
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
  return BigRational(num, den);
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotCoprime: return "NotCoprime";
    case ViolationKind::TooSmall: return "TooSmall";
    case ViolationKind::BadExponent: return "BadExponent";
    case ViolationKind::NotSorted: return "NotSorted";
    case ViolationKind::OddProduct: return "OddProduct";
    case ViolationKind::TooFewStates: return "TooFewStates";
    case ViolationKind::WeightOverflow: return "WeightOverflow";
  }
  return "Unknown";
}

std::string Violation::to_string() const { return picode::to_string(kind) + ": " + detail; }

namespace {

std::string join_violations(const std::vector<Violation>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += "; ";
    out += v[i].to_string();
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

bool ValidationError::has(ViolationKind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

CodeParameters validate(std::span<const std::uint64_t> n, unsigned q, ValidateOptions options) {
  std::vector<Violation> violations;
  const std::size_t min_states = options.legacy ? 1 : 3;
  const std::uint64_t min_n = options.legacy ? 2 : 4;
  const unsigned min_q = options.legacy ? 1 : 3;
  const BigInt min_g = options.legacy ? 1 : 3;

  if (n.size() < min_states) {
    violations.push_back({ViolationKind::TooFewStates,
                          "D=" + std::to_string(n.size()) + " < " + std::to_string(min_states)});
  }
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    if (n[i] > n[i + 1]) violations.push_back({ViolationKind::NotSorted, pair_text(n[i], n[i + 1])});
  }
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      if (std::gcd(n[i], n[j]) != 1)
        violations.push_back({ViolationKind::NotCoprime, pair_text(n[i], n[j])});
    }
  }
  for (auto v : n) {
    if (v < min_n)
      violations.push_back({ViolationKind::TooSmall, "n=" + std::to_string(v) + " < " + std::to_string(min_n)});
  }
  if (q < min_q)
    violations.push_back({ViolationKind::BadExponent, "q=" + std::to_string(q) + " < " + std::to_string(min_q)});

  CodeParameters params;
  params.n.assign(n.begin(), n.end());
  params.q = q;
  params.legacy = options.legacy;
  params.N = 1;
  for (auto v : n) params.N *= big(v);
  for (auto v : n) {
    params.g.push_back(v == 0 ? BigInt(0) : BigInt(params.N / big(v)));
    if (v != 0 && params.g.back() < min_g) {
      violations.push_back({ViolationKind::TooSmall,
                            "g=" + params.g.back().get_str() + " < " + min_g.get_str()});
    }
  }
  mpz_pow_ui(params.m.get_mpz_t(), params.N.get_mpz_t(), q);
  if (!options.allow_odd_product && !options.legacy && mpz_odd_p(params.N.get_mpz_t())) {
    violations.push_back({ViolationKind::OddProduct, "N=" + params.N.get_str()});
  }

  if (!violations.empty()) throw ValidationError(std::move(violations));
  return params;
}

CodeParameters toy_parameters(std::span<const std::uint64_t> n, std::span<const std::uint64_t> g,
                              std::uint64_t m) {
  std::vector<Violation> violations;
  if (n.empty() || n.size() != g.size())
    violations.push_back({ViolationKind::TooFewStates, "need matching non-empty n and g lists"});
  CodeParameters params;
  params.legacy = true;
  params.q = 0;
  params.m = big(m);
  params.N = 1;
  for (std::size_t i = 0; i < std::min(n.size(), g.size()); ++i) {
    if (n[i] < 1 || g[i] < 1) {
      violations.push_back({ViolationKind::TooSmall, pair_text(n[i], g[i])});
      continue;
    }
    params.n.push_back(n[i]);
    params.g.push_back(big(g[i]));
    params.N *= big(n[i]);
    const auto idx = index_set(n[i]);
    if (big(g[i]) * big(idx.back()) > params.m) {
      violations.push_back({ViolationKind::WeightOverflow,
                            "g=" + std::to_string(g[i]) + " * " + std::to_string(idx.back()) +
                                " > m=" + std::to_string(m)});
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return params;
}

std::vector<std::uint64_t> index_set(std::uint64_t n_d) {
  if (n_d < 1) throw std::invalid_argument("index_set: n_d must be positive");
  std::vector<std::uint64_t> out;
  const std::uint64_t last = 2 * ((n_d - 1) / 2) + 1;
  for (std::uint64_t j = 1; j <= last; j += 2) out.push_back(j);
  return out;
}

BigRational DickeVector::norm_squared() const {
  BigRational s = 0;
  for (const auto& [w, a2] : support) s += a2;
  return s;
}

DickeVector logical_state(std::size_t d, const CodeParameters& params) {
  if (d < 1 || d > params.D()) throw std::out_of_range("logical index out of range");
  const std::uint64_t n_d = params.n_at(d);
  const BigInt& g_d = params.g_at(d);
  DickeVector state;
  state.length = params.m;
  for (std::uint64_t j : index_set(n_d)) {
    BigInt w = g_d * big(j);
    if (w > params.m) {
      throw ValidationError({{ViolationKind::WeightOverflow, "weight " + w.get_str() + " > m=" + params.m.get_str()}});
    }
    state.support.emplace(std::move(w), squared_amplitude(n_d, j));
  }
  if (state.norm_squared() != 1) {
    throw IdentityViolation("logical state " + std::to_string(d) + " has squared norm " +
                            state.norm_squared().get_str());
  }
  return state;
}

std::optional<BigRational> SurdSum::rational() const {
  BigRational total = 0;
  for (const auto& r : radicands) {
    auto s = exact_sqrt(r);
    if (!s) return std::nullopt;
    total += *s;
  }
  return total;
}

mpf_class SurdSum::value() const {
  mpf_class total(0, float_precision_bits());
  for (const auto& r : radicands) {
    mpf_class x = to_float(r);
    total += sqrt(x);
  }
  return total;
}

std::string SurdSum::to_string() const {
  if (auto r = rational()) return to_fraction_string(*r);
  std::string out;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    if (i) out += "+";
    if (auto s = exact_sqrt(radicands[i])) {
      out += to_fraction_string(*s);
    } else {
      out += "sqrt(" + to_fraction_string(radicands[i]) + ")";
    }
  }
  return out;
}

Overlap overlap(std::size_t d, std::size_t d2, const CodeParameters& params) {
  const DickeVector a = logical_state(d, params);
  const DickeVector b = logical_state(d2, params);
  Overlap result;
  for (const auto& [w, a2] : a.support) {
    auto it = b.support.find(w);
    if (it == b.support.end()) continue;
    result.value.radicands.push_back(a2 * it->second);
    result.colliding_weights.push_back(w);
  }
  return result;
}

BigRational GramMatrix::max_off_diagonal_upper() const {
  if (auto r = max_off_diagonal.rational()) return *r;
  // Round the 50-digit value up in the 30th digit.
  BigRational approx(max_off_diagonal.value());
  return approx + BigRational(approx) * BigRational(1, BigInt("1000000000000000000000000000000"));
}

GramMatrix gram_matrix(const CodeParameters& params) {
  const std::size_t D = params.D();
  GramMatrix gram;
  gram.entries.assign(D, std::vector<SurdSum>(D));
  mpf_class best(0, float_precision_bits());
  for (std::size_t i = 0; i < D; ++i) {
    gram.entries[i][i].radicands = {BigRational(1)};
    for (std::size_t j = i + 1; j < D; ++j) {
      SurdSum s = overlap(i + 1, j + 1, params).value;
      gram.entries[i][j] = s;
      gram.entries[j][i] = s;
      if (s.value() > best) {
        best = s.value();
        gram.max_off_diagonal = s;
      }
    }
  }
  return gram;
}

}  // namespace picode
