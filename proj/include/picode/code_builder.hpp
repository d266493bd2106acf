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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "picode/code_parameters.hpp"
#include "picode/exact_poly.hpp"

namespace picode {

enum class ViolationKind {
  NotCoprime,
  TooSmall,
  BadExponent,
  NotSorted,
  OddProduct,
  TooFewStates,
  WeightOverflow,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;  // e.g. "(4,6)"

  /// "NotCoprime: (4,6)"
  std::string to_string() const;
};

/// Carries every violated constraint, not just the first.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }
  bool has(ViolationKind kind) const;

 private:
  std::vector<Violation> violations_;
};

struct ValidateOptions {
  /// Accept an odd product N (the orthogonality argument assumes N even).
  bool allow_odd_product = false;
  /// Accept D = 1, 2 and q >= 1 with n_d >= 2, g_d >= 1 for regression
  /// against single-state constructions.
  bool legacy = false;
};

/// Builds g_d = N / n_d and m = N^q and checks every constraint, reporting all
/// violations at once through ValidationError.
CodeParameters validate(std::span<const std::uint64_t> n, unsigned q, ValidateOptions options = {});

/// Toy instance with explicit spacings and length, outside the product
/// construction. Only n_d >= 1, g_d >= 1 and g_d * max(I_d) <= m are enforced.
CodeParameters toy_parameters(std::span<const std::uint64_t> n, std::span<const std::uint64_t> g,
                              std::uint64_t m);

/// Odd integers 1, 3, ..., 2*floor((n_d - 1)/2) + 1.
std::vector<std::uint64_t> index_set(std::uint64_t n_d);

/// Permutation-invariant state on `length` qubits as a map from Dicke weight
/// to squared amplitude.
struct DickeVector {
  BigInt length;
  std::map<BigInt, BigRational> support;

  BigRational norm_squared() const;
};

/// Logical basis state d (1-based): weight g_d * j carries C(n_d, j) / 2^(n_d - 1)
/// for j in I_d.
DickeVector logical_state(std::size_t d, const CodeParameters& params);

/// A sum of square roots of non-negative rationals; exact inner products
/// between positive-amplitude Dicke superpositions take this form.
struct SurdSum {
  std::vector<BigRational> radicands;

  bool is_zero() const { return radicands.empty(); }
  /// Exact value when every radicand is a perfect square.
  std::optional<BigRational> rational() const;
  mpf_class value() const;
  /// "0", "p/q", or "sqrt(a)+sqrt(b)" when irrational.
  std::string to_string() const;
};

struct Overlap {
  SurdSum value;
  std::vector<BigInt> colliding_weights;
};

/// <d_L|d2_L>, summed over the weights both states support.
Overlap overlap(std::size_t d, std::size_t d2, const CodeParameters& params);

struct GramMatrix {
  std::vector<std::vector<SurdSum>> entries;  // D x D, 0-based
  SurdSum max_off_diagonal;
  /// max_off_diagonal when rational, otherwise a rational upper bound on it.
  BigRational max_off_diagonal_upper() const;
};

GramMatrix gram_matrix(const CodeParameters& params);

}  // namespace picode
