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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "picode/code_parameters.hpp"
#include "picode/exact_poly.hpp"

namespace picode {

class CoprimalityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CollisionFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t x);

/// p_k with p_1 = 2.
std::uint64_t nth_prime(std::uint64_t k);

/// k such that p_k = p. Throws std::invalid_argument if p is not prime.
std::uint64_t prime_index(std::uint64_t p);

bool pairwise_coprime(std::span<const std::uint64_t> values);

struct CoprimeSequence {
  std::vector<std::uint64_t> values;  // sorted non-decreasing
  BigInt product;
};

/// (p_k, p_k + 1, p_{k+1}, ..., p_{k+D-2}), sorted. Requires p_k >= 5 and
/// D >= 2. Throws CoprimalityViolation if the result is not pairwise coprime.
CoprimeSequence build_coprime_sequence(std::uint64_t k, unsigned D);

/// Whether x*g = y*g2 + s has an integer solution, i.e. gcd(g, g2) | s.
bool diophantine_solvable(const BigInt& g, const BigInt& g2, const BigInt& s);

/// One integer solution of x*g - y*g2 = s, if any exists. Every other
/// solution is (x + k*g2/h, y + k*g/h) with h = gcd(g, g2).
std::optional<std::pair<BigInt, BigInt>> diophantine_particular(const BigInt& g, const BigInt& g2,
                                                                const BigInt& s);

struct PositiveSolution {
  BigInt x;
  BigInt y;
  BigInt common;  // x*g == y*g2 == lcm(g, g2)
};

/// Smallest positive (x, y) with x*g = y*g2.
PositiveSolution min_positive_solution(const BigInt& g, const BigInt& g2);

struct PairCollisionRecord {
  std::size_t d = 0;  // 1-based
  std::size_t d2 = 0;
  BigInt gcd;
  BigInt expected_gcd;  // N / (n_d n_d2); zero when that is not an integer
  BigInt lcm;
  bool lcm_is_N = false;
  bool gcd_matches = false;
  bool gcd_above_one = false;

  bool holds() const { return lcm_is_N && gcd_matches && gcd_above_one; }
};

struct CollisionReport {
  std::vector<PairCollisionRecord> pairs;
  bool all_hold() const;
  std::string describe_failures() const;
};

/// For each pair d < d2: lcm(g_d, g_d2) == N and gcd(g_d, g_d2) == N/(n_d n_d2) > 1.
/// Never throws; see require_no_interior_collision.
CollisionReport verify_no_interior_collision(const CodeParameters& params);

/// Same analysis; throws CollisionFound naming every failing pair.
CollisionReport require_no_interior_collision(const CodeParameters& params);

}  // namespace picode
