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

#include "picode/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace picode {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool trial_division(std::uint64_t x) {
  if (x < 2) return false;
  if (x < 4) return true;
  if (x % 2 == 0 || x % 3 == 0) return false;
  for (std::uint64_t f = 5; f * f <= x; f += 6) {
    if (x % f == 0 || x % (f + 2) == 0) return false;
  }
  return true;
}

// Strong probable-prime test; the first twelve prime bases are a proven
// witness set for all n < 3.3e24.
bool strong_probable_prime(std::uint64_t x) {
  std::uint64_t d = x - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % a == 0) return x == a;
    std::uint64_t y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

void require_positive(const BigInt& g, const BigInt& g2) {
  if (g < 1 || g2 < 1) throw std::invalid_argument("Diophantine coefficients must be positive");
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < (std::uint64_t{1} << 32)) return trial_division(x);
  return strong_probable_prime(x);
}

std::uint64_t nth_prime(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("prime index is 1-based");
  std::uint64_t count = 0;
  for (std::uint64_t x = 2;; ++x) {
    if (is_prime(x) && ++count == k) return x;
  }
}

std::uint64_t prime_index(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::uint64_t count = 0;
  for (std::uint64_t x = 2; x <= p; ++x)
    if (is_prime(x)) ++count;
  return count;
}

bool pairwise_coprime(std::span<const std::uint64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::gcd(values[i], values[j]) != 1) return false;
  return true;
}

CoprimeSequence build_coprime_sequence(std::uint64_t k, unsigned D) {
  if (D < 2) throw std::invalid_argument("coprime sequence needs D >= 2");
  const std::uint64_t pk = nth_prime(k);
  if (pk < 5) throw std::invalid_argument("coprime sequence needs p_k >= 5");

  CoprimeSequence seq;
  seq.values.push_back(pk);
  seq.values.push_back(pk + 1);
  std::uint64_t p = pk;
  for (unsigned j = 3; j <= D; ++j) {
    do {
      ++p;
    } while (!is_prime(p));
    seq.values.push_back(p);
  }
  std::sort(seq.values.begin(), seq.values.end());

  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.values.size(); ++j) {
      if (std::gcd(seq.values[i], seq.values[j]) != 1) {
        throw CoprimalityViolation("CoprimalityViolation: (" + std::to_string(seq.values[i]) +
                                   "," + std::to_string(seq.values[j]) + ")");
      }
    }
  }
  seq.product = 1;
  for (auto v : seq.values) seq.product *= static_cast<unsigned long>(v);
  return seq;
}

bool diophantine_solvable(const BigInt& g, const BigInt& g2, const BigInt& s) {
  require_positive(g, g2);
  return mpz_divisible_p(s.get_mpz_t(), gcd_of(g, g2).get_mpz_t()) != 0;
}

std::optional<std::pair<BigInt, BigInt>> diophantine_particular(const BigInt& g, const BigInt& g2,
                                                                const BigInt& s) {
  require_positive(g, g2);
  BigInt h, a, b;
  // a*g + b*g2 = h
  mpz_gcdext(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(), g2.get_mpz_t());
  if (mpz_divisible_p(s.get_mpz_t(), h.get_mpz_t()) == 0) return std::nullopt;
  const BigInt scale = s / h;
  return std::make_pair(BigInt(a * scale), BigInt(-b * scale));
}

PositiveSolution min_positive_solution(const BigInt& g, const BigInt& g2) {
  require_positive(g, g2);
  const BigInt h = gcd_of(g, g2);
  PositiveSolution sol{g2 / h, g / h, 0};
  sol.common = sol.x * g;
  return sol;
}

bool CollisionReport::all_hold() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.holds(); });
}

std::string CollisionReport::describe_failures() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& p : pairs) {
    if (p.holds()) continue;
    if (!first) out << "; ";
    first = false;
    out << "(g" << p.d << ",g" << p.d2 << ") gcd=" << p.gcd << " lcm=" << p.lcm;
    if (!p.gcd_above_one) out << " gcd not > 1";
    if (!p.gcd_matches) out << " gcd != N/(n_d n_d')";
    if (!p.lcm_is_N) out << " lcm != N";
  }
  return out.str();
}

CollisionReport verify_no_interior_collision(const CodeParameters& params) {
  CollisionReport report;
  for (std::size_t d = 1; d <= params.D(); ++d) {
    for (std::size_t d2 = d + 1; d2 <= params.D(); ++d2) {
      PairCollisionRecord rec;
      rec.d = d;
      rec.d2 = d2;
      const BigInt& g = params.g_at(d);
      const BigInt& g2 = params.g_at(d2);
      rec.gcd = gcd_of(g, g2);
      rec.lcm = g * g2 / rec.gcd;
      const BigInt nn = BigInt(static_cast<unsigned long>(params.n_at(d))) *
                        static_cast<unsigned long>(params.n_at(d2));
      if (mpz_divisible_p(params.N.get_mpz_t(), nn.get_mpz_t()) != 0) rec.expected_gcd = params.N / nn;
      rec.lcm_is_N = rec.lcm == params.N;
      rec.gcd_matches = rec.expected_gcd != 0 && rec.gcd == rec.expected_gcd;
      rec.gcd_above_one = rec.gcd > 1;
      report.pairs.push_back(rec);
    }
  }
  return report;
}

CollisionReport require_no_interior_collision(const CodeParameters& params) {
  CollisionReport report = verify_no_interior_collision(params);
  if (!report.all_hold()) throw CollisionFound("CollisionFound: " + report.describe_failures());
  return report;
}

}  // namespace picode
