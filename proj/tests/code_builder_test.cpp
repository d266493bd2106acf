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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "picode/code_builder.hpp"
#include "picode/number_theory.hpp"

namespace picode {
namespace {

using oracles::q;

CodeParameters code567() {
  std::vector<std::uint64_t> n{5, 6, 7};
  return validate(n, 3);
}

std::set<BigInt> weights_of(const DickeVector& v) {
  std::set<BigInt> out;
  for (const auto& [w, a2] : v.support) out.insert(w);
  return out;
}

ValidationError validation_error(std::vector<std::uint64_t> n, unsigned qq, ValidateOptions opts = {}) {
  try {
    validate(n, qq, opts);
  } catch (const ValidationError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ValidationError";
  return ValidationError({});
}

TEST(Validate, Code567) {
  auto p = code567();
  EXPECT_EQ(p.N, 210);
  EXPECT_EQ(p.g, (std::vector<BigInt>{42, 35, 30}));
  EXPECT_EQ(p.m, 9261000);
  EXPECT_EQ(p.D(), 3u);
}

TEST(Validate, Violations) {
  auto e = validation_error({4, 6, 7}, 3);
  EXPECT_TRUE(e.has(ViolationKind::NotCoprime));
  ASSERT_FALSE(e.violations().empty());
  EXPECT_EQ(e.violations()[0].to_string(), "NotCoprime: (4,6)");

  EXPECT_TRUE(validation_error({5, 6, 7}, 2).has(ViolationKind::BadExponent));
  EXPECT_TRUE(validation_error({7, 6, 5}, 3).has(ViolationKind::NotSorted));
  EXPECT_TRUE(validation_error({3, 4, 5}, 3).has(ViolationKind::TooSmall));
  EXPECT_TRUE(validation_error({5, 7, 9}, 3).has(ViolationKind::OddProduct));
  EXPECT_TRUE(validation_error({5, 6}, 3).has(ViolationKind::TooFewStates));
}

TEST(Validate, ReportsEveryViolation) {
  auto e = validation_error({6, 4, 3}, 1);
  EXPECT_TRUE(e.has(ViolationKind::NotSorted));
  EXPECT_TRUE(e.has(ViolationKind::NotCoprime));
  EXPECT_TRUE(e.has(ViolationKind::TooSmall));
  EXPECT_TRUE(e.has(ViolationKind::BadExponent));
}

TEST(Validate, Overrides) {
  std::vector<std::uint64_t> odd{5, 7, 9};
  ValidateOptions allow;
  allow.allow_odd_product = true;
  EXPECT_EQ(validate(odd, 3, allow).N, 315);
  ValidateOptions legacy;
  legacy.legacy = true;
  std::vector<std::uint64_t> two{2, 3};
  auto p = validate(two, 1, legacy);
  EXPECT_EQ(p.m, 6);
  EXPECT_TRUE(p.legacy);
}

TEST(ToyParameters, WeightOverflow) {
  std::vector<std::uint64_t> n{3}, g{4};
  EXPECT_THROW(toy_parameters(n, g, 8), ValidationError);
  std::vector<std::uint64_t> g2{2};
  auto p = toy_parameters(n, g2, 8);
  EXPECT_EQ(p.m, 8);
  EXPECT_EQ(p.q, 0u);
}

TEST(IndexSet, Examples) {
  EXPECT_EQ(index_set(5), (std::vector<std::uint64_t>{1, 3, 5}));
  EXPECT_EQ(index_set(6), (std::vector<std::uint64_t>{1, 3, 5}));
  EXPECT_EQ(index_set(7), (std::vector<std::uint64_t>{1, 3, 5, 7}));
  EXPECT_EQ(index_set(1), (std::vector<std::uint64_t>{1}));
  for (std::uint64_t n = 1; n <= 60; ++n) EXPECT_EQ(index_set(n), oracles::odd_indices(n));
}

TEST(LogicalState, Code567Supports) {
  auto p = code567();
  auto s1 = logical_state(1, p);
  EXPECT_EQ(s1.length, 9261000);
  ASSERT_EQ(s1.support.size(), 3u);
  EXPECT_EQ(s1.support.at(42), q(5, 16));
  EXPECT_EQ(s1.support.at(126), q(10, 16));
  EXPECT_EQ(s1.support.at(210), q(1, 16));
  auto s2 = logical_state(2, p);
  ASSERT_EQ(s2.support.size(), 3u);
  EXPECT_EQ(s2.support.at(35), q(6, 32));
  EXPECT_EQ(s2.support.at(105), q(20, 32));
  EXPECT_EQ(s2.support.at(175), q(6, 32));
  auto s3 = logical_state(3, p);
  EXPECT_EQ(weights_of(s3), (std::set<BigInt>{30, 90, 150, 210}));
  for (std::size_t d = 1; d <= 3; ++d) EXPECT_EQ(logical_state(d, p).norm_squared(), 1);
}

TEST(LogicalState, AmplitudesFromPascal) {
  for (unsigned n = 4; n <= 30; ++n) {
    std::vector<std::uint64_t> ns{n};
    ValidateOptions legacy;
    legacy.legacy = true;
    auto p = validate(ns, 1, legacy);
    auto s = logical_state(1, p);
    auto expected = oracles::odd_binomial_weights(n);
    ASSERT_EQ(s.support.size(), expected.size());
    for (auto& [t, prob] : expected) ASSERT_EQ(s.support.at(BigInt(static_cast<unsigned long>(t))), prob);
  }
}

TEST(Overlap, Code567) {
  auto p = code567();
  auto o12 = overlap(1, 2, p);
  EXPECT_TRUE(o12.value.is_zero());
  EXPECT_TRUE(o12.colliding_weights.empty());
  auto o13 = overlap(1, 3, p);
  ASSERT_TRUE(o13.value.rational().has_value());
  EXPECT_EQ(*o13.value.rational(), q(1, 32));
  EXPECT_EQ(o13.colliding_weights, (std::vector<BigInt>{210}));
  EXPECT_EQ(o13.value.to_string(), "1/32");
  EXPECT_TRUE(overlap(2, 3, p).value.is_zero());
}

TEST(Overlap, OddPairsCollideAtN) {
  std::vector<std::uint64_t> n{5, 8, 9};
  auto p = validate(n, 3, {});
  auto o = overlap(1, 3, p);
  ASSERT_TRUE(o.value.rational().has_value());
  EXPECT_EQ(*o.value.rational(), q(1, 64));  // 2^-2 * 2^-4
  std::vector<std::uint64_t> n2{4, 5, 7};
  auto p2 = validate(n2, 3, {});
  auto o2 = overlap(2, 3, p2);
  EXPECT_EQ(*o2.value.rational(), q(1, 32));
  EXPECT_TRUE(overlap(1, 2, p2).value.is_zero());
}

TEST(GramMatrix, Code567) {
  auto p = code567();
  auto gm = gram_matrix(p);
  ASSERT_EQ(gm.entries.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      auto v = gm.entries[i][j].rational();
      ASSERT_TRUE(v.has_value());
      BigRational expected = i == j ? BigRational(1) : BigRational(0);
      if ((i == 0 && j == 2) || (i == 2 && j == 0)) expected = q(1, 32);
      EXPECT_EQ(*v, expected) << i << j;
    }
  }
  EXPECT_EQ(gm.max_off_diagonal_upper(), q(1, 32));
  EXPECT_LE(gm.max_off_diagonal_upper(), q(1, 16));
}

TEST(GramMatrix, HalvesAlongFamily) {
  // (p, p+1, p') families: only the odd pair (p, p') collides, at weight N.
  std::vector<std::uint64_t> starts{7, 11, 13, 17, 19, 23};
  std::vector<std::pair<BigRational, std::uint64_t>> values;
  for (auto p : starts) {
    auto seq = build_coprime_sequence(prime_index(p), 3);
    auto params = validate(seq.values, 3);
    auto gm = gram_matrix(params);
    const auto n1 = seq.values.front(), nD = seq.values.back();
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), (n1 - 1) / 2 + (nD - 1) / 2);
    ASSERT_EQ(gm.max_off_diagonal_upper(), oracles::qz(1, den));
    values.emplace_back(gm.max_off_diagonal_upper(), n1 + nD);
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    const auto step = (values[i].second - values[i - 1].second) / 2;
    BigInt factor = 1;
    mpz_mul_2exp(factor.get_mpz_t(), factor.get_mpz_t(), step);
    EXPECT_EQ(values[i - 1].first, values[i].first * factor);
  }
}

// All valid parameter sets with D = 3 and N <= limit.
std::vector<CodeParameters> small_codes(std::uint64_t limit) {
  std::vector<CodeParameters> out;
  for (std::uint64_t a = 4; a * a * a <= limit; ++a)
    for (std::uint64_t b = a; a * b * b <= limit; ++b)
      for (std::uint64_t c = b; a * b * c <= limit; ++c) {
        std::vector<std::uint64_t> n{a, b, c};
        try {
          out.push_back(validate(n, 3));
        } catch (const ValidationError&) {
        }
      }
  return out;
}

TEST(LogicalStateProperty, SpacingAndCollisions) {
  auto codes = small_codes(10000);
  ASSERT_GT(codes.size(), 20u);
  for (const auto& p : codes) {
    std::vector<std::set<BigInt>> supports;
    for (std::size_t d = 1; d <= p.D(); ++d) {
      auto s = logical_state(d, p);
      ASSERT_EQ(s.norm_squared(), 1);
      auto ws = weights_of(s);
      ASSERT_EQ(*ws.begin(), p.g_at(d));
      BigInt prev = -1;
      for (const auto& w : ws) {
        if (prev >= 0) ASSERT_EQ(w - prev, 2 * p.g_at(d));
        ASSERT_LE(w, p.m);
        prev = w;
      }
      supports.push_back(ws);
    }
    for (std::size_t d = 0; d < p.D(); ++d) {
      for (std::size_t d2 = d + 1; d2 < p.D(); ++d2) {
        std::vector<BigInt> common;
        std::set_intersection(supports[d].begin(), supports[d].end(), supports[d2].begin(),
                              supports[d2].end(), std::back_inserter(common));
        const bool both_odd = p.n[d] % 2 == 1 && p.n[d2] % 2 == 1;
        if (both_odd) {
          ASSERT_EQ(common, (std::vector<BigInt>{p.N}));
        } else {
          ASSERT_TRUE(common.empty());
        }
        auto o = overlap(d + 1, d2 + 1, p);
        ASSERT_EQ(o.colliding_weights, common);
      }
    }
  }
}

TEST(GramMatrixProperty, EnvelopeAndSymmetry) {
  for (const auto& p : small_codes(10000)) {
    auto gm = gram_matrix(p);
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), p.n[0] - 1);
    ASSERT_LE(gm.max_off_diagonal_upper(), oracles::qz(1, den));
    for (std::size_t i = 0; i < p.D(); ++i) {
      ASSERT_EQ(gm.entries[i][i].rational().value_or(-1), 1);
      for (std::size_t j = 0; j < p.D(); ++j)
        ASSERT_EQ(gm.entries[i][j].to_string(), gm.entries[j][i].to_string());
    }
  }
}

}  // namespace
}  // namespace picode
