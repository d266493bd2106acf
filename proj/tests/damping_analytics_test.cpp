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
#include "picode/damping_analytics.hpp"

namespace picode {
namespace {

using oracles::q;

CodeParameters code567(unsigned qq = 3) {
  std::vector<std::uint64_t> n{5, 6, 7};
  return validate(n, qq);
}

// Exact gamma^1 and gamma^2 coefficients from odd-binomial moments.
struct MomentCoefficients {
  BigRational k0[3];
  BigRational f11[3];
  BigRational f1m[3];
};

MomentCoefficients from_moments(const CodeParameters& p, std::size_t d) {
  const auto n = static_cast<unsigned>(p.n_at(d));
  const BigRational g(p.g_at(d));
  const BigRational m(p.m);
  const BigRational e1 = g * oracles::odd_moment(n, 1);
  const BigRational e2 = g * g * oracles::odd_moment(n, 2);
  const BigRational e3 = g * g * g * oracles::odd_moment(n, 3);
  MomentCoefficients c;
  c.k0[0] = 1;
  c.k0[1] = -e1;
  c.k0[2] = (e2 - e1) / 2;
  c.f11[0] = 0;
  c.f11[1] = e1 / m;
  c.f11[2] = -(e2 - e1) / m;
  c.f1m[0] = 0;
  c.f1m[1] = (m * e1 - e2) / (m * (m - 1));
  // -sum p (w-1) w (m-w) / (m(m-1))
  c.f1m[2] = -((m + 1) * e2 - m * e1 - e3) / (m * (m - 1));
  return c;
}

TEST(K0Expectation, Code567Coefficients) {
  auto p = code567();
  for (std::size_t d = 1; d <= 3; ++d) {
    auto k0 = k0_expectation(d, p);
    EXPECT_EQ(k0.evaluate(BigRational(0)), 1);
    EXPECT_EQ(k0.coefficient(1), -105) << d;
  }
  EXPECT_EQ(k0_expectation(3, p).coefficient(2), q(12495, 2));
}

TEST(K0Expectation, SecondOrderClosedForm) {
  auto p = code567();
  const BigRational N(p.N);
  for (std::size_t d = 1; d <= 3; ++d) {
    const BigRational g(p.g_at(d));
    EXPECT_EQ(k0_expectation(d, p).coefficient(2), (N * N + N * g) / 8 - N / 4) << d;
  }
}

TEST(F1F1Expectation, Code567) {
  auto p = code567();
  for (std::size_t d = 1; d <= 3; ++d) {
    auto f = f1f1_expectation(d, p);
    EXPECT_EQ(f.evaluate(BigRational(0)), 0);
    EXPECT_EQ(f.coefficient(1), q(1, 88200));
    EXPECT_EQ(f.evaluate(BigRational(1)), 0);
  }
}

TEST(F1FmExpectation, FirstOrder) {
  auto p = code567();
  const BigRational N(p.N), m(p.m);
  for (std::size_t d = 1; d <= 3; ++d) {
    const BigRational g(p.g_at(d));
    auto f = f1fm_expectation(d, p);
    EXPECT_EQ(f.evaluate(BigRational(0)), 0);
    EXPECT_EQ(f.coefficient(1), (N / 2 - (N * N + N * g) / (4 * m)) / (m - 1)) << d;
  }
}

TEST(F1FmExpectation, SecondOrderClosedForm) {
  auto p = code567();
  const BigRational N(p.N), m(p.m);
  for (std::size_t d = 1; d <= 3; ++d) {
    const BigRational g(p.g_at(d));
    const BigRational expected = (N * N * N + 3 * N * N * g) / (8 * m * (m - 1)) -
                                 ((N * N + N * g) * (1 + 1 / m) - 2 * N) / (4 * (m - 1));
    EXPECT_EQ(f1fm_expectation(d, p).coefficient(2), expected) << d;
  }
}

TEST(Expectations, MatchMomentOracle) {
  std::vector<std::vector<std::uint64_t>> sets{{5, 6, 7}, {4, 5, 7}, {7, 8, 11}, {5, 8, 9}};
  for (const auto& n : sets) {
    for (unsigned qq : {3u, 4u}) {
      auto p = validate(n, qq);
      for (std::size_t d = 1; d <= p.D(); ++d) {
        auto c = from_moments(p, d);
        auto k0 = k0_expectation(d, p), f11 = f1f1_expectation(d, p), f1m = f1fm_expectation(d, p);
        for (std::size_t j = 0; j <= 2; ++j) {
          ASSERT_EQ(k0.coefficient(j), c.k0[j]);
          ASSERT_EQ(f11.coefficient(j), c.f11[j]);
          ASSERT_EQ(f1m.coefficient(j), c.f1m[j]);
        }
      }
    }
  }
}

TEST(DickeKernel, Examples) {
  EXPECT_TRUE(dicke_pair_expectation(0, 5, KrausPair::F1F1).is_zero());
  EXPECT_EQ(dicke_pair_expectation(1, 3, KrausPair::F1F1).evaluate(q(1, 10)), q(1, 30));
  // 0.2 * 0.8 * (2*2) / (4*3)
  EXPECT_EQ(dicke_pair_expectation(2, 4, KrausPair::F1Fm).evaluate(q(1, 5)), q(4, 75));
  EXPECT_EQ(dicke_pair_expectation(3, 3, KrausPair::K0K0).coefficients(),
            oracles::one_minus_x_pow(3));
}

TEST(DickeKernel, TopWeightAtDegenerateLength) {
  std::vector<std::uint64_t> n{5, 6, 7};
  ValidateOptions legacy;
  legacy.legacy = true;
  auto p = validate(n, 1, legacy);
  EXPECT_EQ(p.m, p.N);
  EXPECT_TRUE(dicke_pair_expectation(p.N, p.m, KrausPair::F1Fm).is_zero());
  // d=1 has t=5 at weight N: the F1Fm sum equals the sum without that term.
  auto s = logical_state(1, p);
  GammaPolynomial partial;
  for (const auto& [w, a2] : s.support)
    if (w != p.N) partial += a2 * dicke_pair_expectation(w, p.m, KrausPair::F1Fm);
  EXPECT_EQ(f1fm_expectation(1, p), partial);
}

TEST(DickeKernel, RejectsWeightAboveLength) {
  EXPECT_THROW(dicke_pair_expectation(5, 4, KrausPair::K0K0), std::invalid_argument);
}

TEST(DampingReport, FourierIdentities) {
  auto p = code567();
  DampingAnalytics a(p);
  const BigRational m(p.m);
  for (const auto& r : a.reports()) {
    EXPECT_EQ(r.fourier_diag_l1, r.f1f1 + (m - 1) * r.f1fm);
    EXPECT_EQ(r.fourier_diag_lgt1, r.f1f1 - r.f1fm);
    EXPECT_EQ(r.fourier_diag_l1 + (m - 1) * r.fourier_diag_lgt1, m * r.f1f1);
  }
}

TEST(DampingReport, WeightedKernelSumsReproduceClosedForms) {
  std::vector<std::vector<std::uint64_t>> sets{{5, 6, 7}, {4, 5, 7}};
  for (const auto& n : sets) {
    auto p = validate(n, 3);
    for (std::size_t d = 1; d <= p.D(); ++d) {
      auto s = logical_state(d, p);
      GammaPolynomial k0, f11, f1m;
      for (const auto& [w, a2] : s.support) {
        k0 += a2 * dicke_pair_expectation(w, p.m, KrausPair::K0K0);
        f11 += a2 * dicke_pair_expectation(w, p.m, KrausPair::F1F1);
        f1m += a2 * dicke_pair_expectation(w, p.m, KrausPair::F1Fm);
      }
      auto r = damping_report(d, p);
      ASSERT_EQ(r.k0k0, k0);
      ASSERT_EQ(r.f1f1, f11);
      ASSERT_EQ(r.f1fm, f1m);
    }
  }
}

TEST(DampingReport, CompletenessResidueOnGrid) {
  auto p = code567();
  DampingAnalytics a(p);
  const BigRational m(p.m);
  for (int i = 1; i < 50; ++i) {
    const BigRational gamma = q(i, 100);
    for (const auto& r : a.reports()) ASSERT_LE(r.k0k0.evaluate(gamma) + m * r.f1f1.evaluate(gamma), 1);
  }
  // Equality at first order.
  for (const auto& r : a.reports()) EXPECT_EQ((r.k0k0 + m * r.f1f1).coefficient(1), 0);
}

TEST(DampingReport, TruncatedAgreesWithFull) {
  auto p = code567();
  DampingAnalytics full(p), cut(p, 3);
  for (std::size_t d = 1; d <= 3; ++d) {
    EXPECT_LE(cut.report(d).k0k0.degree(), 3);
    for (std::size_t j = 0; j <= 3; ++j) {
      EXPECT_EQ(cut.report(d).k0k0.coefficient(j), full.report(d).k0k0.coefficient(j));
      EXPECT_EQ(cut.report(d).fourier_diag_l1.coefficient(j), full.report(d).fourier_diag_l1.coefficient(j));
      EXPECT_EQ(cut.report(d).fourier_diag_lgt1.coefficient(j),
                full.report(d).fourier_diag_lgt1.coefficient(j));
    }
  }
}

TEST(DampingReport, LargeWeightsNeedTruncation) {
  std::vector<std::uint64_t> n{13, 14, 17, 19};
  auto p = validate(n, 3);
  EXPECT_THROW(DampingAnalytics{p}, std::domain_error);
  DampingAnalytics a(p, 2);
  EXPECT_EQ(a.report(1).k0k0.coefficient(1), -BigRational(p.N) / 2);
}

TEST(FourierExpectation, Examples) {
  auto p = code567();
  EXPECT_TRUE(fourier_expectation(1, 2, 5, p).is_zero());
  auto r = damping_report(1, p);
  const BigRational m(p.m);
  EXPECT_EQ(fourier_expectation(1, 1, 1, p), r.f1f1 + (m - 1) * r.f1fm);
  EXPECT_EQ(fourier_expectation(1, 3, 3, p), r.f1f1 - r.f1fm);
}

TEST(CrossTerm, Examples) {
  auto p = code567();
  EXPECT_TRUE(cross_term_vanishes(1, 2, +1, p).vanishes);
  auto v = cross_term_vanishes(1, 3, 0, p);
  ASSERT_FALSE(v.vanishes);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->t, 5);
  EXPECT_EQ(v.witness->t2, 7);
  EXPECT_EQ(v.witness->weight, 210);
  EXPECT_TRUE(cross_term_vanishes(1, 2, 0, p).vanishes);
}

TEST(CrossTerm, MatchesBruteForceIntersection) {
  std::vector<std::vector<std::uint64_t>> sets{{5, 6, 7}, {4, 5, 7}, {7, 8, 11}, {5, 8, 9}, {4, 7, 9}};
  for (const auto& n : sets) {
    auto p = validate(n, 3);
    for (std::size_t d = 1; d <= p.D(); ++d) {
      for (std::size_t d2 = 1; d2 <= p.D(); ++d2) {
        if (d == d2) continue;
        auto a = logical_state(d, p), b = logical_state(d2, p);
        for (long s : {-1L, 0L, 1L}) {
          bool collide = false;
          for (const auto& [w, a2] : a.support)
            if (b.support.count(w - s)) collide = true;
          auto v = cross_term_vanishes(d, d2, s, p);
          ASSERT_EQ(v.vanishes, !collide) << d << " " << d2 << " " << s;
          if (!v.vanishes) {
            ASSERT_TRUE(a.support.count(v.witness->weight));
            ASSERT_TRUE(b.support.count(v.witness->weight - s));
          }
        }
      }
    }
  }
}

TEST(CrossFourier, CollisionAtN) {
  auto p = code567();
  auto x = cross_fourier_expectation(1, 3, false, p);
  ASSERT_EQ(x.terms.size(), 1u);
  EXPECT_EQ(x.terms[0].weight, 210);
  EXPECT_EQ(x.terms[0].amplitude_product_squared, q(1, 1024));
  auto r = x.rational();
  ASSERT_TRUE(r.has_value());
  const BigRational m(p.m);
  auto diag = dicke_pair_expectation(210, p.m, KrausPair::F1F1) - dicke_pair_expectation(210, p.m, KrausPair::F1Fm);
  EXPECT_EQ(*r, q(1, 32) * diag);
  EXPECT_TRUE(cross_fourier_expectation(1, 2, true, p).terms.empty());
}

}  // namespace
}  // namespace picode
