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

#include <random>

#include "oracles.hpp"
#include "picode/exact_poly.hpp"

namespace picode {
namespace {

using oracles::q;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 3), 10);
  EXPECT_EQ(binomial(7, 7), 1);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  auto rows = oracles::pascal(64);
  for (unsigned n = 0; n <= 64; ++n)
    for (unsigned k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), rows[n][k]) << n << "," << k;
  EXPECT_EQ(binomial(64, 32), BigInt("1832624140942590534"));
}

TEST(MomentSum, Examples) {
  EXPECT_EQ(moment_sum(5, 1), 80);
  EXPECT_EQ(moment_sum(5, 2), 240);
  EXPECT_EQ(moment_sum(5, 3), 800);
  EXPECT_EQ(moment_sum(5, 0), 32);
}

TEST(MomentSum, ClosedFormsHoldUpTo64) {
  auto rows = oracles::pascal(64);
  for (unsigned n = 1; n <= 64; ++n) {
    for (unsigned r = 0; r <= 3; ++r) {
      BigInt direct = 0;
      for (unsigned t = 0; t <= n; ++t) {
        BigInt tr = 1;
        for (unsigned i = 0; i < r; ++i) tr *= t;
        direct += tr * rows[n][t];
      }
      ASSERT_EQ(moment_sum(n, r), BigRational(direct)) << n << "," << r;
    }
  }
}

TEST(MomentSum, RejectsHighOrder) { EXPECT_THROW(moment_sum(5, 4), std::invalid_argument); }

TEST(OneMinusGammaPow, Examples) {
  EXPECT_EQ(one_minus_gamma_pow(0).coefficients(), std::vector<BigRational>{1});
  EXPECT_EQ(one_minus_gamma_pow(2).coefficients(), (std::vector<BigRational>{1, -2, 1}));
  auto p = one_minus_gamma_pow(210);
  EXPECT_EQ(p.coefficient(1), -210);
  EXPECT_EQ(p.coefficient(2), 21945);
}

TEST(OneMinusGammaPow, MatchesRepeatedMultiplication) {
  for (unsigned e = 0; e <= 40; ++e) {
    auto expected = oracles::one_minus_x_pow(e);
    auto p = one_minus_gamma_pow(e);
    ASSERT_EQ(p.coefficients(), expected) << e;
  }
}

TEST(OneMinusGammaPow, Truncation) {
  auto full = one_minus_gamma_pow(30);
  auto cut = one_minus_gamma_pow(30, 3);
  EXPECT_EQ(cut.degree(), 3);
  for (std::size_t j = 0; j <= 3; ++j) EXPECT_EQ(cut.coefficient(j), full.coefficient(j));
  EXPECT_EQ(full.truncated(3), cut);
}

TEST(OneMinusGammaPow, EndpointValues) {
  for (unsigned e = 0; e <= 50; ++e) {
    auto p = one_minus_gamma_pow(e);
    EXPECT_EQ(p.evaluate(BigRational(0)), 1);
    if (e >= 1) EXPECT_EQ(p.evaluate(BigRational(1)), 0);
  }
}

TEST(GammaPolynomial, Arithmetic) {
  GammaPolynomial sq({1, -2, 1});
  EXPECT_EQ(sq.evaluate(BigRational(1)), 0);
  GammaPolynomial p({1, -105, q(12495, 2)});
  EXPECT_EQ(p.coefficient(1), -105);
  EXPECT_EQ(p.coefficient(7), 0);
  auto prod = GammaPolynomial({1, -1}) * GammaPolynomial({1, 1});
  EXPECT_EQ(prod.coefficients(), (std::vector<BigRational>{1, 0, -1}));
}

TEST(GammaPolynomial, TrimsAndZero) {
  GammaPolynomial z({0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  auto a = GammaPolynomial({1, 2, 3});
  auto d = a - a;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ((GammaPolynomial({1, 2, 3}) - GammaPolynomial({0, 0, 3})).degree(), 1);
}

TEST(GammaPolynomial, TimesGamma) {
  GammaPolynomial p({1, 2, 3});
  EXPECT_EQ(p.times_gamma().coefficients(), (std::vector<BigRational>{0, 1, 2, 3}));
  EXPECT_EQ(p.times_gamma(2).coefficients(), (std::vector<BigRational>{0, 1, 2}));
}

TEST(GammaPolynomial, StringRoundTrip) {
  GammaPolynomial p({q(-3, 7), 0, q(12495, 2)});
  auto s = p.to_strings();
  EXPECT_EQ(s, (std::vector<std::string>{"-3/7", "0", "12495/2"}));
  EXPECT_EQ(GammaPolynomial::from_strings(s), p);
}

TEST(GammaPolynomial, FloatEvaluationAvoidsCancellation) {
  // (1-x)^200 at x = 0.5 is 2^-200; naive double Horner loses everything.
  auto p = one_minus_gamma_pow(200);
  mpf_class v = p.evaluate(0.5);
  mpf_class expected(1, float_precision_bits());
  mpf_div_2exp(expected.get_mpf_t(), expected.get_mpf_t(), 200);
  mpf_class rel = abs(v - expected) / expected;
  EXPECT_LT(rel.get_d(), 1e-45);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("197/105"), q(197, 105));
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("0.001"), q(1, 1000));
  EXPECT_EQ(parse_rational("1e-4"), q(1, 10000));
  EXPECT_EQ(parse_rational("-2.5E2"), -250);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, RoundHalfEven) {
  EXPECT_EQ(round_significant(q(125, 100), 2), q(12, 10));
  EXPECT_EQ(round_significant(q(135, 100), 2), q(14, 10));
  EXPECT_EQ(round_significant(q(-125, 100), 2), q(-12, 10));
  EXPECT_EQ(round_significant(q(1, 3), 3), q(333, 1000));
  EXPECT_EQ(to_scientific(q(1, 1000), 6), "1.00000e-03");
  EXPECT_EQ(to_scientific(q(-2, 3), 3), "-6.67e-01");
  EXPECT_EQ(to_scientific(q(999999, 1000000), 3), "1.00e+00");
  EXPECT_EQ(to_scientific(0, 3), "0.00e+00");
}

TEST(RationalProperty, AddSubtractRoundTrip) {
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(11);
  for (int i = 0; i < 500; ++i) {
    BigRational a(gr.get_z_bits(200) - gr.get_z_bits(199), gr.get_z_bits(150) + 1);
    BigRational b(gr.get_z_bits(180) - gr.get_z_bits(181), gr.get_z_bits(120) + 1);
    a.canonicalize();
    b.canonicalize();
    BigRational c = (a + b) - b;
    ASSERT_EQ(c, a);
    ASSERT_EQ(ratio(c.get_num(), c.get_den()), a);
    ASSERT_EQ(parse_rational(to_fraction_string(a)), a);
  }
}

TEST(RationalProperty, RatioIsCanonical) {
  auto r = ratio(BigInt(-6), BigInt(-4));
  EXPECT_EQ(r.get_num(), 3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(ratio(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(PolynomialProperty, ProductEvaluatesAsProduct) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int i = 0; i < 100; ++i) {
    std::vector<BigRational> a(1 + rng() % 6), b(1 + rng() % 6);
    for (auto& c : a) c = q(coef(rng), 1 + rng() % 9);
    for (auto& c : b) c = q(coef(rng), 1 + rng() % 9);
    GammaPolynomial pa(a), pb(b);
    BigRational x = q(coef(rng), 1 + rng() % 13);
    ASSERT_EQ((pa * pb).evaluate(x), pa.evaluate(x) * pb.evaluate(x));
    ASSERT_EQ((pa + pb).evaluate(x), pa.evaluate(x) + pb.evaluate(x));
  }
}

}  // namespace
}  // namespace picode
