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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace picode {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Precision used whenever an exact value is rendered as a floating value.
inline constexpr int kFloatDigits = 50;

/// Passed as a truncation order to keep every term of an expansion.
inline constexpr std::size_t kFullExpansion = static_cast<std::size_t>(-1);

/// Raised when a closed-form identity disagrees with direct summation. This
/// always indicates a bug, never bad input.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// num/den in canonical form. Throws std::domain_error when den is zero.
BigRational ratio(const BigInt& num, const BigInt& den);

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Closed form of sum_{t=0}^{n} t^r C(n, t) for r in 0..3.
BigRational moment_sum_closed_form(std::uint64_t n, unsigned r);

/// sum_{t=0}^{n} t^r C(n, t) by direct summation, checked against the closed
/// form. Throws IdentityViolation on disagreement.
BigRational moment_sum(std::uint64_t n, unsigned r);

/// Parses "p", "p/q" or a plain decimal ("0.001", "1e-3") into an exact value.
BigRational parse_rational(const std::string& text);

/// Exact value of a double (every finite double is a dyadic rational).
BigRational exact_from_double(double x);

/// "p/q" (or "p" for integers).
std::string to_fraction_string(const BigRational& x);

/// Scientific notation with `digits` significant digits, rounded half-to-even
/// from the exact value, e.g. "1.00000e-03".
std::string to_scientific(const BigRational& x, int digits);

/// x rounded to `digits` significant decimal digits (half-to-even), exactly.
BigRational round_significant(const BigRational& x, int digits);

/// Polynomial in the damping rate with exact rational coefficients, constant
/// term first. Trailing zeros are always trimmed, so the zero polynomial has
/// no coefficients.
class GammaPolynomial {
 public:
  GammaPolynomial() = default;
  explicit GammaPolynomial(std::vector<BigRational> coefficients);

  static GammaPolynomial constant(const BigRational& c);
  static GammaPolynomial monomial(const BigRational& c, std::size_t power);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  /// Coefficient of gamma^j; zero past the degree.
  BigRational coefficient(std::size_t j) const;

  BigRational evaluate(const BigRational& gamma) const;
  /// Evaluates exactly at the binary value of `gamma`, then rounds to a
  /// kFloatDigits-digit float.
  mpf_class evaluate(double gamma) const;

  GammaPolynomial& operator+=(const GammaPolynomial& other);
  GammaPolynomial& operator-=(const GammaPolynomial& other);
  GammaPolynomial& operator*=(const BigRational& scale);

  friend GammaPolynomial operator+(GammaPolynomial a, const GammaPolynomial& b) { return a += b; }
  friend GammaPolynomial operator-(GammaPolynomial a, const GammaPolynomial& b) { return a -= b; }
  friend GammaPolynomial operator*(GammaPolynomial a, const BigRational& s) { return a *= s; }
  friend GammaPolynomial operator*(const BigRational& s, GammaPolynomial a) { return a *= s; }
  friend GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b);
  friend bool operator==(const GammaPolynomial& a, const GammaPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Drops every term above gamma^max_order.
  GammaPolynomial truncated(std::size_t max_order) const;
  /// gamma * p, truncated at max_order.
  GammaPolynomial times_gamma(std::size_t max_order = kFullExpansion) const;

  /// Coefficients as "p/q" strings, constant term first.
  std::vector<std::string> to_strings() const;
  static GammaPolynomial from_strings(const std::vector<std::string>& coefficients);

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

/// Exact expansion of (1 - gamma)^e, optionally only through gamma^max_order.
GammaPolynomial one_minus_gamma_pow(std::uint64_t e, std::size_t max_order = kFullExpansion);

/// Precision in bits that carries kFloatDigits decimal digits.
mp_bitcnt_t float_precision_bits();

mpf_class to_float(const BigRational& x);

}  // namespace picode
