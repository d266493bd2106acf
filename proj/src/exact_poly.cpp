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

#include "picode/exact_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace picode {

namespace {

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// 10^e as an exact rational, e of either sign.
BigRational pow10_signed(long e) {
  if (e >= 0) return BigRational(pow10(static_cast<unsigned long>(e)));
  return BigRational(BigInt(1), pow10(static_cast<unsigned long>(-e)));
}

// floor(log10(x)) for x > 0.
long decimal_exponent(const BigRational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  while (pow10_signed(e) > x) --e;
  while (pow10_signed(e + 1) <= x) ++e;
  return e;
}

BigInt floor_of(const BigRational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace

BigRational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational moment_sum_closed_form(std::uint64_t n, unsigned r) {
  const BigRational nn(BigInt(std::to_string(n)));
  auto two_pow = [](long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
    return e >= 0 ? BigRational(p) : BigRational(BigInt(1), p);
  };
  const long ln = static_cast<long>(n);
  switch (r) {
    case 0:
      return two_pow(ln);
    case 1:
      return two_pow(ln - 1) * nn;
    case 2:
      return two_pow(ln - 2) * nn * (nn + 1);
    case 3:
      return two_pow(ln - 3) * nn * nn * (nn + 3);
    default:
      throw std::invalid_argument("moment_sum: r must be in 0..3");
  }
}

BigRational moment_sum(std::uint64_t n, unsigned r) {
  if (r > 3) throw std::invalid_argument("moment_sum: r must be in 0..3");
  BigInt direct = 0;
  for (std::uint64_t t = 0; t <= n; ++t) {
    BigInt tp = 1;
    for (unsigned i = 0; i < r; ++i) tp *= static_cast<unsigned long>(t);
    direct += tp * binomial(n, t);
  }
  BigRational closed = moment_sum_closed_form(n, r);
  if (BigRational(direct) != closed) {
    throw IdentityViolation("moment_sum(" + std::to_string(n) + ", " + std::to_string(r) +
                            "): direct " + direct.get_str() + " != closed form " +
                            closed.get_str());
  }
  return closed;
}

BigRational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("malformed fraction: " + text);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    BigRational r(num, den);
    r.canonicalize();
    return r;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("malformed number: " + text);
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("malformed number: " + text);
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(s.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent: " + text);
    }
    if (pos + 1 + used != s.size()) throw std::invalid_argument("malformed exponent: " + text);
    scale += exponent;
  }
  BigRational r = BigRational(BigInt(digits)) * pow10_signed(scale);
  return negative ? BigRational(-r) : r;
}

BigRational exact_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return BigRational(x);
}

std::string to_fraction_string(const BigRational& x) { return x.get_str(); }

BigRational round_significant(const BigRational& x, int digits) {
  if (digits < 1) throw std::invalid_argument("round_significant: digits < 1");
  if (x == 0) return 0;
  const BigRational mag = abs(x);
  const long e = decimal_exponent(mag);
  const BigRational scale = pow10_signed(digits - 1 - e);
  const BigRational y = mag * scale;
  BigInt q = floor_of(y);
  const BigRational rem = y - BigRational(q);
  const BigRational half(1, 2);
  if (rem > half || (rem == half && mpz_odd_p(q.get_mpz_t()))) q += 1;
  BigRational r = BigRational(q) / scale;
  return x < 0 ? BigRational(-r) : r;
}

std::string to_scientific(const BigRational& x, int digits) {
  const BigRational r = round_significant(x, digits);
  std::string mantissa;
  long e = 0;
  if (r == 0) {
    mantissa.assign(static_cast<std::size_t>(digits), '0');
  } else {
    const BigRational mag = abs(r);
    e = decimal_exponent(mag);
    mantissa = floor_of(mag * pow10_signed(digits - 1 - e)).get_str();
  }
  std::ostringstream out;
  if (r < 0) out << '-';
  out << mantissa[0];
  if (digits > 1) out << '.' << mantissa.substr(1);
  out << 'e' << (e < 0 ? '-' : '+');
  const long ae = std::labs(e);
  if (ae < 10) out << '0';
  out << ae;
  return out.str();
}

mp_bitcnt_t float_precision_bits() {
  // log2(10) < 3.33; a few guard bits on top.
  return static_cast<mp_bitcnt_t>(kFloatDigits * 10 / 3 + 16);
}

mpf_class to_float(const BigRational& x) {
  mpf_class f(0, float_precision_bits());
  f = x;
  return f;
}

GammaPolynomial::GammaPolynomial(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

GammaPolynomial GammaPolynomial::constant(const BigRational& c) {
  return GammaPolynomial(std::vector<BigRational>{c});
}

GammaPolynomial GammaPolynomial::monomial(const BigRational& c, std::size_t power) {
  std::vector<BigRational> v(power + 1, BigRational(0));
  v[power] = c;
  return GammaPolynomial(std::move(v));
}

void GammaPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational GammaPolynomial::coefficient(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : BigRational(0);
}

BigRational GammaPolynomial::evaluate(const BigRational& gamma) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * gamma + *it;
  return acc;
}

mpf_class GammaPolynomial::evaluate(double gamma) const {
  return to_float(evaluate(exact_from_double(gamma)));
}

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

GammaPolynomial& GammaPolynomial::operator-=(const GammaPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

GammaPolynomial& GammaPolynomial::operator*=(const BigRational& scale) {
  if (scale == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GammaPolynomial(std::move(out));
}

GammaPolynomial GammaPolynomial::truncated(std::size_t max_order) const {
  if (max_order == kFullExpansion || coeffs_.size() <= max_order + 1) return *this;
  return GammaPolynomial(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_order) + 1));
}

GammaPolynomial GammaPolynomial::times_gamma(std::size_t max_order) const {
  if (is_zero()) return {};
  std::vector<BigRational> v;
  v.reserve(coeffs_.size() + 1);
  v.emplace_back(0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return GammaPolynomial(std::move(v)).truncated(max_order);
}

std::vector<std::string> GammaPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_fraction_string(c));
  return out;
}

GammaPolynomial GammaPolynomial::from_strings(const std::vector<std::string>& coefficients) {
  std::vector<BigRational> v;
  v.reserve(coefficients.size());
  for (const auto& s : coefficients) v.push_back(parse_rational(s));
  return GammaPolynomial(std::move(v));
}

GammaPolynomial one_minus_gamma_pow(std::uint64_t e, std::size_t max_order) {
  const std::uint64_t last = std::min<std::uint64_t>(e, max_order);
  std::vector<BigRational> v;
  v.reserve(last + 1);
  for (std::uint64_t j = 0; j <= last; ++j) {
    BigInt c = binomial(e, j);
    if (j % 2 == 1) c = -c;
    v.emplace_back(c);
  }
  return GammaPolynomial(std::move(v));
}

}  // namespace picode
