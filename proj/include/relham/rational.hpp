/*
   Copyright 2026 The relham authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace relham {

// Exact rational scalar.  Every value is kept normalized: the denominator is
// positive and coprime to the numerator, so equality is plain value equality
// and printing is canonical ("p/q", or "p" when the denominator is 1).
// All arithmetic is exact; nothing in this class ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, scalars mix freely
  Rational(long num, long den);

  // Strict "p/q" (or plain integer) parser.  Rejects decimals and anything
  // with a signed or zero denominator; use from_decimal for "0.25" / "1e-9".
  static Rational from_string(std::string_view text);

  // Accepts everything from_string does, plus decimal and scientific
  // literals, all converted exactly (1e-9 becomes 1/1000000000).
  static Rational from_decimal(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;            // throws std::domain_error on zero
  Rational pow(long exponent) const;   // negative exponents need a nonzero base

  // gcd(|num_a|, |num_b|) / lcm(den_a, den_b): combining this across all
  // coefficients of a polynomial yields its content, the positive scalar
  // whose removal leaves a primitive integer polynomial.
  static Rational content_gcd(const Rational& a, const Rational& b);

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// n! as an exact scalar; n must be >= 0.
Rational factorial(int n);

}  // namespace relham
