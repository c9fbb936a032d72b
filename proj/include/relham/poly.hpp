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

#include <string>
#include <string_view>
#include <vector>

#include "relham/rational.hpp"

namespace relham {

// Dense univariate polynomial over Rational.  Entry k of the coefficient
// vector is the coefficient of x^k.  Trailing zero coefficients are always
// trimmed, so the zero polynomial has exactly one representation (an empty
// vector) and operator== is honest value equality.
class Poly {
 public:
  Poly() = default;

  static Poly constant(Rational c);
  static Poly variable() { return monomial(Rational(1), 1); }
  static Poly monomial(Rational c, int power);
  static Poly from_coefficients(std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int k) const;                                    // 0 beyond the degree
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading_coefficient() const;  // throws on the zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
  friend Poly operator*(const Rational& s, Poly p) { return p *= s; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;

  // Exact Horner evaluation.
  Rational operator()(const Rational& x) const;
  // Plain double Horner, for the numeric layers.
  double eval(double x) const;

  // True when every nonzero coefficient sits at an exponent k with
  // k == parity (mod 2).  The zero polynomial has every parity.
  bool has_parity(int parity) const;

  // For a polynomial of parity n, (sqrt(c))^n * p(sqrt(c) * x) is again a
  // polynomial with rational coefficients: term k picks up c^((n+k)/2), an
  // integer power because n+k is even.  This is how every shifted-argument
  // relation in the identity layer stays inside exact arithmetic -- each is
  // stated multiplied through by the minimal power of the square root that
  // clears irrationals, which is legitimate precisely because both sides
  // share the parity.  The caller supplies the parity (an accidental zero
  // coefficient must not silently change the scaling exponents); the claim
  // is validated here and violations throw std::domain_error.
  Poly scaled_compose(const Rational& c, int parity) const;

  // Human-readable rendering, highest power first ("6*x^2 - 2", "0").
  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Largest absolute coefficient; 0 for the zero polynomial.
Rational max_coefficient_norm(const Poly& p);

}  // namespace relham
