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

#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "relham/poly.hpp"

using relham::Poly;
using relham::Rational;

namespace {

// Random polynomial with small rational coefficients; optionally restricted
// to a single parity class.
Poly random_poly(std::mt19937& rng, int max_degree, int parity = -1) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    if (parity >= 0 && ((k ^ parity) & 1) != 0) {
      continue;
    }
    coeffs[static_cast<size_t>(k)] = Rational(num(rng), den(rng));
  }
  return Poly::from_coefficients(std::move(coeffs));
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("zero polynomial conventions") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeff(0) == Rational(0));
  CHECK(z.coeff(5) == Rational(0));
  CHECK_THROWS_AS(z.leading_coefficient(), std::logic_error);
  CHECK(Poly::constant(Rational(0)).is_zero());
  CHECK(z.str() == "0");
}

TEST_CASE("construction and trimming") {
  Poly p = Poly::from_coefficients({Rational(1), Rational(0), Rational(3), Rational(0)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(2) == Rational(3));
  CHECK(p.coeff(3) == Rational(0));
  CHECK(Poly::monomial(Rational(2), 3).degree() == 3);
  CHECK(Poly::variable().degree() == 1);
  CHECK(Poly::monomial(Rational(0), 4).is_zero());
}

TEST_CASE("exact evaluation") {
  // 6x^2 - 2 at 1/3 is 6/9 - 2 = -4/3
  Poly p = Poly::from_coefficients({Rational(-2), Rational(0), Rational(6)});
  CHECK(p(Rational(1, 3)) == Rational(-4, 3));
  CHECK(p(Rational(0)) == Rational(-2));
  CHECK(p.eval(0.5) == doctest::Approx(-0.5));
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937 rng(987654);
  for (int i = 0; i < 60; ++i) {
    Poly p = random_poly(rng, 7);
    Poly q = random_poly(rng, 7);
    Poly r = random_poly(rng, 7);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p - p).is_zero());
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    // evaluation is a ring homomorphism
    Rational x(3, 7);
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK((p + q)(x) == p(x) + q(x));
  }
}

TEST_CASE("derivative basics") {
  CHECK(Poly::constant(Rational(5)).derivative().is_zero());
  Poly p = Poly::from_coefficients({Rational(1), Rational(2), Rational(3)});  // 3x^2+2x+1
  CHECK(p.derivative() == Poly::from_coefficients({Rational(2), Rational(6)}));
}

TEST_CASE("parity detection") {
  Poly even = Poly::from_coefficients({Rational(1), Rational(0), Rational(-4)});
  Poly odd = Poly::from_coefficients({Rational(0), Rational(2), Rational(0), Rational(5)});
  Poly mixed = Poly::from_coefficients({Rational(1), Rational(1)});
  CHECK(even.has_parity(0));
  CHECK(even.has_parity(2));
  CHECK_FALSE(even.has_parity(1));
  CHECK(odd.has_parity(1));
  CHECK_FALSE(odd.has_parity(0));
  CHECK_FALSE(mixed.has_parity(0));
  CHECK_FALSE(mixed.has_parity(1));
  CHECK(Poly().has_parity(0));
  CHECK(Poly().has_parity(1));
}

TEST_CASE("scaled_compose clears square roots exactly") {
  // cases pinned from independent hand computation
  Poly p = Poly::from_coefficients({Rational(-2), Rational(0), Rational(6)});
  CHECK(p.scaled_compose(Rational(1, 2), 2) ==
        Poly::from_coefficients({Rational(-1), Rational(0), Rational(3, 2)}));
  CHECK(Poly::monomial(Rational(2), 1).scaled_compose(Rational(4), 1) == Poly::monomial(Rational(8), 1));
  CHECK(Poly::monomial(Rational(1), 2).scaled_compose(Rational(9), 2) == Poly::monomial(Rational(81), 2));
}

TEST_CASE("scaled_compose equals direct substitution for perfect squares") {
  // With c = d^2 the definition collapses to d^parity * p(d x), which can be
  // computed without any square-root bookkeeping at all.
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> dnum(1, 4);
  std::uniform_int_distribution<long> dden(1, 3);
  std::uniform_int_distribution<int> par(0, 1);
  for (int i = 0; i < 40; ++i) {
    int parity = par(rng);
    Poly p = random_poly(rng, 6, parity);
    if (p.is_zero()) {
      continue;
    }
    Rational d(dnum(rng), dden(rng));
    Rational c = d * d;
    std::vector<Rational> scaled;
    for (int k = 0; k <= p.degree(); ++k) {
      scaled.push_back(p.coeff(k) * d.pow(k));
    }
    Poly direct = Poly::from_coefficients(std::move(scaled)) * d.pow(parity);
    CHECK(p.scaled_compose(c, parity) == direct);
  }
}

TEST_CASE("scaled_compose rejects bad inputs") {
  Poly mixed = Poly::from_coefficients({Rational(1), Rational(1)});
  CHECK_THROWS_AS(mixed.scaled_compose(Rational(2), 0), std::domain_error);
  Poly even = Poly::from_coefficients({Rational(1), Rational(0), Rational(1)});
  CHECK_THROWS_AS(even.scaled_compose(Rational(2), 1), std::domain_error);
  CHECK_THROWS_AS(even.scaled_compose(Rational(0), 0), std::domain_error);
  CHECK_THROWS_AS(even.scaled_compose(Rational(-1), 0), std::domain_error);
  CHECK_THROWS_AS(even.scaled_compose(Rational(2), -2), std::invalid_argument);
}

TEST_CASE("printer") {
  Poly p = Poly::from_coefficients({Rational(1, 2), Rational(0), Rational(-3), Rational(1)});
  CHECK(p.str() == "x^3 - 3*x^2 + 1/2");
  CHECK(p.str("u") == "u^3 - 3*u^2 + 1/2");
  CHECK(Poly::monomial(Rational(-1), 1).str() == "-x");
}

TEST_CASE("max_coefficient_norm") {
  CHECK(relham::max_coefficient_norm(Poly()) == Rational(0));
  Poly p = Poly::from_coefficients({Rational(1, 2), Rational(-7, 3), Rational(2)});
  CHECK(relham::max_coefficient_norm(p) == Rational(7, 3));
}

TEST_SUITE_END();
