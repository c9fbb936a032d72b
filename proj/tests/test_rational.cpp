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

#include "doctest.h"
#include "relham/rational.hpp"

using relham::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("from_string accepts p/q and integers only") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("0") == Rational(0));
  CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("3/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
}

TEST_CASE("from_decimal is exact") {
  CHECK(Rational::from_decimal("0.125") == Rational(1, 8));
  CHECK(Rational::from_decimal("1e-3") == Rational(1, 1000));
  CHECK(Rational::from_decimal("-2.5e2") == Rational(-250));
  CHECK(Rational::from_decimal("4") == Rational(4));
  // fraction syntax passes through
  CHECK(Rational::from_decimal("3/4") == Rational(3, 4));
  CHECK_THROWS_AS(Rational::from_decimal("one"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(5) - Rational(17, 3) == Rational(-2, 3));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  Rational a(3, 5);
  a += Rational(2, 5);
  CHECK(a == Rational(1));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5) > Rational(9, 2));
}

TEST_CASE("pow") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("queries and helpers") {
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(8, 4).is_integer());
  CHECK_FALSE(Rational(1, 3).is_integer());
  CHECK(Rational(2, 7).inverse() == Rational(7, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(Rational(-3, 2).to_double() == doctest::Approx(-1.5));
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("content_gcd combines numerators and denominators") {
  // gcd(|4/3|, |2/9|) = gcd(4,2)/lcm(3,9) = 2/9; both inputs are integer
  // multiples of the result.
  CHECK(Rational::content_gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
  CHECK(Rational::content_gcd(Rational(-6), Rational(4)) == Rational(2));
  CHECK((Rational(4, 3) / Rational(2, 9)).is_integer());
}

TEST_CASE("factorial") {
  CHECK(relham::factorial(0) == Rational(1));
  CHECK(relham::factorial(1) == Rational(1));
  CHECK(relham::factorial(5) == Rational(120));
  CHECK(relham::factorial(10) == Rational(3628800));
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    CHECK(a + (-a) == Rational(0));
    if (!b.is_zero()) {
      CHECK((a * b) / b == a);
    }
    CHECK(a * (b + Rational(1)) == a * b + a);
  }
}

TEST_SUITE_END();
