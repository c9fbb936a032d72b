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

#include "relham/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace relham {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  std::string_view s = trimmed(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  const auto slash = body.find('/');
  bool ok;
  if (slash == std::string_view::npos) {
    ok = all_digits(body);
  } else {
    std::string_view den = body.substr(slash + 1);
    ok = all_digits(body.substr(0, slash)) && all_digits(den) && den.find_first_not_of('0') != std::string_view::npos;
  }
  if (!ok) {
    throw std::invalid_argument("Rational: expected \"p/q\" or an integer, got \"" + std::string(text) + "\"");
  }
  mpq_class v(std::string(s), 10);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::from_decimal(std::string_view text) {
  std::string_view s = trimmed(text);
  if (s.find('/') != std::string_view::npos || s.find_first_of(".eE") == std::string_view::npos) {
    return from_string(s);
  }
  std::string_view rest = s;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  std::size_t i = 0;
  while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) digits.push_back(rest[i++]);
  if (i < rest.size() && rest[i] == '.') {
    ++i;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
      digits.push_back(rest[i++]);
      ++frac_len;
    }
  }
  long exp10 = 0;
  if (i < rest.size() && (rest[i] == 'e' || rest[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < rest.size() && (rest[i] == '+' || rest[i] == '-')) {
      exp_neg = rest[i] == '-';
      ++i;
    }
    if (i >= rest.size()) throw std::invalid_argument("Rational: malformed exponent in \"" + std::string(text) + "\"");
    long e = 0;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
      e = e * 10 + (rest[i++] - '0');
      if (e > 1000000) throw std::invalid_argument("Rational: exponent out of range");
    }
    exp10 = exp_neg ? -e : e;
  }
  if (i != rest.size() || digits.empty()) {
    throw std::invalid_argument("Rational: malformed decimal literal \"" + std::string(text) + "\"");
  }

  mpz_class num(digits.empty() ? "0" : digits, 10);
  if (negative) num = -num;
  mpz_class den(1);
  long scale = frac_len - exp10;  // value = num / 10^scale
  mpz_class tens;
  mpz_ui_pow_ui(tens.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0) {
    den = tens;
  } else {
    num *= tens;
  }
  mpq_class v(num, den);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  if (is_zero()) {
    if (exponent < 0) throw std::domain_error("Rational: negative power of zero");
    return Rational(0);
  }
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  mpq_class out = exponent > 0 ? mpq_class(num, den) : mpq_class(den, num);
  out.canonicalize();  // sign of a negative base must move back to the numerator
  return Rational(std::move(out));
}

Rational Rational::content_gcd(const Rational& a, const Rational& b) {
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
  mpq_class out(num, den);
  out.canonicalize();
  return Rational(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Rational f(1);
  for (long i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

}  // namespace relham
