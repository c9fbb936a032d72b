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

#include "relham/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace relham {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(Rational c, int power) {
  if (power < 0) throw std::invalid_argument("Poly: negative monomial power");
  Poly p;
  if (!c.is_zero()) {
    p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

Poly Poly::from_coefficients(std::vector<Rational> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational Poly::leading_coefficient() const {
  if (c_.empty()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly::from_coefficients(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> out;
  out.reserve(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(Rational(static_cast<long>(k)) * c_[k]);
  return Poly::from_coefficients(std::move(out));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= x;
    acc += c_[k];
  }
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].to_double();
  return acc;
}

bool Poly::has_parity(int parity) const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero() && (static_cast<int>(k) - parity) % 2 != 0) return false;
  }
  return true;
}

Poly Poly::scaled_compose(const Rational& c, int parity) const {
  if (parity < 0) throw std::invalid_argument("scaled_compose: parity must be >= 0");
  if (c.sign() <= 0) throw std::domain_error("scaled_compose: scale must be positive");
  if (!has_parity(parity)) {
    throw std::domain_error("scaled_compose: polynomial violates the claimed parity " + std::to_string(parity));
  }
  std::vector<Rational> out(c_.size(), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const long e = (parity + static_cast<long>(k)) / 2;
    out[k] = c_[k] * c.pow(e);
  }
  return Poly::from_coefficients(std::move(out));
}

std::string Poly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    const Rational mag = a.abs();
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Rational max_coefficient_norm(const Poly& p) {
  Rational m(0);
  for (const auto& c : p.coefficients()) {
    Rational a = c.abs();
    if (a > m) m = a;
  }
  return m;
}

}  // namespace relham
