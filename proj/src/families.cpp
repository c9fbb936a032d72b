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

#include "relham/families.hpp"

#include <stdexcept>
#include <utility>

namespace relham {

std::vector<Poly> abns_sequence(int n, const Rational& N) {
  if (n < 0) throw std::invalid_argument("abns: negative degree");
  if (N.sign() <= 0) throw std::domain_error("abns: parameter N must be positive");
  std::vector<Poly> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  seq.push_back(Poly::constant(Rational(1)));
  const Poly lead = Poly::from_coefficients({Rational(1), Rational(0), Rational(1) / N});  // 1 + x^2/N
  for (int k = 0; k < n; ++k) {
    // F_{k+1} = -[(1 + x^2/N) F_k' - 2(1 + k/N) x F_k]
    const Rational slope = Rational(-2) - Rational(2L * k) / N;
    const Poly drift = Poly::from_coefficients({Rational(0), slope});
    seq.push_back(-(lead * seq.back().derivative() + drift * seq.back()));
  }
  return seq;
}

Poly abns(int n, const Rational& N) { return std::move(abns_sequence(n, N).back()); }

std::vector<Poly> gegenbauer_sequence(int n, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("gegenbauer: negative degree");
  std::vector<Poly> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  seq.push_back(Poly::constant(Rational(1)));
  if (n >= 1) seq.push_back(Poly::monomial(Rational(2) * alpha, 1));
  for (int k = 2; k <= n; ++k) {
    const Rational a = (Rational(2L * k - 2) + Rational(2) * alpha) / Rational(k);
    const Rational b = (Rational(k - 2) + Rational(2) * alpha) / Rational(k);
    seq.push_back(Poly::monomial(a, 1) * seq[static_cast<std::size_t>(k) - 1] - b * seq[static_cast<std::size_t>(k) - 2]);
  }
  return seq;
}

Poly gegenbauer(int n, const Rational& alpha) { return std::move(gegenbauer_sequence(n, alpha).back()); }

std::vector<Poly> hermite_sequence(int n) {
  if (n < 0) throw std::invalid_argument("hermite: negative degree");
  std::vector<Poly> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  seq.push_back(Poly::constant(Rational(1)));
  if (n >= 1) seq.push_back(Poly::monomial(Rational(2), 1));
  for (int k = 2; k <= n; ++k) {
    seq.push_back(Poly::monomial(Rational(2), 1) * seq[static_cast<std::size_t>(k) - 1] -
                  Rational(2L * (k - 1)) * seq[static_cast<std::size_t>(k) - 2]);
  }
  return seq;
}

Poly hermite(int n) { return std::move(hermite_sequence(n).back()); }

Poly unball(const Poly& p, int n) {
  if (n < 0) throw std::invalid_argument("unball: negative weight");
  if (!p.has_parity(n)) throw std::domain_error("unball: polynomial violates the claimed parity");
  if (p.degree() > n) throw std::domain_error("unball: degree exceeds the weight");

  // Powers of (1 + u^2) up to the largest exponent we will need.
  const Poly shell = Poly::from_coefficients({Rational(1), Rational(0), Rational(1)});
  std::vector<Poly> shell_pow{Poly::constant(Rational(1))};
  for (int m = 1; m <= n / 2; ++m) shell_pow.push_back(shell_pow.back() * shell);

  Poly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational a = p.coeff(k);
    if (a.is_zero()) continue;
    const int m = (n - k) / 2;
    out += Poly::monomial(a, k) * shell_pow[static_cast<std::size_t>(m)];
  }
  return out;
}

}  // namespace relham
