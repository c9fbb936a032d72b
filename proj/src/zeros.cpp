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

#include "relham/zeros.hpp"

#include <algorithm>
#include <stdexcept>

#include "relham/families.hpp"

namespace relham {

namespace {

// Remainder of a modulo b over the rationals (plain long division).
Poly poly_rem(Poly a, const Poly& b) {
  const int db = b.degree();
  const Rational lead_inv = b.leading_coefficient().inverse();
  while (!a.is_zero() && a.degree() >= db) {
    const Rational q = a.leading_coefficient() * lead_inv;
    a -= Poly::monomial(q, a.degree() - db) * b;
  }
  return a;
}

// Divide out the positive content so coefficients stay small along the
// Sturm chain.  Scaling by a positive constant changes no signs, which is
// all the chain cares about.
Poly primitive_scale(const Poly& p) {
  if (p.is_zero()) return p;
  Rational content(0);
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    content = content.is_zero() ? c.abs() : Rational::content_gcd(content, c);
  }
  Poly out = p;
  out *= content.inverse();
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = primitive_scale(r);
  }
  return a;
}

// Exact quotient for the known-divisible case (squarefree part).
Poly poly_quotient(Poly a, const Poly& b) {
  const int db = b.degree();
  const Rational lead_inv = b.leading_coefficient().inverse();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  while (!a.is_zero() && a.degree() >= db) {
    const Rational c = a.leading_coefficient() * lead_inv;
    const int k = a.degree() - db;
    q[static_cast<std::size_t>(k)] = c;
    a -= Poly::monomial(c, k) * b;
  }
  if (!a.is_zero()) throw std::logic_error("poly_quotient: inexact division");
  return Poly::from_coefficients(std::move(q));
}

Poly squarefree_part(const Poly& p) {
  const Poly d = p.derivative();
  if (d.is_zero()) return p;  // constants (degree-0 inputs)
  const Poly g = poly_gcd(p, d);
  if (g.degree() == 0) return p;
  return poly_quotient(p, g);
}

struct SturmChain {
  std::vector<Poly> elems;

  int variations(const Rational& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& q : elems) {
      const int s = q(x).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  // Number of distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
};

SturmChain build_chain(const Poly& squarefree) {
  SturmChain chain;
  chain.elems.push_back(primitive_scale(squarefree));
  chain.elems.push_back(primitive_scale(squarefree.derivative()));
  while (!chain.elems.back().is_zero() && chain.elems.back().degree() > 0) {
    Poly r = poly_rem(chain.elems[chain.elems.size() - 2], chain.elems.back());
    if (r.is_zero()) break;
    chain.elems.push_back(primitive_scale(-r));
  }
  return chain;
}

Rational cauchy_bound(const Poly& p) {
  const Rational lead = p.leading_coefficient().abs();
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    const Rational a = p.coeff(k).abs() / lead;
    if (a > m) m = a;
  }
  return m + Rational(1);
}

void isolate_recursive(const SturmChain& chain, const Rational& lo, const Rational& hi, int roots_inside,
                       RootList& out) {
  if (roots_inside <= 0) return;
  const Rational mid = (lo + hi) * Rational(1, 2);
  if (roots_inside == 1) {
    if (chain.elems.front()(hi).is_zero()) {
      out.push_back({hi, hi});
      return;
    }
    // Shrink a little so later bisection starts from a reasonable bracket.
    const int left = chain.count(lo, mid);
    if (left == 1) {
      isolate_recursive(chain, lo, mid, 1, out);
    } else if (chain.elems.front()(mid).is_zero()) {
      out.push_back({mid, mid});
    } else {
      out.push_back({mid, hi});
    }
    return;
  }
  const int left = chain.count(lo, mid);
  isolate_recursive(chain, lo, mid, left, out);
  isolate_recursive(chain, mid, hi, roots_inside - left, out);
}

// Exactly one root of q lies in (lo, hi]; narrow the bracket to tol.
RootInterval bisect_root(const Poly& q, Rational lo, Rational hi, const Rational& tol) {
  const int sign_hi = q(hi).sign();
  if (sign_hi == 0) return {hi, hi};
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) * Rational(1, 2);
    const int s = q(mid).sign();
    if (s == 0) return {mid, mid};
    if (s == sign_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace

RootList isolate_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  const Poly q = primitive_scale(squarefree_part(p));
  if (q.degree() <= 0) return {};
  const SturmChain chain = build_chain(q);
  const Rational bound = cauchy_bound(q);
  RootList out;
  isolate_recursive(chain, -bound, bound, chain.count(-bound, bound), out);
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

void refine_roots(const Poly& p, RootList& roots, const Rational& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("refine_roots: tolerance must be positive");
  const Poly q = primitive_scale(squarefree_part(p));
  for (auto& r : roots) {
    if (r.exact() || r.width() <= tol) continue;
    r = bisect_root(q, r.lo, r.hi, tol);
  }
}

std::pair<Rational, Rational> sqrt_enclosure(const Rational& value, const Rational& tol) {
  if (value.sign() < 0) throw std::domain_error("sqrt_enclosure: negative argument");
  if (tol.sign() <= 0) throw std::invalid_argument("sqrt_enclosure: tolerance must be positive");
  if (value.is_zero()) return {Rational(0), Rational(0)};
  Rational lo(0);
  Rational hi = value < Rational(1) ? Rational(1) : value;
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) * Rational(1, 2);
    if (mid * mid <= value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RootList abns_zeros(int n, const Rational& N, const Rational& tol) {
  const Poly f = abns(n, N);
  if (n == 0) return {};
  RootList roots = isolate_roots(f);
  if (static_cast<int>(roots.size()) != n) {
    throw std::runtime_error("abns_zeros: found " + std::to_string(roots.size()) + " real roots for degree " +
                             std::to_string(n) + "; this contradicts the theory");
  }
  refine_roots(f, roots, tol);
  return roots;
}

namespace {

// Signed enclosure of sqrt(N) t / sqrt(1 - t^2) for rational t in (-1, 1).
std::pair<Rational, Rational> mapped_point(const Rational& t, const Rational& N, const Rational& tol) {
  const Rational one(1);
  const Rational sq = N * t * t / (one - t * t);
  auto [lo, hi] = sqrt_enclosure(sq, tol);
  if (t.sign() < 0) return {-hi, -lo};
  return {lo, hi};
}

}  // namespace

RootList mapped_gegenbauer_zeros(int n, const Rational& N, const Rational& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("mapped_gegenbauer_zeros: tolerance must be positive");
  const Poly c = gegenbauer(n, N);
  if (n == 0) return {};
  RootList troots = isolate_roots(c);
  if (static_cast<int>(troots.size()) != n) {
    throw std::runtime_error("mapped_gegenbauer_zeros: found " + std::to_string(troots.size()) +
                             " real roots for degree " + std::to_string(n));
  }
  refine_roots(c, troots, tol);

  const Rational one(1);
  RootList out;
  out.reserve(troots.size());
  for (auto& t : troots) {
    Rational target = tol;
    while (true) {
      if (t.lo <= -one || t.hi >= one) {
        // With the enclosure already far tighter than the gap to +-1 this
        // can only mean an out-of-range zero, which the map cannot take.
        if (t.exact() || t.width() < Rational(1, 1000000000000L)) {
          throw std::runtime_error("mapped_gegenbauer_zeros: zero with |t| >= 1, map undefined");
        }
        target = target * Rational(1, 2);
        refine_roots(c, troots, target);  // tighten everything still loose
        continue;
      }
      const auto lo_pair = mapped_point(t.lo, N, target * Rational(1, 4));
      const auto hi_pair = t.exact() ? lo_pair : mapped_point(t.hi, N, target * Rational(1, 4));
      const RootInterval mapped{lo_pair.first, hi_pair.second};
      if (mapped.width() <= tol) {
        out.push_back(mapped);
        break;
      }
      target = target * Rational(1, 2);
      RootList just_this{t};
      refine_roots(c, just_this, target);
      t = just_this.front();
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace relham
