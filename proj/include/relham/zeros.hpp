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

#include <utility>
#include <vector>

#include "relham/poly.hpp"

namespace relham {

// One real root, bracketed exactly: lo <= root <= hi with rational
// endpoints.  lo == hi means the root itself is rational and was hit
// exactly.  Intervals in a RootList are pairwise disjoint and sorted.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) * Rational(1, 2); }
};

using RootList = std::vector<RootInterval>;

// Sturm-sequence isolation of every distinct real root of p.  The
// squarefree part is taken internally, so repeated roots are reported
// once.  Intervals are isolating but not yet narrow; refine with
// refine_roots.  Throws std::invalid_argument on the zero polynomial.
RootList isolate_roots(const Poly& p);

// Shrinks every interval to width <= tol by exact bisection (tol > 0).
void refine_roots(const Poly& p, RootList& roots, const Rational& tol);

// Rational enclosure of sqrt(value): lo^2 <= value <= hi^2, hi - lo <= tol.
std::pair<Rational, Rational> sqrt_enclosure(const Rational& value, const Rational& tol);

// All n real zeros of the degree-n ABNS function, each bracketed to width
// <= tol.  Finding any other number of real roots would contradict the
// theory, so a count mismatch throws std::runtime_error instead of
// returning a best effort.
RootList abns_zeros(int n, const Rational& N, const Rational& tol);

// Zeros of F_n^N obtained the other way around: isolate the zeros t of
// C_n^N inside (-1, 1) and push them through x = sqrt(N) t / sqrt(1 - t^2).
// The map is monotone and the image endpoints are enclosed by rational
// square-root brackets, so the result is again a list of exact enclosures
// of width <= tol.  A Gegenbauer zero with |t| >= 1 would break the map
// and throws std::runtime_error.
RootList mapped_gegenbauer_zeros(int n, const Rational& N, const Rational& tol);

}  // namespace relham
