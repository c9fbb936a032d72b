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

#include <vector>

#include "relham/poly.hpp"

namespace relham {

// The ABNS functions F_n^N: polynomial solutions of
//
//   (1 + x^2/N) y'' - (2/N)(N + n - 1) x y' + (n/N)(2N + n - 1) y = 0,
//
// built by repeated application of the first-order raising operator
//   (1 + x^2/N) d/dx - 2(1 + n/N) x
// starting from F_0 = 1 (each application also flips the sign).  F_n has
// exact degree n and parity n, and its leading coefficient tends to the
// Hermite value 2^n as N grows.  N may be any positive rational.
Poly abns(int n, const Rational& N);

// F_0 .. F_n in one pass; cheaper than n separate calls.
std::vector<Poly> abns_sequence(int n, const Rational& N);

// Gegenbauer polynomials C_n^alpha from the classical three-term recurrence
//   n C_n = 2 x (n + alpha - 1) C_{n-1} - (n + 2 alpha - 2) C_{n-2},
// C_0 = 1, C_1 = 2 alpha x.  Any rational alpha is accepted; the parameter
// ladder deliberately walks below zero, and the recurrence stays exact there.
Poly gegenbauer(int n, const Rational& alpha);
std::vector<Poly> gegenbauer_sequence(int n, const Rational& alpha);

// Physicists' Hermite polynomials, H_{n+1} = 2 x H_n - 2 n H_{n-1}.
Poly hermite(int n);
std::vector<Poly> hermite_sequence(int n);

// For p of parity n (and degree <= n), returns
//   sum_k  p_k u^k (1 + u^2)^((n-k)/2),
// a polynomial in u because every (n-k)/2 is a nonnegative integer.  This is
// the exact form taken by p(t) after substituting t = u / sqrt(1 + u^2) and
// clearing (1 + u^2)^(n/2); it is the Gegenbauer side of the bridge between
// the two families.
Poly unball(const Poly& p, int n);

}  // namespace relham
