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

#include <optional>
#include <string>

#include "relham/families.hpp"
#include "relham/poly.hpp"

namespace relham {

// Every relation in this header is checked as an *exact* statement: apply
// polynomial operators on both sides, subtract, and demand the canonical
// zero polynomial.  Relations that natively move the argument to
// sqrt(c) * x (the bridge to Gegenbauer and the parameter-shift pair) are
// stated multiplied through by the minimal power of sqrt(c) that clears
// irrationals, which Poly::scaled_compose realizes in rational arithmetic
// thanks to the shared parity of both sides.  A check never "approximately
// holds": the residual is returned so a failure is printable evidence.

// First-order linear differential operator f(x) d/dx + g(x).
struct LadderOp {
  Poly f;
  Poly g;
  Poly apply(const Poly& p) const { return f * p.derivative() + g * p; }
};

// Degree ladder for the ABNS family: raising is
//   (1 + x^2/N) d/dx - 2(1 + n/N) x        (applied to F_n, yields -F_{n+1})
// and lowering is the plain derivative, F_n' = [n(2N + n - 1)/N] F_{n-1}.
LadderOp abns_degree_raise(int n, const Rational& N);
LadderOp abns_degree_lower();

// Parameter ladder for Gegenbauer:
//   [x d/dx + (2a + n)] C_n^a                     = 2a C_n^{a+1}
//   [x(1 - x^2) d/dx - (2a + n - 1 - n x^2)] C_n^a
//       = -[(2a + n - 1)(2a + n - 2)/(2a - 2)] C_n^{a-1}      (a != 1)
LadderOp gegenbauer_param_raise(int n, const Rational& alpha);
LadderOp gegenbauer_param_lower(int n, const Rational& alpha);

// Parameter shift for the ABNS family (N -> N+1 and N -> N-1); the
// right-hand sides live at the shifted parameter with argument scaled by
// sqrt((N+-1)/N), handled via scaled_compose.
LadderOp abns_shift_raise(int n, const Rational& N);
LadderOp abns_shift_lower(int n, const Rational& N);

enum class Direction { Up, Down };

enum class IdentityId {
  DegreeUp,
  DegreeDown,
  ParamUp,
  ParamDown,
  Nagel,
  ShiftUp,
  ShiftDown,
  AbnsOde,
  GegenbauerOde,
  Composition,
  ShiftRoundTrip,
};

std::string identity_name(IdentityId id);

struct IdentityReport {
  IdentityId id;
  int n = 0;
  Rational param;  // N for ABNS relations, alpha for Gegenbauer ones
  std::optional<Direction> direction;
  Poly residual;
  bool holds = false;  // true iff residual is the canonical zero polynomial
};

// Raising (n -> n+1) or lowering (n -> n-1) along the degree.  With
// rescaled_pair the alternative normalization is exercised instead: the
// family generated by dividing each raise by -(n+1), whose members are
// F_n / n!, with lowering constant (2N + n - 1)/N.
IdentityReport degree_ladder_check(int n, const Rational& N, Direction dir, bool rescaled_pair = false);

// Gegenbauer parameter ladder; Down at alpha == 1 hits the excluded
// denominator and throws std::domain_error.
IdentityReport param_ladder_check(int n, const Rational& alpha, Direction dir);

// Nagel's relation bridging the two families, in square-root-free form:
//   scaled_compose(F_n^N, N, n) == n! * unball(C_n^N, n).
IdentityReport nagel_check(int n, const Rational& N);

// Parameter shift: Up relates F_n^N to F_n^{N+1}; Down (N > 1 only)
// relates F_n^N to F_n^{N-1}.
IdentityReport shift_check(int n, const Rational& N, Direction dir);

// Lower(raise(F_n)) = k_n F_n with k_n = -(n+1)(2N+n)/N, exactly.
IdentityReport composition_check(int n, const Rational& N);

// Shift up to N+1 and back down to N; the round trip multiplies F_n^N by
// the product of the two shift constants, -(2N+n+1)(2N+n), exactly.
IdentityReport shift_roundtrip_check(int n, const Rational& N);

enum class OdeFamily { Abns, Gegenbauer };

// Exact residual of the defining second-order equation: zero certifies a
// genuine family member independently of how it was generated.  For Abns,
// param is N; for Gegenbauer, param is alpha and the equation is the
// classical one multiplied through by x^2.
Poly ode_residual(const Poly& p, int n, const Rational& param, OdeFamily family);

}  // namespace relham
