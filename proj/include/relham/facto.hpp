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

#include <functional>
#include <string>
#include <vector>

#include "relham/rational.hpp"

namespace relham::facto {

// Numeric reconstruction of first-order ladder operators for an
// equation family
//
//   P(x) y_s'' + Q(s, x) y_s' + R(s, x) y_s = 0,
//
// where s indexes the family.  Out of P, Q, R alone the engine builds the
// coefficient functions of a raising/lowering pair
//
//   A_s^+      = f_s^+ d/dx      + g_s^+
//   A_{s+1}^-  = f_{s+1}^- d/dx  + g_{s+1}^-
//
// together with the constant k_s such that A^- A^+ y_s = k_s y_s.  This
// layer is deliberately floating-point: it is the measurement instrument
// that the exact identity layer is checked against, and vice versa.

struct FamilySpec {
  std::function<double(double)> p;                  // P(x)
  std::function<double(double, double)> q;          // Q(s, x)
  std::function<double(double, double)> r;          // R(s, x)
  std::function<double(double)> p_prime;            // optional analytic P'
  std::function<double(double, double)> y;          // optional solution y_s(x)
  std::function<double(double, double)> dy;         // optional y_s'(x)
  double domain_lo = -1e300;
  double domain_hi = 1e300;
  double base_point = 0.0;  // integrals are anchored here
  std::string variable = "x";
};

struct EngineOptions {
  double quad_tol = 1e-10;       // absolute tolerance per integral
  long max_evaluations = 1000000;
  double fd_step_fraction = 1e-4;  // finite-difference step, relative to grid width
  bool fit_constant = true;        // see build_coefficients
};

// Ladder coefficients tabulated on a grid.  d-prefixed vectors hold x-
// derivatives.  k is the mean of the pointwise closure constant and
// k_deviation its worst spread; constant_shift records the integration
// constant chosen by the fit (0 when the anchored antiderivative already
// closes the system).
struct NumericLadder {
  double s = 0.0;
  std::vector<double> grid;
  std::vector<double> E;        // exp of half the integrated drift difference
  std::vector<double> W;
  std::vector<double> f_plus, df_plus;
  std::vector<double> f_minus, df_minus;
  std::vector<double> g_plus, dg_plus;
  std::vector<double> g_minus, dg_minus;
  double k = 0.0;
  double k_deviation = 0.0;
  double constant_shift = 0.0;
};

// Adaptive Simpson quadrature with an absolute tolerance.  Throws
// std::runtime_error naming the offending sub-interval once the evaluation
// budget is exhausted (the signature of a genuine singularity).
double integrate(const std::function<double(double)>& fn, double a, double b, double tol,
                 long max_evaluations = 1000000);

// Builds the ladder on the given ascending grid (which must lie inside the
// family domain, with P > 0 at every point).  The two antiderivatives are
// anchored at base_point with zero constants; because the closure condition
// forces the remaining free constant, the engine then fixes it by
// least-squares flattening of the pointwise k (disable via fit_constant to
// see the raw anchored solution).
NumericLadder build_coefficients(const FamilySpec& fam, double s, const std::vector<double>& grid,
                                 const EngineOptions& opts = {});

// Max-abs residuals of the sufficiency conditions relating (f, g, k) back
// to (P, Q, R): the product split P = f^+ f^-, the two first-order
// conditions recovering Q at s+1 ("next") and s ("curr"), and the two
// closure conditions recovering R + k.  product is relative (it involves
// no quadrature and must sit at rounding level); the others are absolute.
struct ConditionResiduals {
  double product = 0.0;
  double q_next = 0.0;
  double q_curr = 0.0;
  double r_next = 0.0;
  double r_curr = 0.0;
};
ConditionResiduals check_conditions(const FamilySpec& fam, const NumericLadder& ladder, double s);

struct KEstimate {
  double k = 0.0;
  double max_deviation = 0.0;
};
// Pointwise closure constant, averaged over the grid.
KEstimate estimate_k(const FamilySpec& fam, const NumericLadder& ladder, double s);

struct REstimate {
  double r_plus = 0.0;
  double r_minus = 0.0;        // k / r_plus
  double max_deviation = 0.0;  // spread of the pointwise r_plus ratio
};
// Proportionality constant of A^+ y_s against y_{s+1}, using the family's
// solution evaluators; grid points where y_{s+1} is within 1e-6 of its
// grid maximum times zero are skipped, and running out of usable points
// throws std::runtime_error.
REstimate estimate_r(const FamilySpec& fam, const NumericLadder& ladder, double s);

// A ready-to-run configuration: the family, the index value s, the default
// grid, and how to translate grid abscissae for reporting.
struct PresetRun {
  FamilySpec family;
  double s = 0.0;
  std::vector<double> grid;
  std::function<double(double)> report_coord;  // engine variable -> report variable
  std::string report_label;
};

// Degree ladder of the ABNS family at fixed N: s is the degree n, the
// engine variable is the family's own x, and grids are specified in
// u = x / sqrt(N) (default u in [0.1, 2]).
PresetRun abns_degree_preset(int n, const Rational& N, int grid_points = 65, double lo = 0.1, double hi = 2.0);

// Parameter ladder of the Gegenbauer family at fixed degree n: s is alpha,
// grid in x (default [0.1, 0.9]).
PresetRun gegenbauer_param_preset(int n, const Rational& alpha, int grid_points = 65, double lo = 0.1,
                                  double hi = 0.9);

// Name-based registry used by the command-line tool.
std::vector<std::string> preset_names();
PresetRun make_preset(const std::string& name, int n, const Rational& param, int grid_points = 65);

}  // namespace relham::facto
