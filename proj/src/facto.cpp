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

#include "relham/facto.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "relham/families.hpp"
#include "relham/poly.hpp"

namespace relham::facto {

namespace {

struct QuadState {
  const std::function<double(double)>& fn;
  long remaining;
  double outer_a;
  double outer_b;
};

std::string interval_str(double a, double b) {
  std::ostringstream os;
  os << "[" << a << ", " << b << "]";
  return os.str();
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double quad_eval(QuadState& st, double x) {
  if (st.remaining <= 0) {
    throw std::runtime_error("quadrature budget exhausted near x = " + std::to_string(x) +
                             " while integrating over " + interval_str(st.outer_a, st.outer_b));
  }
  --st.remaining;
  return st.fn(x);
}

// min_depth forces initial subdivision so that integrands with symmetric
// cancellation over the top interval are not accepted untested.
double adapt(QuadState& st, double a, double b, double fa, double fm, double fb, double whole, double tol,
             int min_depth) {
  double m = 0.5 * (a + b);
  if (m <= a || m >= b) {
    return whole;  // interval reached floating-point resolution
  }
  if (st.remaining < 2) {
    throw std::runtime_error("quadrature budget exhausted on sub-interval " + interval_str(a, b) +
                             " of " + interval_str(st.outer_a, st.outer_b));
  }
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = quad_eval(st, lm);
  double frm = quad_eval(st, rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  double delta = left + right - whole;
  if (min_depth <= 0 && std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, min_depth - 1) +
         adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, min_depth - 1);
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> pts(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    pts[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return pts;
}

// Wraps an evaluator so that a removable singularity (0/0 at an interval
// endpoint, typically the anchor point) is stepped over instead of
// poisoning the quadrature with NaN.  A point where no nearby finite value
// exists is treated as a genuine singularity.
std::function<double(double)> guarded(std::function<double(double)> fn, std::string what) {
  return [fn = std::move(fn), what = std::move(what)](double x) {
    double v = fn(x);
    if (std::isfinite(v)) {
      return v;
    }
    double step = 1e-12 * std::max(1.0, std::fabs(x));
    for (double candidate : {x + step, x - step}) {
      double w = fn(candidate);
      if (std::isfinite(w)) {
        return w;
      }
    }
    throw std::runtime_error(what + " is not finite near x = " + std::to_string(x));
  };
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double max_abs_deviation(const std::vector<double>& v, double center) {
  double worst = 0.0;
  for (double x : v) {
    worst = std::max(worst, std::fabs(x - center));
  }
  return worst;
}

// Gegenbauer value by the three-term degree recurrence, valid for real
// parameter values (the ladder moves the parameter off the integers).
double gegenbauer_value(int n, double alpha, double x) {
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = 2.0 * alpha * x;
  for (int k = 2; k <= n; ++k) {
    double next = (2.0 * (static_cast<double>(k) - 1.0 + alpha) * x * curr -
                   (static_cast<double>(k) - 2.0 + 2.0 * alpha) * prev) /
                  static_cast<double>(k);
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace

double integrate(const std::function<double(double)>& fn, double a, double b, double tol,
                 long max_evaluations) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  if (a == b) {
    return 0.0;
  }
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  QuadState st{fn, max_evaluations, a, b};
  double fa = quad_eval(st, a);
  double fm = quad_eval(st, 0.5 * (a + b));
  double fb = quad_eval(st, b);
  double whole = simpson(a, b, fa, fm, fb);
  return sign * adapt(st, a, b, fa, fm, fb, whole, tol, 2);
}

NumericLadder build_coefficients(const FamilySpec& fam, double s, const std::vector<double>& grid,
                                 const EngineOptions& opts) {
  if (!fam.p || !fam.q || !fam.r) {
    throw std::invalid_argument("family must define p, q and r");
  }
  if (grid.size() < 2) {
    throw std::invalid_argument("coefficient grid needs at least two points");
  }
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) {
      throw std::invalid_argument("coefficient grid must be strictly ascending");
    }
  }
  if (grid.front() < fam.domain_lo || grid.back() > fam.domain_hi || fam.base_point < fam.domain_lo ||
      fam.base_point > fam.domain_hi) {
    throw std::domain_error("grid or anchor point outside the family domain");
  }
  for (double x : grid) {
    if (!(fam.p(x) > 0.0)) {
      throw std::domain_error("leading coefficient must be positive on the grid, fails at x = " +
                              std::to_string(x));
    }
  }

  const double span = grid.back() - grid.front();
  const double h = opts.fd_step_fraction * span;

  std::function<double(double)> pp = fam.p_prime;
  if (!pp) {
    pp = [p = fam.p, h](double x) {
      return (p(x - 2.0 * h) - 8.0 * p(x - h) + 8.0 * p(x + h) - p(x + 2.0 * h)) / (12.0 * h);
    };
  }

  auto e_int = guarded(
      [p = fam.p, q = fam.q, s](double x) { return (q(s + 1.0, x) - q(s, x)) / (2.0 * p(x)); },
      "drift integrand");
  auto w_fn = guarded(
      [p = fam.p, q = fam.q, pp, s](double x) {
        return (q(s + 1.0, x) + q(s, x) - pp(x)) / (2.0 * std::sqrt(p(x)));
      },
      "coefficient W");
  auto g_int = guarded(
      [p = fam.p, q = fam.q, r = fam.r, w_fn, s](double x) {
        double pv = p(x);
        double dq = q(s + 1.0, x) - q(s, x);
        double dr = r(s + 1.0, x) - r(s, x);
        return dr / std::sqrt(pv) - w_fn(x) * dq / (2.0 * pv);
      },
      "coupling integrand");

  const size_t m = grid.size();
  NumericLadder lad;
  lad.s = s;
  lad.grid = grid;
  lad.E.resize(m);
  lad.W.resize(m);
  lad.f_plus.resize(m);
  lad.df_plus.resize(m);
  lad.f_minus.resize(m);
  lad.df_minus.resize(m);
  lad.g_plus.resize(m);
  lad.dg_plus.resize(m);
  lad.g_minus.resize(m);
  lad.dg_minus.resize(m);
  std::vector<double> e_prime(m);

  for (size_t i = 0; i < m; ++i) {
    double x = grid[i];
    // Anchoring every point independently (rather than chaining neighbour
    // segments) keeps quadrature error per point at the tolerance instead
    // of accumulating across the grid.
    double log_e = integrate(e_int, fam.base_point, x, opts.quad_tol, opts.max_evaluations);
    double ig = integrate(g_int, fam.base_point, x, opts.quad_tol, opts.max_evaluations);
    double e = std::exp(log_e);
    double w = w_fn(x);

    double h_i = h;
    double room = std::min(x - fam.domain_lo, fam.domain_hi - x) / 2.001;
    if (room > 0.0 && room < h_i) {
      h_i = room;
    }
    double wp = (w_fn(x - 2.0 * h_i) - 8.0 * w_fn(x - h_i) + 8.0 * w_fn(x + h_i) - w_fn(x + 2.0 * h_i)) /
                (12.0 * h_i);

    double sq = std::sqrt(fam.p(x));
    double ppx = pp(x);
    double ep = e * e_int(x);  // d/dx exp(integral) with analytic integrand
    double ip = g_int(x);

    lad.E[i] = e;
    lad.W[i] = w;
    e_prime[i] = ep;
    lad.f_minus[i] = sq * e;
    lad.f_plus[i] = sq / e;
    lad.df_minus[i] = ppx * e / (2.0 * sq) + sq * ep;
    lad.df_plus[i] = ppx / (2.0 * sq * e) - sq * ep / (e * e);
    lad.g_minus[i] = e * (w + ig) / 2.0;
    lad.g_plus[i] = (w - ig) / (2.0 * e);
    lad.dg_minus[i] = ep * (w + ig) / 2.0 + e * (wp + ip) / 2.0;
    lad.dg_plus[i] = (wp - ip) / (2.0 * e) - (w - ig) * ep / (2.0 * e * e);
  }

  if (opts.fit_constant) {
    // The g-coefficients are defined only up to the integration constant C
    // of the coupling antiderivative: shifting it moves (g+, g-) along a
    // one-parameter gauge orbit.  The pointwise closure constant reads
    // k_i(C) = a_i + C b_i - C^2/4, so a least-squares flattening of k over
    // the grid fixes C; families whose anchored antiderivative already
    // closes the system get C ~ 0 and are left untouched.
    std::vector<double> a(m);
    std::vector<double> b(m);
    for (size_t i = 0; i < m; ++i) {
      a[i] = lad.f_plus[i] * lad.dg_minus[i] + lad.g_plus[i] * lad.g_minus[i] - fam.r(s + 1.0, grid[i]);
      b[i] = lad.f_plus[i] * e_prime[i] / 2.0 +
             (lad.g_plus[i] * lad.E[i] - lad.g_minus[i] / lad.E[i]) / 2.0;
    }
    double a_mean = mean_of(a);
    double b_mean = mean_of(b);
    double cov = 0.0;
    double var = 0.0;
    double b_scale = 0.0;
    for (size_t i = 0; i < m; ++i) {
      cov += (a[i] - a_mean) * (b[i] - b_mean);
      var += (b[i] - b_mean) * (b[i] - b_mean);
      b_scale += b[i] * b[i];
    }
    double c = 0.0;
    if (var > 1e-20 * std::max(b_scale, 1e-300)) {
      c = -cov / var;
    }
    if (c != 0.0) {
      for (size_t i = 0; i < m; ++i) {
        lad.g_minus[i] += lad.E[i] * c / 2.0;
        lad.g_plus[i] -= c / (2.0 * lad.E[i]);
        lad.dg_minus[i] += e_prime[i] * c / 2.0;
        lad.dg_plus[i] += c * e_prime[i] / (2.0 * lad.E[i] * lad.E[i]);
      }
    }
    lad.constant_shift = c;
  }

  std::vector<double> kv(m);
  for (size_t i = 0; i < m; ++i) {
    kv[i] = lad.f_plus[i] * lad.dg_minus[i] + lad.g_plus[i] * lad.g_minus[i] - fam.r(s + 1.0, grid[i]);
  }
  lad.k = mean_of(kv);
  lad.k_deviation = max_abs_deviation(kv, lad.k);
  return lad;
}

ConditionResiduals check_conditions(const FamilySpec& fam, const NumericLadder& ladder, double s) {
  ConditionResiduals res;
  for (size_t i = 0; i < ladder.grid.size(); ++i) {
    double x = ladder.grid[i];
    double pv = fam.p(x);
    double fp = ladder.f_plus[i];
    double fm = ladder.f_minus[i];
    double gp = ladder.g_plus[i];
    double gm = ladder.g_minus[i];
    double cross = fp * gm + fm * gp;
    res.product = std::max(res.product, std::fabs(fp * fm - pv) / std::max(std::fabs(pv), 1e-300));
    res.q_next = std::max(res.q_next, std::fabs(fp * ladder.df_minus[i] + cross - fam.q(s + 1.0, x)));
    res.q_curr = std::max(res.q_curr, std::fabs(fm * ladder.df_plus[i] + cross - fam.q(s, x)));
    res.r_next = std::max(res.r_next,
                          std::fabs(fp * ladder.dg_minus[i] + gp * gm - fam.r(s + 1.0, x) - ladder.k));
    res.r_curr = std::max(res.r_curr,
                          std::fabs(fm * ladder.dg_plus[i] + gp * gm - fam.r(s, x) - ladder.k));
  }
  return res;
}

KEstimate estimate_k(const FamilySpec& fam, const NumericLadder& ladder, double s) {
  std::vector<double> kv(ladder.grid.size());
  for (size_t i = 0; i < ladder.grid.size(); ++i) {
    kv[i] = ladder.f_plus[i] * ladder.dg_minus[i] + ladder.g_plus[i] * ladder.g_minus[i] -
            fam.r(s + 1.0, ladder.grid[i]);
  }
  KEstimate est;
  est.k = mean_of(kv);
  est.max_deviation = max_abs_deviation(kv, est.k);
  return est;
}

REstimate estimate_r(const FamilySpec& fam, const NumericLadder& ladder, double s) {
  if (!fam.y || !fam.dy) {
    throw std::runtime_error("family provides no solution evaluators, cannot estimate proportionality");
  }
  const size_t m = ladder.grid.size();
  std::vector<double> next(m);
  double next_scale = 0.0;
  for (size_t i = 0; i < m; ++i) {
    next[i] = fam.y(s + 1.0, ladder.grid[i]);
    next_scale = std::max(next_scale, std::fabs(next[i]));
  }
  std::vector<double> ratios;
  ratios.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    if (std::fabs(next[i]) <= 1e-6 * next_scale) {
      continue;  // too close to a zero of the lifted solution
    }
    double raised = ladder.f_plus[i] * fam.dy(s, ladder.grid[i]) + ladder.g_plus[i] * fam.y(s, ladder.grid[i]);
    ratios.push_back(raised / next[i]);
  }
  if (ratios.empty()) {
    throw std::runtime_error("no usable grid points for proportionality estimation");
  }
  REstimate est;
  est.r_plus = mean_of(ratios);
  est.max_deviation = max_abs_deviation(ratios, est.r_plus);
  if (std::fabs(est.r_plus) < 1e-300) {
    throw std::runtime_error("raising proportionality vanishes on this grid");
  }
  est.r_minus = ladder.k / est.r_plus;
  return est;
}

PresetRun abns_degree_preset(int n, const Rational& N, int grid_points, double lo, double hi) {
  if (n < 0) {
    throw std::invalid_argument("degree must be non-negative");
  }
  if (!(N > Rational(0))) {
    throw std::domain_error("family parameter N must be positive");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("need at least two grid points");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("grid interval must be ascending");
  }
  double nd = N.to_double();
  double root_n = std::sqrt(nd);

  auto seq = abns_sequence(n + 1, N);
  std::vector<Poly> dseq;
  dseq.reserve(seq.size());
  for (const auto& p : seq) {
    dseq.push_back(p.derivative());
  }

  PresetRun run;
  run.family.p = [nd](double x) { return 1.0 + x * x / nd; };
  run.family.p_prime = [nd](double x) { return 2.0 * x / nd; };
  run.family.q = [nd](double s, double x) { return -2.0 * (nd + s - 1.0) * x / nd; };
  run.family.r = [nd](double s, double) { return s * (2.0 * nd + s - 1.0) / nd; };
  run.family.y = [seq](double s, double x) {
    auto i = static_cast<size_t>(std::lround(s));
    if (i >= seq.size()) {
      throw std::domain_error("degree outside the tabulated family");
    }
    return seq[i].eval(x);
  };
  run.family.dy = [dseq](double s, double x) {
    auto i = static_cast<size_t>(std::lround(s));
    if (i >= dseq.size()) {
      throw std::domain_error("degree outside the tabulated family");
    }
    return dseq[i].eval(x);
  };
  run.family.base_point = 0.0;
  run.family.variable = "xi";
  run.s = static_cast<double>(n);
  run.grid = linspace(root_n * lo, root_n * hi, grid_points);
  run.report_coord = [root_n](double x) { return x / root_n; };
  run.report_label = "u";
  return run;
}

PresetRun gegenbauer_param_preset(int n, const Rational& alpha, int grid_points, double lo, double hi) {
  if (n < 0) {
    throw std::invalid_argument("degree must be non-negative");
  }
  if (!(alpha > Rational(0))) {
    throw std::domain_error("family parameter alpha must be positive");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("need at least two grid points");
  }
  if (!(0.0 < lo && lo < hi && hi < 1.0)) {
    throw std::invalid_argument("grid interval must sit strictly inside (0, 1)");
  }
  double nd = static_cast<double>(n);

  PresetRun run;
  run.family.p = [](double x) { return x * x * (1.0 - x * x); };
  run.family.p_prime = [](double x) { return 2.0 * x - 4.0 * x * x * x; };
  run.family.q = [](double s, double x) { return -(2.0 * s + 1.0) * x * x * x; };
  run.family.r = [nd](double s, double x) { return nd * (2.0 * s + nd) * x * x; };
  run.family.y = [n](double s, double x) { return gegenbauer_value(n, s, x); };
  run.family.dy = [n](double s, double x) {
    return n == 0 ? 0.0 : 2.0 * s * gegenbauer_value(n - 1, s + 1.0, x);
  };
  run.family.domain_lo = 0.0;
  run.family.domain_hi = 1.0;
  run.family.base_point = 0.0;
  run.family.variable = "x";
  run.s = alpha.to_double();
  run.grid = linspace(lo, hi, grid_points);
  run.report_coord = [](double x) { return x; };
  run.report_label = "x";
  return run;
}

std::vector<std::string> preset_names() { return {"abns-degree", "gegenbauer-param"}; }

PresetRun make_preset(const std::string& name, int n, const Rational& param, int grid_points) {
  if (name == "abns-degree") {
    return abns_degree_preset(n, param, grid_points);
  }
  if (name == "gegenbauer-param") {
    return gegenbauer_param_preset(n, param, grid_points);
  }
  throw std::invalid_argument("unknown preset '" + name + "' (available: abns-degree, gegenbauer-param)");
}

}  // namespace relham::facto
