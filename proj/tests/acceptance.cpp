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

// Release gate for the library: seven fixed criteria, each printed as a
// single PASS/FAIL line.  Exit status is 0 only when every criterion holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "relham/facto.hpp"
#include "relham/families.hpp"
#include "relham/identities.hpp"
#include "relham/poly.hpp"
#include "relham/rational.hpp"
#include "relham/zeros.hpp"

using namespace relham;
namespace facto = relham::facto;

namespace {

const std::vector<Rational> kNGrid = {Rational(1), Rational(3, 2), Rational(2),
                                      Rational(5), Rational(10),   Rational(137)};
const std::vector<Rational> kAlphaGrid = {Rational(1, 2), Rational(1), Rational(2), Rational(5),
                                          Rational(10)};

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  Criterion(int index, std::string label) : index_(index), label_(std::move(label)) {}

  void fail(const std::string& detail) {
    if (outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = detail;
    }
  }
  bool still_passing() const { return outcome_.pass; }

  bool finish(double elapsed_seconds = -1.0) {
    std::cout << "criterion " << index_ << ": " << (outcome_.pass ? "PASS" : "FAIL") << " - "
              << label_;
    if (!outcome_.pass) {
      std::cout << " (" << outcome_.detail << ")";
    } else if (elapsed_seconds >= 0.0) {
      std::cout << " [" << elapsed_seconds << " s]";
    }
    std::cout << "\n";
    return outcome_.pass;
  }

 private:
  int index_;
  std::string label_;
  Outcome outcome_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string where(const std::string& name, int n, const Rational& param) {
  return name + " at n=" + std::to_string(n) + ", param=" + param.str();
}

bool exact(const IdentityReport& rep) { return rep.holds && rep.residual.is_zero(); }

// ---------------------------------------------------------------------------

bool criterion_identities() {
  Criterion c(1, "ladder, bridge and shift identities hold exactly");
  auto start = std::chrono::steady_clock::now();
  for (const Rational& N : kNGrid) {
    for (int n = 0; n <= 30 && c.still_passing(); ++n) {
      if (!exact(degree_ladder_check(n, N, Direction::Up))) {
        c.fail(where("degree-up", n, N));
      }
      if (n >= 1 && !exact(degree_ladder_check(n, N, Direction::Down))) {
        c.fail(where("degree-down", n, N));
      }
      if (!exact(nagel_check(n, N))) {
        c.fail(where("nagel", n, N));
      }
      if (!exact(shift_check(n, N, Direction::Up))) {
        c.fail(where("shift-up", n, N));
      }
      if (N > Rational(1) && !exact(shift_check(n, N, Direction::Down))) {
        c.fail(where("shift-down", n, N));
      }
    }
  }
  for (const Rational& alpha : kAlphaGrid) {
    for (int n = 0; n <= 30 && c.still_passing(); ++n) {
      if (!exact(param_ladder_check(n, alpha, Direction::Up))) {
        c.fail(where("param-up", n, alpha));
      }
      if (alpha != Rational(1) && !exact(param_ladder_check(n, alpha, Direction::Down))) {
        c.fail(where("param-down", n, alpha));
      }
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 10.0) {
    c.fail("runtime " + std::to_string(elapsed) + " s exceeds the 10 s budget");
  }
  return c.finish(elapsed);
}

bool criterion_ode_certificates() {
  Criterion c(2, "differential-equation residuals vanish exactly");
  for (const Rational& N : kNGrid) {
    for (int n = 0; n <= 30 && c.still_passing(); ++n) {
      if (!ode_residual(abns(n, N), n, N, OdeFamily::Abns).is_zero()) {
        c.fail(where("abns ode", n, N));
      }
    }
  }
  for (const Rational& alpha : kAlphaGrid) {
    for (int n = 0; n <= 30 && c.still_passing(); ++n) {
      if (!ode_residual(gegenbauer(n, alpha), n, alpha, OdeFamily::Gegenbauer).is_zero()) {
        c.fail(where("gegenbauer ode", n, alpha));
      }
    }
  }
  return c.finish();
}

bool criterion_composition() {
  Criterion c(3, "lower-after-raise composition constant is exact");
  for (const Rational& N : kNGrid) {
    for (int n = 0; n <= 20 && c.still_passing(); ++n) {
      if (!exact(composition_check(n, N))) {
        c.fail(where("composition", n, N));
      }
    }
  }
  return c.finish();
}

bool criterion_engine_reproduction() {
  Criterion c(4, "numeric engine reproduces the closed-form coefficients");
  auto start = std::chrono::steady_clock::now();
  const std::vector<Rational> params = {Rational(1), Rational(2)};
  const double tol = 1e-6;

  for (int n = 0; n <= 2; ++n) {
    for (const Rational& N : params) {
      if (!c.still_passing()) {
        break;
      }
      facto::PresetRun run = facto::abns_degree_preset(n, N);
      facto::NumericLadder lad = facto::build_coefficients(run.family, run.s, run.grid);
      double coeff_err = 0.0;
      for (size_t i = 0; i < lad.grid.size(); ++i) {
        double xi = lad.grid[i];
        double u = run.report_coord(xi);
        coeff_err = std::max(coeff_err, std::fabs(lad.f_minus[i] - 1.0));
        coeff_err = std::max(coeff_err, std::fabs(lad.f_plus[i] - (1.0 + u * u)));
        coeff_err = std::max(coeff_err, std::fabs(lad.g_minus[i]));
        double g_plus_true = -2.0 * (1.0 + n / N.to_double()) * xi;
        coeff_err = std::max(coeff_err, std::fabs(lad.g_plus[i] - g_plus_true));
      }
      facto::ConditionResiduals res = facto::check_conditions(run.family, lad, run.s);
      double cond_err = std::max({res.q_next, res.q_curr, res.r_next, res.r_curr});
      if (coeff_err >= tol) {
        c.fail(where("abns coefficients, error " + std::to_string(coeff_err), n, N));
      } else if (lad.k_deviation >= tol) {
        c.fail(where("abns k constancy, deviation " + std::to_string(lad.k_deviation), n, N));
      } else if (cond_err >= tol) {
        c.fail(where("abns conditions, residual " + std::to_string(cond_err), n, N));
      }
    }
  }

  for (int n = 0; n <= 2; ++n) {
    for (const Rational& alpha : params) {
      if (!c.still_passing()) {
        break;
      }
      facto::PresetRun run = facto::gegenbauer_param_preset(n, alpha);
      facto::NumericLadder lad = facto::build_coefficients(run.family, run.s, run.grid);
      double coeff_err = 0.0;
      for (size_t i = 0; i < lad.grid.size(); ++i) {
        double x = lad.grid[i];
        coeff_err = std::max(coeff_err, std::fabs(lad.f_plus[i] - x));
        coeff_err = std::max(coeff_err, std::fabs(lad.f_minus[i] - x * (1.0 - x * x)));
      }
      facto::ConditionResiduals res = facto::check_conditions(run.family, lad, run.s);
      double cond_err = std::max({res.q_next, res.q_curr, res.r_next, res.r_curr});
      if (coeff_err >= tol) {
        c.fail(where("gegenbauer coefficients, error " + std::to_string(coeff_err), n, alpha));
      } else if (lad.k_deviation >= tol) {
        c.fail(where("gegenbauer k constancy, deviation " + std::to_string(lad.k_deviation), n, alpha));
      } else if (cond_err >= tol) {
        c.fail(where("gegenbauer conditions, residual " + std::to_string(cond_err), n, alpha));
      }
    }
  }

  double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    c.fail("runtime " + std::to_string(elapsed) + " s exceeds the 30 s budget");
  }
  return c.finish(elapsed);
}

bool criterion_r_recovery() {
  Criterion c(5, "normalization scalars recovered from the ground level");
  for (const Rational& N : {Rational(1), Rational(2)}) {
    if (!c.still_passing()) {
      break;
    }
    facto::PresetRun run = facto::abns_degree_preset(0, N);
    facto::NumericLadder lad = facto::build_coefficients(run.family, run.s, run.grid);
    facto::REstimate est = facto::estimate_r(run.family, lad, run.s);
    if (std::fabs(est.r_plus + 1.0) >= 1e-6) {
      c.fail("r_plus = " + std::to_string(est.r_plus) + " at N=" + N.str());
    } else if (std::fabs(est.r_minus - 2.0) >= 1e-6) {
      c.fail("r_minus = " + std::to_string(est.r_minus) + " at N=" + N.str());
    }
  }
  return c.finish();
}

bool criterion_hermite_limit() {
  Criterion c(6, "coefficient distance to the Hermite limit decays like 1/N");
  const std::vector<Rational> sweep = {Rational(100), Rational(1000), Rational(10000)};
  for (int n = 0; n <= 10 && c.still_passing(); ++n) {
    Poly h = hermite(n);
    std::vector<Rational> dist;
    dist.reserve(sweep.size());
    for (const Rational& N : sweep) {
      dist.push_back(max_coefficient_norm(abns(n, N) - h));
    }
    if (n <= 1) {
      // degrees 0 and 1 coincide with the limit for every N, so the
      // distance is identically zero and no decay ratio exists
      for (const Rational& d : dist) {
        if (!d.is_zero()) {
          c.fail("expected exact agreement at n=" + std::to_string(n));
        }
      }
      continue;
    }
    for (size_t i = 1; i < dist.size(); ++i) {
      if (!(dist[i] < dist[i - 1])) {
        c.fail("distance not decreasing at n=" + std::to_string(n));
        break;
      }
      // ratio of consecutive distances must sit in [5, 20]; compare
      // exactly as rationals
      if (dist[i - 1] < Rational(5) * dist[i] || dist[i - 1] > Rational(20) * dist[i]) {
        c.fail("decay ratio outside [5, 20] at n=" + std::to_string(n));
        break;
      }
    }
  }
  return c.finish();
}

bool criterion_zeros() {
  Criterion c(7, "exact root isolation and the mapped cross-check agree");
  const Rational tol(1, 1000000000);
  for (const Rational& N : {Rational(1), Rational(5), Rational(100)}) {
    for (int n = 0; n <= 20 && c.still_passing(); ++n) {
      RootList direct = abns_zeros(n, N, tol);
      if (direct.size() != static_cast<size_t>(n)) {
        c.fail(where("count " + std::to_string(direct.size()), n, N));
        continue;
      }
      for (const RootInterval& r : direct) {
        if (r.width() > tol) {
          c.fail(where("enclosure wider than tol", n, N));
        }
      }
      RootList mapped = mapped_gegenbauer_zeros(n, N, tol);
      if (mapped.size() != static_cast<size_t>(n)) {
        c.fail(where("mapped count " + std::to_string(mapped.size()), n, N));
        continue;
      }
      for (size_t i = 0; i < direct.size(); ++i) {
        if ((direct[i].mid() - mapped[i].mid()).abs() > Rational(2) * tol) {
          c.fail(where("mapped midpoint disagreement", n, N));
          break;
        }
      }
    }
  }
  if (c.still_passing()) {
    // the degree-2 member at N=1 is 6x^2 - 2, whose roots are +-1/sqrt(3);
    // verify containment exactly: lo^2 <= 1/3 <= hi^2 on the positive side
    RootList roots = abns_zeros(2, Rational(1), tol);
    const Rational third(1, 3);
    if (roots.size() != 2) {
      c.fail("degree-2 member at N=1 must have two roots");
    } else {
      const RootInterval& neg = roots[0];
      const RootInterval& pos = roots[1];
      if (!(pos.lo * pos.lo <= third && third <= pos.hi * pos.hi)) {
        c.fail("positive enclosure misses 1/sqrt(3)");
      }
      if (!(neg.hi * neg.hi <= third && third <= neg.lo * neg.lo)) {
        c.fail("negative enclosure misses -1/sqrt(3)");
      }
      if (pos.width() > tol || neg.width() > tol) {
        c.fail("degree-2 enclosures wider than tol");
      }
    }
  }
  return c.finish();
}

}  // namespace

int main() {
  int failures = 0;
  const std::vector<std::function<bool()>> criteria = {
      criterion_identities,   criterion_ode_certificates, criterion_composition,
      criterion_engine_reproduction, criterion_r_recovery, criterion_hermite_limit,
      criterion_zeros};
  for (size_t i = 0; i < criteria.size(); ++i) {
    try {
      if (!criteria[i]()) {
        ++failures;
      }
    } catch (const std::exception& ex) {
      std::cout << "criterion " << (i + 1) << ": FAIL - unexpected exception (" << ex.what()
                << ")\n";
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "all acceptance criteria satisfied\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
