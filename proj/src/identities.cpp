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

#include "relham/identities.hpp"

#include <stdexcept>

namespace relham {

namespace {

IdentityReport make_report(IdentityId id, int n, const Rational& param, std::optional<Direction> dir, Poly residual) {
  IdentityReport rep;
  rep.id = id;
  rep.n = n;
  rep.param = param;
  rep.direction = dir;
  rep.holds = residual.is_zero();
  rep.residual = std::move(residual);
  return rep;
}

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("identity check: negative degree");
}

void require_positive(const Rational& param, const char* what) {
  if (param.sign() <= 0) throw std::domain_error(std::string("identity check: ") + what + " must be positive");
}

// The alternative degree-ladder normalization: divide each raise by -(k+1)
// instead of -1.  The members are F_k / k!.
std::vector<Poly> abns_rescaled_sequence(int n, const Rational& N) {
  std::vector<Poly> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  seq.push_back(Poly::constant(Rational(1)));
  for (int k = 0; k < n; ++k) {
    Poly raised = abns_degree_raise(k, N).apply(seq.back());
    raised *= Rational(-1, k + 1);
    seq.push_back(std::move(raised));
  }
  return seq;
}

}  // namespace

LadderOp abns_degree_raise(int n, const Rational& N) {
  require_degree(n);
  require_positive(N, "N");
  LadderOp op;
  op.f = Poly::from_coefficients({Rational(1), Rational(0), Rational(1) / N});
  op.g = Poly::monomial(Rational(-2) - Rational(2L * n) / N, 1);
  return op;
}

LadderOp abns_degree_lower() {
  LadderOp op;
  op.f = Poly::constant(Rational(1));
  return op;
}

LadderOp gegenbauer_param_raise(int n, const Rational& alpha) {
  require_degree(n);
  LadderOp op;
  op.f = Poly::variable();
  op.g = Poly::constant(Rational(2) * alpha + Rational(n));
  return op;
}

LadderOp gegenbauer_param_lower(int n, const Rational& alpha) {
  require_degree(n);
  LadderOp op;
  op.f = Poly::from_coefficients({Rational(0), Rational(1), Rational(0), Rational(-1)});  // x(1 - x^2)
  op.g = Poly::from_coefficients({-(Rational(2) * alpha + Rational(n - 1)), Rational(0), Rational(n)});
  return op;
}

LadderOp abns_shift_raise(int n, const Rational& N) {
  require_degree(n);
  require_positive(N, "N");
  LadderOp op;
  op.f = Poly::from_coefficients({Rational(0), Rational(1), Rational(0), Rational(1) / N});  // x(1 + x^2/N)
  op.g = Poly::from_coefficients({Rational(2) * N + Rational(n), Rational(0), -(Rational(n) / N)});
  return op;
}

LadderOp abns_shift_lower(int n, const Rational& N) {
  require_degree(n);
  require_positive(N, "N");
  LadderOp op;
  op.f = Poly::variable();
  op.g = Poly::constant(-(Rational(2) * N + Rational(n - 1)));
  return op;
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::DegreeUp: return "degree-up";
    case IdentityId::DegreeDown: return "degree-down";
    case IdentityId::ParamUp: return "param-up";
    case IdentityId::ParamDown: return "param-down";
    case IdentityId::Nagel: return "nagel";
    case IdentityId::ShiftUp: return "shift-up";
    case IdentityId::ShiftDown: return "shift-down";
    case IdentityId::AbnsOde: return "ode-abns";
    case IdentityId::GegenbauerOde: return "ode-gegenbauer";
    case IdentityId::Composition: return "composition";
    case IdentityId::ShiftRoundTrip: return "shift-roundtrip";
  }
  return "unknown";
}

IdentityReport degree_ladder_check(int n, const Rational& N, Direction dir, bool rescaled_pair) {
  require_degree(n);
  require_positive(N, "N");
  if (dir == Direction::Down && n < 1) throw std::invalid_argument("degree-down: needs n >= 1");

  const int top = dir == Direction::Up ? n + 1 : n;
  const std::vector<Poly> seq = rescaled_pair ? abns_rescaled_sequence(top, N) : abns_sequence(top, N);

  Poly residual;
  if (dir == Direction::Up) {
    const Poly raised = abns_degree_raise(n, N).apply(seq[static_cast<std::size_t>(n)]);
    if (rescaled_pair) {
      residual = raised + Rational(n + 1) * seq[static_cast<std::size_t>(n) + 1];
    } else {
      residual = raised + seq[static_cast<std::size_t>(n) + 1];
    }
  } else {
    const Rational ratio = rescaled_pair ? (Rational(2) * N + Rational(n - 1)) / N
                                         : Rational(n) * (Rational(2) * N + Rational(n - 1)) / N;
    residual = seq[static_cast<std::size_t>(n)].derivative() - ratio * seq[static_cast<std::size_t>(n) - 1];
  }
  return make_report(dir == Direction::Up ? IdentityId::DegreeUp : IdentityId::DegreeDown, n, N, dir,
                     std::move(residual));
}

IdentityReport param_ladder_check(int n, const Rational& alpha, Direction dir) {
  require_degree(n);
  require_positive(alpha, "alpha");
  const Poly current = gegenbauer(n, alpha);
  Poly residual;
  if (dir == Direction::Up) {
    residual = gegenbauer_param_raise(n, alpha).apply(current) - Rational(2) * alpha * gegenbauer(n, alpha + Rational(1));
  } else {
    if (alpha == Rational(1)) throw std::domain_error("param-down: alpha = 1 hits the excluded denominator");
    const Rational two_a = Rational(2) * alpha;
    const Rational scale = (two_a + Rational(n - 1)) * (two_a + Rational(n - 2)) / (two_a - Rational(2));
    residual = gegenbauer_param_lower(n, alpha).apply(current) + scale * gegenbauer(n, alpha - Rational(1));
  }
  return make_report(dir == Direction::Up ? IdentityId::ParamUp : IdentityId::ParamDown, n, alpha, dir,
                     std::move(residual));
}

IdentityReport nagel_check(int n, const Rational& N) {
  require_degree(n);
  require_positive(N, "N");
  Poly residual = abns(n, N).scaled_compose(N, n) - factorial(n) * unball(gegenbauer(n, N), n);
  return make_report(IdentityId::Nagel, n, N, std::nullopt, std::move(residual));
}

IdentityReport shift_check(int n, const Rational& N, Direction dir) {
  require_degree(n);
  require_positive(N, "N");
  const Poly current = abns(n, N);
  Poly residual;
  if (dir == Direction::Up) {
    const Poly shifted = abns(n, N + Rational(1)).scaled_compose((N + Rational(1)) / N, n);
    residual = abns_shift_raise(n, N).apply(current) - Rational(2) * N * shifted;
  } else {
    if (N <= Rational(1)) throw std::domain_error("shift-down: needs N > 1");
    const Rational two_n = Rational(2) * N;
    const Rational scale = (two_n + Rational(n - 1)) * (two_n + Rational(n - 2)) / (two_n - Rational(2));
    const Poly shifted = abns(n, N - Rational(1)).scaled_compose((N - Rational(1)) / N, n);
    residual = abns_shift_lower(n, N).apply(current) + scale * shifted;
  }
  return make_report(dir == Direction::Up ? IdentityId::ShiftUp : IdentityId::ShiftDown, n, N, dir,
                     std::move(residual));
}

IdentityReport composition_check(int n, const Rational& N) {
  require_degree(n);
  require_positive(N, "N");
  const std::vector<Poly> seq = abns_sequence(n, N);
  const Rational k = -(Rational(n + 1)) * (Rational(2) * N + Rational(n)) / N;
  Poly residual = abns_degree_raise(n, N).apply(seq.back()).derivative() - k * seq.back();
  return make_report(IdentityId::Composition, n, N, std::nullopt, std::move(residual));
}

IdentityReport shift_roundtrip_check(int n, const Rational& N) {
  require_degree(n);
  require_positive(N, "N");
  const Poly base = abns(n, N);
  const Rational up = (N + Rational(1)) / N;
  // Raise to parameter N+1, rescale into that parameter's own variable,
  // lower back, and rescale home.  The result is a pure scalar multiple.
  const Poly lifted = abns_shift_raise(n, N).apply(base).scaled_compose(up.inverse(), n);
  const Poly dropped = abns_shift_lower(n, N + Rational(1)).apply(lifted);
  const Poly round = dropped.scaled_compose(up, n);
  const Rational product = (Rational(2) * N + Rational(n + 1)) * (Rational(2) * N + Rational(n));
  Poly residual = round + product * base;
  return make_report(IdentityId::ShiftRoundTrip, n, N, std::nullopt, std::move(residual));
}

Poly ode_residual(const Poly& p, int n, const Rational& param, OdeFamily family) {
  require_degree(n);
  if (family == OdeFamily::Abns) {
    require_positive(param, "N");
    const Rational& N = param;
    const Poly lead = Poly::from_coefficients({Rational(1), Rational(0), Rational(1) / N});
    const Rational drift = Rational(-2) * (N + Rational(n - 1)) / N;
    const Rational load = Rational(n) * (Rational(2) * N + Rational(n - 1)) / N;
    return lead * p.derivative().derivative() + Poly::monomial(drift, 1) * p.derivative() + load * p;
  }
  // Classical Gegenbauer equation multiplied through by x^2 so every
  // coefficient stays polynomial.
  const Rational& alpha = param;
  const Poly lead = Poly::from_coefficients({Rational(0), Rational(0), Rational(1), Rational(0), Rational(-1)});
  const Poly drift = Poly::monomial(-(Rational(2) * alpha + Rational(1)), 3);
  const Rational load = Rational(n) * (Rational(2) * alpha + Rational(n));
  return lead * p.derivative().derivative() + drift * p.derivative() + Poly::monomial(load, 2) * p;
}

}  // namespace relham
