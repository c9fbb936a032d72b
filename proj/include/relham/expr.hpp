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

#include <memory>
#include <string>

#include "relham/facto.hpp"

namespace relham::expr {

// Arithmetic over the two reserved names `xi` (position) and `s` (family
// index): operators + - * / ^ (integer exponents only), parentheses, unary
// minus, decimal and scientific literals.  Any other identifier is
// rejected at parse time so typos fail fast instead of evaluating to
// garbage.
class Expression {
 public:
  Expression() = default;

  static Expression parse(const std::string& text);

  double operator()(double xi, double s) const;
  bool uses_xi() const;
  bool uses_s() const;
  bool empty() const { return root_ == nullptr; }
  const std::string& text() const { return text_; }

  struct Node;  // implementation detail, defined out of line

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// An equation family described in a small key/value file:
//
//   # harmonic-oscillator polynomials
//   P = 1
//   Q = -2*xi
//   R = 2*s
//   interval = 0.1, 2        # default coefficient grid (required)
//   domain = -1e9, 1e9       # optional, defaults to the whole line
//   base = 0                 # optional anchor for the antiderivatives
//
// P must not mention s.  The right-hand sides of domain/interval/base may
// be constant expressions (e.g. 1/2); separate pairs with a comma, or with
// whitespace when neither entry contains spaces.
struct FamilyFile {
  Expression p, q, r;
  double domain_lo = -1e300;
  double domain_hi = 1e300;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  double base_point = 0.0;
};

FamilyFile load_family_file(const std::string& path);

// Adapter for the coefficient engine.  The derivative of P falls back to
// finite differences and no solution evaluators are attached, so
// proportionality estimation is unavailable for file-defined families.
facto::FamilySpec to_family_spec(const FamilyFile& file);

}  // namespace relham::expr
