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

#include "relham/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace relham::expr {

struct Expression::Node {
  enum class Kind { Number, VarXi, VarS, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  double value = 0.0;  // Number
  long exponent = 0;   // Pow
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected input starting at '" + text_.substr(pos_) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse expression '" + text_ + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr sum() {
    NodePtr lhs = product();
    while (true) {
      if (consume('+')) {
        lhs = make(Kind::Add, lhs, product());
      } else if (consume('-')) {
        lhs = make(Kind::Sub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    while (true) {
      if (consume('*')) {
        lhs = make(Kind::Mul, lhs, unary());
      } else if (consume('/')) {
        lhs = make(Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (consume('-')) {
      return make(Kind::Neg, unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!consume('^')) {
      return base;
    }
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::Pow;
    n->lhs = base;
    n->exponent = integer_literal();
    return n;
  }

  long integer_literal() {
    skip_space();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      ++pos_;
    }
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits) {
      fail("exponent must be an integer literal");
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("exponent must be an integer literal");
    }
    return std::strtol(text_.c_str() + start, nullptr, 10);
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size()) {
      fail("expression ends where a value was expected");
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      if (!consume(')')) {
        fail("missing closing parenthesis");
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return identifier();
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) {
      fail("malformed number");
    }
    pos_ += static_cast<size_t>(end - begin);
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::Number;
    n->value = v;
    return n;
  }

  NodePtr identifier() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = text_.substr(start, pos_ - start);
    if (name == "xi") {
      return make(Kind::VarXi);
    }
    if (name == "s") {
      return make(Kind::VarS);
    }
    fail("unknown identifier '" + name + "' (only xi and s are defined)");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

double eval(const Expression::Node& n, double xi, double s) {
  switch (n.kind) {
    case Kind::Number:
      return n.value;
    case Kind::VarXi:
      return xi;
    case Kind::VarS:
      return s;
    case Kind::Add:
      return eval(*n.lhs, xi, s) + eval(*n.rhs, xi, s);
    case Kind::Sub:
      return eval(*n.lhs, xi, s) - eval(*n.rhs, xi, s);
    case Kind::Mul:
      return eval(*n.lhs, xi, s) * eval(*n.rhs, xi, s);
    case Kind::Div:
      return eval(*n.lhs, xi, s) / eval(*n.rhs, xi, s);
    case Kind::Neg:
      return -eval(*n.lhs, xi, s);
    case Kind::Pow:
      return std::pow(eval(*n.lhs, xi, s), static_cast<double>(n.exponent));
  }
  throw std::logic_error("unreachable expression node kind");
}

bool mentions(const Expression::Node& n, Kind var) {
  if (n.kind == var) {
    return true;
  }
  if (n.lhs && mentions(*n.lhs, var)) {
    return true;
  }
  return n.rhs && mentions(*n.rhs, var);
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double constant_value(const std::string& text, const std::string& what) {
  Expression e = Expression::parse(text);
  if (e.uses_xi() || e.uses_s()) {
    throw std::invalid_argument(what + " must be a constant expression, got '" + text + "'");
  }
  return e(0.0, 0.0);
}

std::pair<double, double> constant_pair(const std::string& text, const std::string& what) {
  std::string lo_text;
  std::string hi_text;
  size_t comma = text.find(',');
  if (comma != std::string::npos) {
    lo_text = trimmed(text.substr(0, comma));
    hi_text = trimmed(text.substr(comma + 1));
  } else {
    size_t ws = text.find_first_of(" \t");
    if (ws == std::string::npos) {
      throw std::invalid_argument(what + " needs two values, got '" + text + "'");
    }
    lo_text = trimmed(text.substr(0, ws));
    hi_text = trimmed(text.substr(ws));
  }
  if (lo_text.empty() || hi_text.empty()) {
    throw std::invalid_argument(what + " needs two values, got '" + text + "'");
  }
  return {constant_value(lo_text, what), constant_value(hi_text, what)};
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.root_ = Parser(text).run();
  e.text_ = text;
  return e;
}

double Expression::operator()(double xi, double s) const {
  if (!root_) {
    throw std::logic_error("evaluating an empty expression");
  }
  return eval(*root_, xi, s);
}

bool Expression::uses_xi() const { return root_ && mentions(*root_, Node::Kind::VarXi); }

bool Expression::uses_s() const { return root_ && mentions(*root_, Node::Kind::VarS); }

FamilyFile load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open family file: " + path);
  }
  FamilyFile out;
  bool have_p = false;
  bool have_q = false;
  bool have_r = false;
  bool have_interval = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trimmed(line);
    if (line.empty()) {
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trimmed(line.substr(0, eq));
    std::string value = trimmed(line.substr(eq + 1));
    try {
      if (key == "P") {
        out.p = Expression::parse(value);
        have_p = true;
      } else if (key == "Q") {
        out.q = Expression::parse(value);
        have_q = true;
      } else if (key == "R") {
        out.r = Expression::parse(value);
        have_r = true;
      } else if (key == "domain") {
        std::tie(out.domain_lo, out.domain_hi) = constant_pair(value, "domain");
      } else if (key == "interval") {
        std::tie(out.interval_lo, out.interval_hi) = constant_pair(value, "interval");
        have_interval = true;
      } else if (key == "base") {
        out.base_point = constant_value(value, "base");
      } else {
        throw std::invalid_argument("unknown key '" + key +
                                    "' (expected P, Q, R, domain, interval or base)");
      }
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (!have_p || !have_q || !have_r) {
    throw std::invalid_argument(path + ": family file must define P, Q and R");
  }
  if (!have_interval) {
    throw std::invalid_argument(path + ": family file must define interval");
  }
  if (out.p.uses_s()) {
    throw std::invalid_argument(path + ": P must not depend on s");
  }
  if (!(out.domain_lo < out.domain_hi)) {
    throw std::invalid_argument(path + ": domain must be an ascending pair");
  }
  if (!(out.interval_lo < out.interval_hi)) {
    throw std::invalid_argument(path + ": interval must be an ascending pair");
  }
  if (out.interval_lo < out.domain_lo || out.interval_hi > out.domain_hi) {
    throw std::invalid_argument(path + ": interval must lie inside the domain");
  }
  if (out.base_point < out.domain_lo || out.base_point > out.domain_hi) {
    throw std::invalid_argument(path + ": base point must lie inside the domain");
  }
  return out;
}

facto::FamilySpec to_family_spec(const FamilyFile& file) {
  facto::FamilySpec spec;
  spec.p = [e = file.p](double x) { return e(x, 0.0); };
  spec.q = [e = file.q](double s, double x) { return e(x, s); };
  spec.r = [e = file.r](double s, double x) { return e(x, s); };
  spec.domain_lo = file.domain_lo;
  spec.domain_hi = file.domain_hi;
  spec.base_point = file.base_point;
  spec.variable = "xi";
  return spec;
}

}  // namespace relham::expr
