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

// relham: exact construction and verification of relativistic Hermite
// (ABNS), Gegenbauer and Hermite polynomial families, plus the numeric
// ladder-coefficient engine and exact real-root isolation.
//
// Exit codes: 0 success, 1 a verification/consistency check failed (or a
// numeric run broke down), 2 usage or domain errors.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "relham/expr.hpp"
#include "relham/facto.hpp"
#include "relham/families.hpp"
#include "relham/identities.hpp"
#include "relham/poly.hpp"
#include "relham/rational.hpp"
#include "relham/zeros.hpp"

namespace {

using nlohmann::json;
using namespace relham;

Rational parse_rational(const std::string& text) {
  try {
    return Rational::from_string(text);
  } catch (const std::invalid_argument&) {
    return Rational::from_decimal(text);
  }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    out.push_back(parse_rational(t));
  }
  return out;
}

// ------------------------------------------------------------------ output

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(Output& out, const json& j) { out.stream() << j.dump(2) << "\n"; }

// --------------------------------------------------------------------- gen

struct GenOpts {
  std::string family;
  int n = 0;
  std::string param;
  bool upto = false;
  std::string format;
  std::string out_path;
};

int cmd_gen(const GenOpts& o) {
  bool needs_param = o.family != "hermite";
  if (needs_param && o.param.empty()) {
    throw std::invalid_argument("--param is required for family '" + o.family + "'");
  }
  Rational param = needs_param ? parse_rational(o.param) : Rational(0);

  std::vector<Poly> seq;
  if (o.family == "abns") {
    seq = abns_sequence(o.n, param);
  } else if (o.family == "gegenbauer") {
    seq = gegenbauer_sequence(o.n, param);
  } else {
    seq = hermite_sequence(o.n);
  }
  int first = o.upto ? 0 : o.n;

  Output out(o.out_path);
  if (o.format == "csv") {
    out.stream() << "family,param,n,power,coefficient\n";
    for (int n = first; n <= o.n; ++n) {
      const auto& p = seq[static_cast<size_t>(n)];
      for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
        out.stream() << o.family << "," << (needs_param ? param.str() : "") << "," << n << "," << k << ","
                     << p.coeff(k).str() << "\n";
      }
    }
    return 0;
  }

  json members = json::array();
  for (int n = first; n <= o.n; ++n) {
    const auto& p = seq[static_cast<size_t>(n)];
    json coeffs = json::array();
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
      coeffs.push_back(p.coeff(k).str());
    }
    members.push_back({{"n", n}, {"degree", p.degree()}, {"coefficients", coeffs}});
  }
  json j{{"command", "gen"}, {"family", o.family}, {"members", members}};
  if (needs_param) {
    j["param"] = param.str();
  }
  emit_json(out, j);
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
  std::vector<std::string> identities;
  int nmax = 8;
  std::vector<std::string> params;
  std::string format;
  std::string out_path;
};

struct CheckRecord {
  std::string identity;
  int n;
  std::string param;
  std::string direction;  // "", "up" or "down"
  std::string status;     // "pass", "fail" or "skipped"
  std::string detail;     // failure residual or skip reason
};

const std::vector<std::string> kAllIdentities = {
    "degree-up",  "degree-down", "rescaled-up", "rescaled-down", "param-up",       "param-down", "nagel",
    "shift-up",   "shift-down",  "composition", "shift-roundtrip", "ode-abns",     "ode-gegenbauer"};

void run_identity(const std::string& name, int n, const Rational& param, std::vector<CheckRecord>& out) {
  CheckRecord rec{name, n, param.str(), "", "", ""};
  try {
    std::optional<IdentityReport> rep;
    if (name == "degree-up") {
      rep = degree_ladder_check(n, param, Direction::Up);
    } else if (name == "degree-down") {
      rep = degree_ladder_check(n, param, Direction::Down);
    } else if (name == "rescaled-up") {
      rep = degree_ladder_check(n, param, Direction::Up, true);
    } else if (name == "rescaled-down") {
      rep = degree_ladder_check(n, param, Direction::Down, true);
    } else if (name == "param-up") {
      rep = param_ladder_check(n, param, Direction::Up);
    } else if (name == "param-down") {
      rep = param_ladder_check(n, param, Direction::Down);
    } else if (name == "nagel") {
      rep = nagel_check(n, param);
    } else if (name == "shift-up") {
      rep = shift_check(n, param, Direction::Up);
    } else if (name == "shift-down") {
      rep = shift_check(n, param, Direction::Down);
    } else if (name == "composition") {
      rep = composition_check(n, param);
    } else if (name == "shift-roundtrip") {
      rep = shift_roundtrip_check(n, param);
    } else if (name == "ode-abns") {
      Poly res = ode_residual(abns(n, param), n, param, OdeFamily::Abns);
      rec.status = res.is_zero() ? "pass" : "fail";
      if (!res.is_zero()) {
        rec.detail = res.str();
      }
      out.push_back(rec);
      return;
    } else if (name == "ode-gegenbauer") {
      Poly res = ode_residual(gegenbauer(n, param), n, param, OdeFamily::Gegenbauer);
      rec.status = res.is_zero() ? "pass" : "fail";
      if (!res.is_zero()) {
        rec.detail = res.str();
      }
      out.push_back(rec);
      return;
    } else {
      throw std::invalid_argument("unknown identity '" + name + "'");
    }
    if (rep->direction) {
      rec.direction = *rep->direction == Direction::Up ? "up" : "down";
    }
    rec.status = rep->holds ? "pass" : "fail";
    if (!rep->holds) {
      rec.detail = rep->residual.str();
    }
  } catch (const std::domain_error& ex) {
    rec.status = "skipped";
    rec.detail = std::string("out of domain: ") + ex.what();
  }
  out.push_back(rec);
}

int cmd_verify(const VerifyOpts& o) {
  std::vector<std::string> names = o.identities.empty() ? kAllIdentities : o.identities;
  for (const auto& name : names) {
    if (std::find(kAllIdentities.begin(), kAllIdentities.end(), name) == kAllIdentities.end()) {
      throw std::invalid_argument("unknown identity '" + name + "'");
    }
  }
  std::vector<Rational> params =
      parse_rationals(o.params.empty() ? std::vector<std::string>{"1", "3/2", "2", "5"} : o.params);

  std::vector<CheckRecord> records;
  for (const auto& name : names) {
    bool needs_lower_degree = name == "degree-down" || name == "rescaled-down";
    for (int n = needs_lower_degree ? 1 : 0; n <= o.nmax; ++n) {
      for (const auto& param : params) {
        run_identity(name, n, param, records);
      }
    }
  }

  int passed = 0;
  int failed = 0;
  int skipped = 0;
  for (const auto& r : records) {
    if (r.status == "pass") {
      ++passed;
    } else if (r.status == "fail") {
      ++failed;
    } else {
      ++skipped;
    }
  }

  Output out(o.out_path);
  if (o.format == "csv") {
    out.stream() << "identity,n,param,direction,status,detail\n";
    for (const auto& r : records) {
      out.stream() << r.identity << "," << r.n << "," << r.param << "," << r.direction << "," << r.status
                   << ",\"" << r.detail << "\"\n";
    }
  } else {
    json checks = json::array();
    for (const auto& r : records) {
      json c{{"identity", r.identity}, {"n", r.n}, {"param", r.param}, {"status", r.status}};
      if (!r.direction.empty()) {
        c["direction"] = r.direction;
      }
      if (!r.detail.empty()) {
        c[r.status == "skipped" ? "reason" : "residual"] = r.detail;
      }
      checks.push_back(c);
    }
    json j{{"command", "verify"},
           {"checks", checks},
           {"summary",
            {{"total", records.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}}};
    emit_json(out, j);
  }
  return failed == 0 ? 0 : 1;
}

// ------------------------------------------------------------------- facto

struct FactoOpts {
  std::string preset;
  std::string family_file;
  int n = 0;
  std::string param;
  double s = 0.0;
  bool s_given = false;
  int grid_points = 65;
  double quad_tol = 1e-10;
  bool no_fit = false;
  double check_tol = 0.0;
  bool check_given = false;
  std::string format;
  std::string out_path;
};

int cmd_facto(const FactoOpts& o) {
  facto::PresetRun run;
  std::string source;
  if (!o.preset.empty()) {
    if (o.param.empty()) {
      throw std::invalid_argument("--param is required with --preset");
    }
    run = facto::make_preset(o.preset, o.n, parse_rational(o.param), o.grid_points);
    source = o.preset;
  } else if (!o.family_file.empty()) {
    if (!o.s_given) {
      throw std::invalid_argument("--s is required with --family-file");
    }
    expr::FamilyFile file = expr::load_family_file(o.family_file);
    run.family = expr::to_family_spec(file);
    run.s = o.s;
    run.grid.resize(static_cast<size_t>(o.grid_points));
    for (int i = 0; i < o.grid_points; ++i) {
      run.grid[static_cast<size_t>(i)] =
          file.interval_lo + (file.interval_hi - file.interval_lo) * i / (o.grid_points - 1);
    }
    run.report_coord = [](double x) { return x; };
    run.report_label = run.family.variable;
    source = o.family_file;
  } else {
    throw std::invalid_argument("one of --preset or --family-file is required");
  }

  facto::EngineOptions opts;
  opts.quad_tol = o.quad_tol;
  opts.fit_constant = !o.no_fit;
  facto::NumericLadder lad = facto::build_coefficients(run.family, run.s, run.grid, opts);
  facto::ConditionResiduals cond = facto::check_conditions(run.family, lad, run.s);

  std::optional<facto::REstimate> prop;
  if (run.family.y && run.family.dy) {
    prop = facto::estimate_r(run.family, lad, run.s);
  }

  bool check_passed = true;
  if (o.check_given) {
    check_passed = cond.product <= o.check_tol && cond.q_next <= o.check_tol &&
                   cond.q_curr <= o.check_tol && cond.r_next <= o.check_tol && cond.r_curr <= o.check_tol;
  }

  Output out(o.out_path);
  if (o.format == "csv") {
    auto& os = out.stream();
    os << "# source=" << source << "\n";
    os << "# s=" << lad.s << "\n";
    os << "# k=" << lad.k << "\n";
    os << "# k_deviation=" << lad.k_deviation << "\n";
    os << "# constant_shift=" << lad.constant_shift << "\n";
    os << "# residual_product=" << cond.product << "\n";
    os << "# residual_q_next=" << cond.q_next << "\n";
    os << "# residual_q_curr=" << cond.q_curr << "\n";
    os << "# residual_r_next=" << cond.r_next << "\n";
    os << "# residual_r_curr=" << cond.r_curr << "\n";
    if (prop) {
      os << "# r_plus=" << prop->r_plus << "\n";
      os << "# r_minus=" << prop->r_minus << "\n";
      os << "# r_deviation=" << prop->max_deviation << "\n";
    }
    if (o.check_given) {
      os << "# check=" << (check_passed ? "pass" : "fail") << "\n";
    }
    os << run.report_label << ",f_plus,f_minus,g_plus,g_minus,df_plus,df_minus,dg_plus,dg_minus,E,W\n";
    os.precision(17);
    for (size_t i = 0; i < lad.grid.size(); ++i) {
      os << run.report_coord(lad.grid[i]) << "," << lad.f_plus[i] << "," << lad.f_minus[i] << ","
         << lad.g_plus[i] << "," << lad.g_minus[i] << "," << lad.df_plus[i] << "," << lad.df_minus[i]
         << "," << lad.dg_plus[i] << "," << lad.dg_minus[i] << "," << lad.E[i] << "," << lad.W[i] << "\n";
    }
  } else {
    json points = json::array();
    for (size_t i = 0; i < lad.grid.size(); ++i) {
      points.push_back({{"coord", run.report_coord(lad.grid[i])},
                        {"f_plus", lad.f_plus[i]},
                        {"f_minus", lad.f_minus[i]},
                        {"g_plus", lad.g_plus[i]},
                        {"g_minus", lad.g_minus[i]},
                        {"df_plus", lad.df_plus[i]},
                        {"df_minus", lad.df_minus[i]},
                        {"dg_plus", lad.dg_plus[i]},
                        {"dg_minus", lad.dg_minus[i]},
                        {"E", lad.E[i]},
                        {"W", lad.W[i]}});
    }
    json j{{"command", "facto"},
           {"source", source},
           {"s", lad.s},
           {"quad_tol", o.quad_tol},
           {"k", lad.k},
           {"k_deviation", lad.k_deviation},
           {"constant_shift", lad.constant_shift},
           {"conditions",
            {{"product", cond.product},
             {"q_next", cond.q_next},
             {"q_curr", cond.q_curr},
             {"r_next", cond.r_next},
             {"r_curr", cond.r_curr}}},
           {"coord_label", run.report_label},
           {"points", points}};
    if (prop) {
      j["proportionality"] = {
          {"r_plus", prop->r_plus}, {"r_minus", prop->r_minus}, {"max_deviation", prop->max_deviation}};
    }
    if (o.check_given) {
      j["check"] = {{"tol", o.check_tol}, {"passed", check_passed}};
    }
    emit_json(out, j);
  }
  return check_passed ? 0 : 1;
}

// ------------------------------------------------------------------- zeros

struct ZerosOpts {
  int n = 0;
  std::string param;
  std::string tol = "1/1000000000";
  std::string method = "direct";
  std::string format;
  std::string out_path;
};

json roots_to_json(const RootList& roots) {
  json arr = json::array();
  for (const auto& r : roots) {
    arr.push_back({{"lo", r.lo.str()},
                   {"hi", r.hi.str()},
                   {"mid", r.mid().to_double()},
                   {"width", r.width().to_double()}});
  }
  return arr;
}

int cmd_zeros(const ZerosOpts& o) {
  Rational param = parse_rational(o.param);
  Rational tol = parse_rational(o.tol);
  bool direct = o.method == "direct" || o.method == "both";
  bool mapped = o.method == "mapped" || o.method == "both";

  RootList direct_roots;
  RootList mapped_roots;
  if (direct) {
    direct_roots = abns_zeros(o.n, param, tol);
  }
  if (mapped) {
    mapped_roots = mapped_gegenbauer_zeros(o.n, param, tol);
  }

  double disagreement = 0.0;
  if (direct && mapped) {
    for (size_t i = 0; i < direct_roots.size(); ++i) {
      double d = std::fabs(direct_roots[i].mid().to_double() - mapped_roots[i].mid().to_double());
      disagreement = std::max(disagreement, d);
    }
  }

  Output out(o.out_path);
  if (o.format == "csv") {
    auto& os = out.stream();
    os.precision(17);
    if (direct && mapped) {
      os << "index,lo,hi,mid,width,mapped_lo,mapped_hi,mapped_mid,mapped_width\n";
      for (size_t i = 0; i < direct_roots.size(); ++i) {
        os << i << "," << direct_roots[i].lo.str() << "," << direct_roots[i].hi.str() << ","
           << direct_roots[i].mid().to_double() << "," << direct_roots[i].width().to_double() << ","
           << mapped_roots[i].lo.str() << "," << mapped_roots[i].hi.str() << ","
           << mapped_roots[i].mid().to_double() << "," << mapped_roots[i].width().to_double() << "\n";
      }
    } else {
      const RootList& roots = direct ? direct_roots : mapped_roots;
      os << "index,lo,hi,mid,width\n";
      for (size_t i = 0; i < roots.size(); ++i) {
        os << i << "," << roots[i].lo.str() << "," << roots[i].hi.str() << ","
           << roots[i].mid().to_double() << "," << roots[i].width().to_double() << "\n";
      }
    }
  } else {
    json j{{"command", "zeros"},
           {"n", o.n},
           {"param", param.str()},
           {"tol", tol.str()},
           {"method", o.method}};
    if (direct) {
      j["roots"] = roots_to_json(direct_roots);
    }
    if (mapped) {
      j[direct ? "mapped_roots" : "roots"] = roots_to_json(mapped_roots);
    }
    if (direct && mapped) {
      j["max_disagreement"] = disagreement;
    }
    emit_json(out, j);
  }
  return 0;
}

// ------------------------------------------------------------------- limit

struct LimitOpts {
  int n = 0;
  std::vector<std::string> params;
  std::string format;
  std::string out_path;
};

int cmd_limit(const LimitOpts& o) {
  std::vector<Rational> params =
      parse_rationals(o.params.empty() ? std::vector<std::string>{"10", "100", "1000", "10000"} : o.params);
  Poly h = hermite(o.n);

  std::vector<Rational> distances;
  distances.reserve(params.size());
  for (const auto& N : params) {
    distances.push_back(max_coefficient_norm(abns(o.n, N) - h));
  }

  // shrink factor between consecutive parameter values: d(N_{i-1}) / d(N_i)
  std::vector<std::optional<Rational>> shrink(params.size());
  for (size_t i = 1; i < params.size(); ++i) {
    if (!distances[i].is_zero()) {
      shrink[i] = distances[i - 1] / distances[i];
    }
  }

  Output out(o.out_path);
  if (o.format == "csv") {
    auto& os = out.stream();
    os.precision(17);
    os << "param,distance,shrink_factor\n";
    for (size_t i = 0; i < params.size(); ++i) {
      os << params[i].str() << "," << distances[i].to_double() << ",";
      if (shrink[i]) {
        os << shrink[i]->to_double();
      }
      os << "\n";
    }
  } else {
    json points = json::array();
    for (size_t i = 0; i < params.size(); ++i) {
      json p{{"param", params[i].str()},
             {"distance", distances[i].str()},
             {"distance_double", distances[i].to_double()}};
      if (shrink[i]) {
        p["shrink_factor"] = shrink[i]->to_double();
      }
      points.push_back(p);
    }
    json j{{"command", "limit"}, {"n", o.n}, {"points", points}};
    emit_json(out, j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ABNS / Gegenbauer / Hermite polynomial toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  GenOpts gen_o;
  auto* gen = app.add_subcommand("gen", "generate family members with exact coefficients");
  gen->fallthrough();
  gen->add_option("--family", gen_o.family, "polynomial family")
      ->required()
      ->check(CLI::IsMember({"abns", "gegenbauer", "hermite"}));
  gen->add_option("--n", gen_o.n, "degree")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--param", gen_o.param, "N (abns) or alpha (gegenbauer), as a rational or decimal");
  gen->add_flag("--upto", gen_o.upto, "emit degrees 0..n instead of just n");

  VerifyOpts verify_o;
  auto* verify = app.add_subcommand("verify", "check ladder/bridge identities exactly");
  verify->fallthrough();
  verify->add_option("--identity", verify_o.identities, "identities to check (default: all)")
      ->delimiter(',');
  verify->add_option("--nmax", verify_o.nmax, "largest degree checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--param", verify_o.params, "parameter values (default: 1 3/2 2 5)")->delimiter(',');

  FactoOpts facto_o;
  auto* facto_cmd = app.add_subcommand("facto", "build ladder coefficients numerically from P, Q, R");
  facto_cmd->fallthrough();
  auto* preset_opt = facto_cmd->add_option("--preset", facto_o.preset, "abns-degree or gegenbauer-param");
  auto* file_opt =
      facto_cmd->add_option("--family-file", facto_o.family_file, "key/value family description file");
  preset_opt->excludes(file_opt);
  facto_cmd->add_option("--n", facto_o.n, "degree (presets only)")->check(CLI::NonNegativeNumber);
  facto_cmd->add_option("--param", facto_o.param, "preset family parameter (rational or decimal)");
  facto_cmd->add_option("--s", facto_o.s, "family index value (family files only)")
      ->trigger_on_parse()
      ->each([&facto_o](const std::string&) { facto_o.s_given = true; });
  facto_cmd->add_option("--grid-points", facto_o.grid_points, "grid resolution")
      ->check(CLI::Range(2, 100000));
  facto_cmd->add_option("--quad-tol", facto_o.quad_tol, "absolute quadrature tolerance");
  facto_cmd->add_flag("--no-fit", facto_o.no_fit, "keep integration constants anchored at zero");
  facto_cmd->add_option("--check-tol", facto_o.check_tol, "fail (exit 1) if any condition residual exceeds this")
      ->each([&facto_o](const std::string&) { facto_o.check_given = true; });

  ZerosOpts zeros_o;
  auto* zeros_cmd = app.add_subcommand("zeros", "isolate real zeros with exact rational enclosures");
  zeros_cmd->fallthrough();
  zeros_cmd->add_option("--n", zeros_o.n, "degree")->required()->check(CLI::NonNegativeNumber);
  zeros_cmd->add_option("--param", zeros_o.param, "family parameter N")->required();
  zeros_cmd->add_option("--tol", zeros_o.tol, "enclosure width bound (rational or decimal)");
  zeros_cmd->add_option("--method", zeros_o.method, "direct Sturm isolation, Gegenbauer pullback, or both")
      ->check(CLI::IsMember({"direct", "mapped", "both"}));

  LimitOpts limit_o;
  auto* limit_cmd = app.add_subcommand("limit", "coefficient distance to the Hermite limit");
  limit_cmd->fallthrough();
  limit_cmd->add_option("--n", limit_o.n, "degree")->required()->check(CLI::NonNegativeNumber);
  limit_cmd->add_option("--param", limit_o.params, "N values (default: 10 100 1000 10000)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    gen_o.format = verify_o.format = facto_o.format = zeros_o.format = limit_o.format = format;
    gen_o.out_path = verify_o.out_path = facto_o.out_path = zeros_o.out_path = limit_o.out_path = out_path;
    if (gen->parsed()) {
      return cmd_gen(gen_o);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_o);
    }
    if (facto_cmd->parsed()) {
      return cmd_facto(facto_o);
    }
    if (zeros_cmd->parsed()) {
      return cmd_zeros(zeros_o);
    }
    if (limit_cmd->parsed()) {
      return cmd_limit(limit_o);
    }
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
