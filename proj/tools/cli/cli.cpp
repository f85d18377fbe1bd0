/*
   Copyright 2026 The opcons Authors

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

#include "cli.hpp"

#include "opcons/conservation.hpp"
#include "opcons/diffop.hpp"
#include "opcons/error.hpp"
#include "opcons/numlab.hpp"
#include "opcons/random.hpp"
#include "opcons/syntax.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace opcons::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::optional<std::string> expr;
  bool json = false;
  // expect / probe
  bool numeric = false;
  std::vector<std::string> binds;
  std::size_t nodes = 64;
  std::string norm = "1";
  // probe
  std::optional<std::string> delta;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  bool family_only = false;
  // solve-case
  int k = 0;
  std::string mode = "pointwise";
  // phys
  std::string var = "x";
  std::string constant = "hbar";
};

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  auto all_digits = [](std::string_view d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!all_digits(num) || !all_digits(den))
    throw ParseError(1, 1, "expected a rational p/q, got '" + std::string(text) + "'");
  const boost::multiprecision::cpp_int d{std::string(den)};
  if (d == 0) throw ParseError(1, 1, "zero denominator in '" + std::string(text) + "'");
  Rational r(boost::multiprecision::cpp_int{std::string(num)}, d);
  return negative ? Rational(-r) : r;
}

std::string read_operator_source(const Options& opt, std::istream& in) {
  if (opt.expr) return *opt.expr;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Binding make_binding(const Options& opt) {
  Binding b;
  for (const auto& text : opt.binds) {
    auto [name, value] = parse_binding(text);
    b[name] = value;
  }
  return b;
}

std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (std::signbit(z.imag()) ? " - " : " + ") << std::abs(z.imag()) << "*i";
  return os.str();
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Json complex_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

// Either a JSON object or "key: value" lines, in insertion order.
class Report {
 public:
  explicit Report(bool json) : json_(json) {}

  void add(const std::string& key, const Json& json_value, const std::string& text) {
    doc_[key] = json_value;
    lines_.emplace_back(key, text);
  }
  void add(const std::string& key, const std::string& value) { add(key, value, value); }

  void write(std::ostream& out) const {
    if (json_) {
      out << doc_.dump() << "\n";
      return;
    }
    for (const auto& [k, v] : lines_) out << k << ": " << v << "\n";
  }

 private:
  bool json_;
  Json doc_ = Json::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

int cmd_reduce(const Options& opt, std::istream& in, std::ostream& out) {
  const DiffOp p = parse_operator(read_operator_source(opt, in));
  const CollapsedOp c = collapse(p);
  Report r(opt.json);
  r.add("a0", print(c.a0));
  r.add("b1", print(c.b1));
  r.add("b2", print(c.b2));
  r.write(out);
  return kOk;
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out) {
  const Family f = classify(parse_operator(read_operator_source(opt, in)));
  Report r(opt.json);
  r.add("kind", std::string(to_string(f.kind)));
  r.add("constant", print(f.constant));
  r.write(out);
  return kOk;
}

int cmd_expect(const Options& opt, std::istream& in, std::ostream& out) {
  const DiffOp p = parse_operator(read_operator_source(opt, in));
  const WaveSpec w = WaveSpec::with_norm(parse_rational(opt.norm));
  const ConstPoly exact = expectation(p, w);
  Report r(opt.json);
  r.add("expectation", print(exact));
  if (opt.numeric) {
    const Binding b = make_binding(opt);
    const GridSpec g(opt.nodes);
    const Complex numeric = quad_expectation(p, w, b, g);
    const double diff = std::abs(numeric - eval_const(exact, b));
    r.add("numeric", complex_json(numeric), format_complex(numeric));
    r.add("abs_diff", diff, format_double(diff));
  }
  r.write(out);
  return kOk;
}

int cmd_probe(const Options& opt, std::istream& in, std::ostream& out) {
  const DiffOp p = parse_operator(read_operator_source(opt, in));
  const WaveSpec w = WaveSpec::with_norm(parse_rational(opt.norm));
  Report r(opt.json);
  if (opt.delta) {
    const DiffOp dp = parse_operator(*opt.delta);
    const ConstPoly exact = delta_expectation(p, dp, w);
    r.add("delta_expectation", print(exact));
    if (opt.numeric) {
      const Binding b = make_binding(opt);
      const Complex numeric = quad_delta_expectation(p, dp, w, b, GridSpec(opt.nodes));
      const double diff = std::abs(numeric - eval_const(exact, b));
      r.add("numeric", complex_json(numeric), format_complex(numeric));
      r.add("abs_diff", diff, format_double(diff));
    }
    r.write(out);
    return kOk;
  }
  if (opt.trials == 0) throw DomainError("probe needs --delta or --trials >= 1");
  const ProbeReport report =
      probe_ensemble(p, opt.family_only, opt.trials, opt.seed, make_binding(opt), GridSpec(opt.nodes), w);
  r.add("trials", report.trials, std::to_string(report.trials));
  r.add("seed", report.seed, std::to_string(report.seed));
  r.add("family_only", report.family_only, report.family_only ? "true" : "false");
  r.add("max_abs_delta", report.max_abs_delta, format_double(report.max_abs_delta));
  r.add("detected_fraction", report.detected_fraction, format_double(report.detected_fraction));
  r.write(out);
  return kOk;
}

int cmd_solve_case(const Options& opt, std::ostream& out) {
  EquivalenceMode mode;
  if (opt.mode == "pointwise")
    mode = EquivalenceMode::Pointwise;
  else if (opt.mode == "integral")
    mode = EquivalenceMode::Integral;
  else
    throw DomainError("mode must be 'integral' or 'pointwise'");
  const CaseConstraint c = solve_special_case(opt.k, mode);
  const Family f = classify(c.solved_op);
  Report r(opt.json);
  r.add("case", c.case_index, std::to_string(c.case_index));
  r.add("mode", std::string(to_string(c.mode)));
  r.add("template", print_operator(c.template_op));
  r.add("condition", c.condition);
  r.add("operator", print_operator(c.solved_op));
  r.add("kind", std::string(to_string(f.kind)));
  r.add("constant", print(f.constant));
  r.write(out);
  return kOk;
}

int cmd_phys(const Options& opt, std::istream& in, std::ostream& out) {
  const Family f = classify(parse_operator(read_operator_source(opt, in)));
  const std::string form = substitute_physical(f, opt.var, opt.constant);
  Report r(opt.json);
  r.add("kind", std::string(to_string(f.kind)));
  r.add("constant", print(f.constant));
  r.add("form", form);
  r.write(out);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

constexpr double kSymbolTolerance = 1e-10;
constexpr double kQuadTolerance = 1e-9;

struct CheckResult {
  std::string subject;
  std::string check;
  bool ok;
};

Binding corpus_binding(const std::set<std::string>& symbols) {
  // Fixed, distinct, non-integer values.
  Binding b;
  int index = 0;
  for (const auto& s : symbols) {
    b[s] = Rational(2 * index + 3, 7 + index);
    ++index;
  }
  return b;
}

double max_symbol_error(const DiffOp& p, const Binding& b, const GridSpec& g) {
  const WaveSpec w;
  const std::vector<Complex> action = apply_numeric(p, w, b, g);
  const FourierPoly sigma = symbol(p);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double phi = g.node(j);
    worst = std::max(worst, std::abs(action[j] - eval_fourier(sigma, b, phi) * eval_wave(w, phi)));
  }
  return worst;
}

void check_operator(const std::string& name, const DiffOp& p, std::vector<CheckResult>& results) {
  const Binding b = corpus_binding(p.symbols());
  bool round_trip = false;
  try {
    round_trip = parse_operator(print_operator(p)) == p;
  } catch (const ParseError&) {
  }
  results.push_back({name, "round-trip", round_trip});
  results.push_back({name, "collapse-symbol", symbol(collapse(p).expand()) == symbol(p)});
  results.push_back({name, "numeric-symbol", max_symbol_error(p, b, GridSpec(32)) < kSymbolTolerance});
  const Complex quad = quad_expectation(p, WaveSpec(), b, GridSpec(64));
  results.push_back({name, "quad-expectation", std::abs(quad - eval_const(expectation(p), b)) < kQuadTolerance});
}

std::vector<CheckResult> run_verify() {
  std::vector<CheckResult> results;
  for (const auto& entry : verify_corpus()) {
    const DiffOp p = parse_operator(entry.expr);
    check_operator(entry.name, p, results);
    const Family f = classify(p);
    results.push_back({entry.name, "classify",
                       to_string(f.kind) == entry.expected_kind && print(f.constant) == entry.expected_constant});
  }

  RandomShape shape;
  shape.symbols = {"A", "B"};
  shape.max_order = 8;
  shape.bandwidth = 4;
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng = derive_stream(20261019, t);
    check_operator("random-" + std::to_string(t), random_diffop(rng, shape), results);
  }

  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng = derive_stream(37, t);
    const ConstPoly a = random_const_poly(rng, shape);
    const DiffOp p = conserved_family(a, random_fourier(rng, shape));
    results.push_back({"family-" + std::to_string(t), "conserved",
                       is_conserved(p) && expectation(p) == a});
  }

  for (int k = 1; k <= 6; ++k) {
    const auto pointwise = solve_special_case(k, EquivalenceMode::Pointwise);
    const Family f = classify(pointwise.solved_op);
    const bool canonical = f.kind == FamilyKind::Alpha || f.kind == FamilyKind::Beta || f.kind == FamilyKind::Gamma;
    results.push_back({"case-" + std::to_string(k), "three-forms",
                       k == 6 ? f.kind == FamilyKind::NullSymbol : canonical});
  }

  results.push_back({"wave", "normalization", std::abs(check_normalization(WaveSpec(), GridSpec(32)) - 1.0) < 1e-12});
  return results;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const std::vector<CheckResult> results = run_verify();
  const auto failed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.ok; }));
  if (opt.json) {
    Json checks = Json::array();
    for (const auto& r : results) checks.push_back(Json{{"subject", r.subject}, {"check", r.check}, {"ok", r.ok}});
    Json doc = Json::object();
    doc["passed"] = results.size() - failed;
    doc["failed"] = failed;
    doc["checks"] = std::move(checks);
    out << doc.dump() << "\n";
  } else {
    for (const auto& r : results) out << (r.ok ? "PASS " : "FAIL ") << r.subject << " " << r.check << "\n";
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kOk : kInternal;
}

}  // namespace

std::pair<std::string, Rational> parse_binding(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ParseError(1, 1, "binding must look like NAME=p/q, got '" + std::string(text) + "'");
  return {std::string(text.substr(0, eq)), parse_rational(text.substr(eq + 1))};
}

const std::vector<CorpusEntry>& verify_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"alpha", "A", "Alpha", "A"},
      {"beta", "-i*A*D1", "Beta", "A"},
      {"gamma", "A*D2", "Gamma", "A"},
      {"momentum", "-i*hbar*D1", "Beta", "hbar"},
      {"third-order", "i*D3", "Beta", "1"},
      {"odd-series", "2*D1 + D3 + 4*D5", "Beta", "5*i"},
      {"even-series", "-A*D2 + 3*D4", "Gamma", "-3 - A"},
      {"master", "A - i*B*D1 + B*D2", "GeneralConserved", "A"},
      {"master-oscillating", "2 - i*E(1)*D1 + E(1)*D2", "GeneralConserved", "2"},
      {"master-high-order", "A + i*B*D3 - B*D4", "GeneralConserved", "A"},
      {"null-even", "D2 + D4", "NullSymbol", "0"},
      {"null-family", "-i*B*D1 + B*D2", "NullSymbol", "0"},
      {"bare-derivative", "D1", "Beta", "i"},
      {"first-plus-second", "D1 + D2", "NotConserved", "0"},
      {"oscillating-multiplier", "A*E(1)", "NotConserved", "0"},
      {"constant-symbol", "A + i*D1", "NotConserved", "0"},
      {"mixed", "(1/2 + i)*E(-2)*D3 - 3/4*B*E(1)*D1 + A*A", "NotConserved", "0"},
  };
  return corpus;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of conserved differential operators on psi = rho*exp(i*phi)", "opcons"};
  app.require_subcommand(1);
  Options opt;

  auto add_operator_options = [&opt](CLI::App* sub) {
    sub->add_option("--expr", opt.expr, "Operator expression (read from stdin when absent)");
    sub->add_flag("--json", opt.json, "Emit one JSON object");
  };
  auto add_numeric_options = [&opt](CLI::App* sub) {
    sub->add_flag("--numeric", opt.numeric, "Also evaluate by quadrature");
    sub->add_option("--bind", opt.binds, "Value of a symbolic constant, NAME=p/q");
    sub->add_option("--nodes", opt.nodes, "Quadrature nodes")->check(CLI::Range(std::size_t{4}, std::size_t{1} << 16));
    sub->add_option("--norm", opt.norm, "Norm <psi|psi> as p/q");
  };

  auto* reduce = app.add_subcommand("reduce", "Collapse to A0 + B1*D1 + B2*D2");
  add_operator_options(reduce);
  auto* classify_cmd = app.add_subcommand("classify", "Match against the canonical conserved families");
  add_operator_options(classify_cmd);
  auto* expect = app.add_subcommand("expect", "Expectation value <psi|L|psi>");
  add_operator_options(expect);
  add_numeric_options(expect);
  auto* probe = app.add_subcommand("probe", "Change of the expectation value under perturbation");
  add_operator_options(probe);
  add_numeric_options(probe);
  probe->add_option("--delta", opt.delta, "Perturbation operator");
  probe->add_option("--trials", opt.trials, "Random perturbations to draw");
  probe->add_option("--seed", opt.seed, "Seed for the random perturbations");
  probe->add_flag("--family-only", opt.family_only, "Perturb only within the conserved family");
  auto* solve = app.add_subcommand("solve-case", "Solve a special case against the general conserved operator");
  solve->add_option("--k", opt.k, "Case index 1..6")->required();
  solve->add_option("--mode", opt.mode, "integral or pointwise");
  solve->add_flag("--json", opt.json, "Emit one JSON object");
  auto* phys = app.add_subcommand("phys", "Physical form of a canonical family");
  add_operator_options(phys);
  phys->add_option("--var", opt.var, "Variable name");
  phys->add_option("--const", opt.constant, "Name of the constant");
  auto* verify = app.add_subcommand("verify", "Symbolic versus numeric cross-check on the built-in corpus");
  verify->add_flag("--json", opt.json, "Emit one JSON object");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(opt, in, out);
    if (classify_cmd->parsed()) return cmd_classify(opt, in, out);
    if (expect->parsed()) return cmd_expect(opt, in, out);
    if (probe->parsed()) return cmd_probe(opt, in, out);
    if (solve->parsed()) return cmd_solve_case(opt, out);
    if (phys->parsed()) return cmd_phys(opt, in, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kParse;
  } catch (const UnboundConstantError& e) {
    err << "error: " << e.what() << "\n";
    return kBinding;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace opcons::cli
