// Copyright 2026 The zxeval developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <numbers>

#include "zxeval/evaluator.hpp"
#include "zxeval/json_io.hpp"
#include "zxeval/oracle.hpp"

namespace zxeval::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
  case Errc::malformed_input:
  case Errc::schema_violation: return 2;
  case Errc::term_budget_exceeded:
  case Errc::too_large: return 3;
  default: return 1;
  }
}

std::pair<int, int> parse_edge(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--edge expects 'U,V'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("--edge expects integer endpoints");
  }
}

AnsatzSpec make_ansatz(const std::string& name, int p) {
  if (name == "ry") return RyProduct{};
  if (name == "qaoa") return Qaoa{p};
  if (name == "hweff") return HwEffSu2{};
  throw UsageError("unknown ansatz '" + name + "' (expected ry, qaoa or hweff)");
}

Binding parse_bindings(const std::vector<std::string>& raw) {
  Binding out;
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--bind expects name=value");
    out[item.substr(0, eq)] = parse_angle(item.substr(eq + 1));
  }
  return out;
}

/// Symbolic <Z_u Z_v> for one edge through the diagram pipeline.
ScalarExpr edge_expectation(const ProblemGraph& g, const AnsatzSpec& ansatz,
                            std::pair<int, int> edge, bool lightcone, const Strategy& strategy) {
  const ProblemGraph* graph = &g;
  std::pair<int, int> e = edge;
  LightconeResult lc;
  if (lightcone) {
    const auto* qaoa = std::get_if<Qaoa>(&ansatz);
    if (!qaoa) throw UsageError("--lightcone applies to the qaoa ansatz");
    lc = lightcone_reduce(g, edge, qaoa->p);
    graph = &lc.reduced;
    e = lc.edge;
  }
  Diagram state = build_state(*graph, ansatz);
  ObservableTerm term;
  term.weight = ScalarExpr::one();
  term.z_support = {std::min(e.first, e.second), std::max(e.first, e.second)};
  return evaluate_expectation(expectation_diagram(state, term), strategy);
}

std::string format_value(std::complex<double> v) {
  std::ostringstream os;
  os.precision(12);
  if (std::abs(v.imag()) < 1e-10) {
    os << v.real();
  } else {
    os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
  }
  return os.str();
}

int cmd_expval(const std::string& graph_file, const std::string& ansatz_name, int p,
               const std::string& edge_text, bool all_edges, bool lightcone,
               const std::vector<std::string>& binds, const std::string& out_mode,
               std::size_t budget, std::ostream& out) {
  ProblemGraph g = load_graph_file(graph_file);
  AnsatzSpec ansatz = make_ansatz(ansatz_name, p);
  Binding binding = parse_bindings(binds);
  Strategy strategy;
  strategy.term_budget = budget;

  std::vector<std::pair<int, int>> edges;
  if (all_edges || edge_text.empty())
    edges = g.edges;
  else
    edges.push_back(parse_edge(edge_text));

  bool bound = true;
  {
    Binding probe = binding;
    for (const auto& name : ansatz_parameters(g, ansatz))
      if (!probe.count(name)) bound = false;
  }

  nlohmann::json jedges = nlohmann::json::array();
  ScalarExpr zz_sum = ScalarExpr::zero();
  for (auto e : edges) {
    if (!g.has_edge(e.first, e.second))
      raise(Errc::edge_not_in_graph, "edge " + std::to_string(e.first) + "," +
                                         std::to_string(e.second) + " is not in the graph");
    ScalarExpr expr = edge_expectation(g, ansatz, e, lightcone, strategy);
    zz_sum += expr;
    if (out_mode == "json") {
      nlohmann::json je{{"u", e.first}, {"v", e.second}, {"expr", to_json(expr)}};
      if (bound) {
        auto v = expr.eval(binding);
        je["value"] = {{"re", v.real()}, {"im", v.imag()}};
      }
      jedges.push_back(std::move(je));
    } else {
      out << "edge " << e.first << "," << e.second << ": " << expr.to_string();
      if (bound) out << " = " << format_value(expr.eval(binding));
      out << "\n";
    }
  }
  // <C> = |E|/2 - 1/2 sum <Z_u Z_v> over the requested edges
  ScalarExpr cost = ScalarExpr::constant(GaussianRational(
                        Rational(static_cast<long long>(g.edges.size()), 2))) -
                    ScalarExpr::constant(GaussianRational(Rational(1, 2))) * zz_sum;
  cost = simplify(cost);
  if (all_edges || edge_text.empty()) {
    if (out_mode == "json") {
      nlohmann::json doc{{"edges", jedges}, {"cost_expectation", to_json(cost)}};
      if (bound) {
        auto v = cost.eval(binding);
        doc["cost_value"] = {{"re", v.real()}, {"im", v.imag()}};
      }
      out << doc.dump(2) << "\n";
    } else {
      out << "<C>: " << cost.to_string();
      if (bound) out << " = " << format_value(cost.eval(binding));
      out << "\n";
    }
  } else if (out_mode == "json") {
    out << nlohmann::json{{"edges", jedges}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_formula(const std::string& graph_file, const std::string& edge_text,
                const std::string& out_mode, std::ostream& out) {
  ProblemGraph g = load_graph_file(graph_file);
  auto edge = parse_edge(edge_text);
  ScalarExpr expr = qaoa1_closed_form(g, edge);
  if (out_mode == "json")
    out << to_json(expr).dump(2) << "\n";
  else
    out << expr.to_string() << "\n";
  return 0;
}

int cmd_simplify(const std::string& in_file, const std::string& rules_text, std::size_t max_steps,
                 const std::string& out_file, std::ostream& out, std::ostream& err) {
  std::ifstream in(in_file);
  if (!in) raise(Errc::malformed_input, "cannot open '" + in_file + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::malformed_input, std::string("invalid JSON: ") + e.what());
  }
  Diagram d = diagram_from_json(j);
  std::vector<RuleId> rules = default_rule_order();
  if (!rules_text.empty()) {
    rules.clear();
    std::istringstream rs(rules_text);
    std::string item;
    while (std::getline(rs, item, ',')) {
      auto r = rule_from_name(item);
      if (!r) throw UsageError("unknown rule '" + item + "'");
      rules.push_back(*r);
    }
  }
  FixpointResult fx = simplify_fixpoint(d, rules, max_steps);
  if (fx.budget_exhausted) err << "note: step budget exhausted after " << fx.steps << " steps\n";
  nlohmann::json doc = to_json(fx.diagram);
  if (out_file.empty() || out_file == "-") {
    out << doc.dump(2) << "\n";
  } else {
    std::ofstream os(out_file);
    if (!os) raise(Errc::malformed_input, "cannot write '" + out_file + "'");
    os << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_lightcone(const std::string& graph_file, const std::string& edge_text, int p,
                  std::ostream& out) {
  ProblemGraph g = load_graph_file(graph_file);
  LightconeResult lc = lightcone_reduce(g, parse_edge(edge_text), p);
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : lc.reduced.edges) edges.push_back(nlohmann::json::array({u, v}));
  nlohmann::json map = nlohmann::json::array();
  for (std::size_t neu = 0; neu < lc.retained.size(); ++neu)
    map.push_back(nlohmann::json::array({lc.retained[neu], neu}));
  out << nlohmann::json{{"n", lc.reduced.n},
                        {"edges", edges},
                        {"edge", nlohmann::json::array({lc.edge.first, lc.edge.second})},
                        {"qubit_map", map}}
             .dump(2)
      << "\n";
  return 0;
}

int cmd_check(const std::string& graph_file, const std::string& ansatz_name, int p, int trials,
              double tol, std::uint64_t seed, bool lightcone, std::size_t budget,
              std::ostream& out, std::ostream& err) {
  ProblemGraph g = load_graph_file(graph_file);
  AnsatzSpec ansatz = make_ansatz(ansatz_name, p);
  Strategy strategy;
  strategy.term_budget = budget;
  std::mt19937_64 rng(seed);
  std::set<std::string> params;
  for (const auto& name : ansatz_parameters(g, ansatz)) params.insert(name);
  bool ok = true;
  for (auto e : g.edges) {
    ScalarExpr expr = edge_expectation(g, ansatz, e, lightcone, strategy);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      Binding binding = oracle::random_binding(params, rng);
      double symbolic = expr.eval(binding).real();
      double reference =
          oracle::statevector_z_expectation(g, ansatz, {e.first, e.second}, binding);
      worst = std::max(worst, std::abs(symbolic - reference));
    }
    out << "edge " << e.first << "," << e.second << ": max deviation " << worst
        << (worst <= tol ? " ok" : " MISMATCH") << "\n";
    if (worst > tol) ok = false;
  }
  if (!ok) {
    err << "E4: symbolic expectation disagrees with the oracle\n";
    return 4;
  }
  return 0;
}

} // namespace

double parse_angle(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw UsageError("empty angle literal");
  auto pos = s.find("pi");
  if (pos == std::string::npos) {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw UsageError("malformed angle '" + text + "'");
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("malformed angle '" + text + "'");
    }
  }
  std::string pre = s.substr(0, pos);
  std::string post = s.substr(pos + 2);
  double factor = 1.0;
  if (pre == "-")
    factor = -1.0;
  else if (!pre.empty()) {
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    try {
      std::size_t used = 0;
      factor = std::stod(pre, &used);
      if (used != pre.size()) throw UsageError("malformed angle '" + text + "'");
    } catch (const std::logic_error&) {
      throw UsageError("malformed angle '" + text + "'");
    }
  }
  if (!post.empty()) {
    if (post[0] != '/') throw UsageError("malformed angle '" + text + "'");
    try {
      std::size_t used = 0;
      double den = std::stod(post.substr(1), &used);
      if (used != post.size() - 1 || den == 0) throw UsageError("malformed angle '" + text + "'");
      factor /= den;
    } catch (const std::logic_error&) {
      throw UsageError("malformed angle '" + text + "'");
    }
  }
  return factor * std::numbers::pi;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic expectation values of parameterized quantum circuits via scalar-exact "
               "ZX rewriting"};
  app.require_subcommand(1);

  std::string graph_file, ansatz_name = "qaoa", edge_text, out_mode = "text", rules_text;
  std::string in_file, out_file;
  std::vector<std::string> binds;
  bool all_edges = false, lightcone = false;
  int p = 1, trials = 32, cone_p = 1;
  double tol = 1e-9;
  std::uint64_t seed = oracle::kDefaultSeed;
  std::size_t budget = Strategy{}.term_budget, max_steps = 100000;

  auto* expval = app.add_subcommand("expval", "Symbolic per-edge <Z_u Z_v> and <C>");
  expval->add_option("--graph", graph_file, "graph file")->required();
  expval->add_option("--ansatz", ansatz_name, "ry | qaoa | hweff");
  expval->add_option("--p", p, "layer count (qaoa)");
  expval->add_option("--edge", edge_text, "single edge U,V");
  expval->add_flag("--all-edges", all_edges, "all edges plus the <C> aggregate");
  expval->add_flag("--lightcone", lightcone, "reduce per edge before evaluating");
  expval->add_option("--bind", binds, "parameter binding name=value (repeatable)");
  expval->add_option("--out", out_mode, "text | json");
  expval->add_option("--budget", budget, "term budget");

  auto* formula = app.add_subcommand("formula", "Closed-form depth-1 <Z_u Z_v>");
  formula->add_option("--graph", graph_file, "graph file")->required();
  formula->add_option("--edge", edge_text, "edge U,V")->required();
  formula->add_option("--out", out_mode, "text | json");

  auto* simp = app.add_subcommand("simplify", "Rewrite a diagram to a fixpoint");
  simp->add_option("--in", in_file, "diagram JSON input")->required();
  simp->add_option("--rules", rules_text, "comma list of f,id,pi,c,b,h,gf,gpi");
  simp->add_option("--max-steps", max_steps, "step budget");
  simp->add_option("--out", out_file, "output file ('-' for stdout)");

  auto* cone = app.add_subcommand("lightcone", "Reduced instance for one edge");
  cone->add_option("--graph", graph_file, "graph file")->required();
  cone->add_option("--edge", edge_text, "edge U,V")->required();
  cone->add_option("--p", cone_p, "layer count");

  auto* check = app.add_subcommand("check", "Certify symbolic results against the oracle");
  check->add_option("--graph", graph_file, "graph file")->required();
  check->add_option("--ansatz", ansatz_name, "ry | qaoa | hweff");
  check->add_option("--p", p, "layer count (qaoa)");
  check->add_option("--trials", trials, "random bindings per edge");
  check->add_option("--tol", tol, "tolerance");
  check->add_option("--seed", seed, "random seed");
  check->add_flag("--lightcone", lightcone, "reduce per edge before evaluating");
  check->add_option("--budget", budget, "term budget");

  std::vector<std::string> argv_store = args;
  std::vector<const char*> argv;
  argv.push_back("zxeval");
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "E1: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(expval))
      return cmd_expval(graph_file, ansatz_name, p, edge_text, all_edges, lightcone, binds,
                        out_mode, budget, out);
    if (app.got_subcommand(formula)) return cmd_formula(graph_file, edge_text, out_mode, out);
    if (app.got_subcommand(simp))
      return cmd_simplify(in_file, rules_text, max_steps, out_file, out, err);
    if (app.got_subcommand(cone)) return cmd_lightcone(graph_file, edge_text, cone_p, out);
    if (app.got_subcommand(check))
      return cmd_check(graph_file, ansatz_name, p, trials, tol, seed, lightcone, budget, out, err);
  } catch (const UsageError& e) {
    err << "E1: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    int code = exit_code_for(e);
    err << "E" << code << ": " << e.what() << "\n";
    return code;
  }
  err << "E1: no subcommand\n";
  return 1;
}

} // namespace zxeval::cli
