#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kcut/cut_solve.hpp"
#include "kcut/kcut_lp.hpp"
#include "kcut/mincut.hpp"
#include "kcut/oracle.hpp"
#include "kcut/serialize.hpp"
#include "kcut/strength.hpp"
#include "kcut/tree_pack.hpp"
#include "kcut/verify.hpp"

namespace {

using kcut::io::Json;

constexpr int kInputError = 1;
constexpr int kInvariantViolation = 2;

// Thrown for bad user input discovered after argument parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output = "json";
  std::string out_path;
  std::string graph_path = "-";
  int k = 0;
  std::optional<double> eps;
  bool exact = false;
  bool all = false;
  std::string alpha = "1";
  std::string ks;
  int max_n = kcut::oracle::OracleLimits{}.max_n_partitions;
  long max_trees = kcut::oracle::OracleLimits{}.max_spanning_trees;
};

struct Outcome {
  Json body;
  int code = 0;
};

kcut::Graph load_graph(const std::string& path) {
  if (path == "-") return kcut::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return kcut::parse_graph(in);
}

kcut::oracle::OracleLimits limits_of(const Options& o) { return {o.max_n, o.max_trees}; }

void require_k(const kcut::Graph& g, int k) {
  if (k < 2 || k > g.vertex_count()) {
    throw InputError("--k must satisfy 2 <= k <= n = " + std::to_string(g.vertex_count()));
  }
}

Outcome run_strength(const kcut::Graph& g, const Options&) {
  if (g.vertex_count() < 2) throw InputError("strength needs at least two vertices");
  return {kcut::io::strength(kcut::strength(g))};
}

Outcome run_psp(const kcut::Graph& g, const Options&) { return {kcut::io::sequence(kcut::principal_sequence(g))}; }

Outcome run_pack(const kcut::Graph& g, const Options& o) {
  kcut::TreePacking p;
  if (o.eps) {
    kcut::PackConfig cfg;
    cfg.epsilon = *o.eps;
    auto sub = kcut::positive_part(g);
    if (sub.graph.edge_count() != g.edge_count()) throw InputError("multiplicative weights need positive capacities");
    p = kcut::mwu_pack(g, g.capacities(), cfg);
  } else {
    p = kcut::exact_pack(g, g.capacities());
  }
  Json out;
  out["method"] = o.eps ? "multiplicative-weights" : "exact";
  if (o.eps) out["epsilon"] = *o.eps;
  out["packing"] = kcut::io::packing(p);
  return {out};
}

Outcome run_lp(const kcut::Graph& g, const Options& o) {
  require_k(g, o.k);
  auto psp = kcut::principal_sequence(g);
  auto x = kcut::lp_primal(g, psp, o.k);
  auto y = kcut::lp_dual(g, psp, o.k);
  auto lag = kcut::lagrangean_value(psp, o.k);
  auto pv = kcut::verify_primal(g, x.x, o.k);
  auto dv = kcut::verify_dual(g, y);
  auto cs = kcut::check_complementary_slackness(g, x.x, y);
  Json out;
  out["k"] = o.k;
  out["primal"] = kcut::io::primal(x);
  out["dual"] = kcut::io::dual(y);
  out["lagrangean"]["b"] = kcut::io::rational(lag.b);
  out["lagrangean"]["value"] = kcut::io::rational(lag.value);
  out["certificates"]["primal_feasible"] = pv.feasible;
  out["certificates"]["dual_feasible"] = dv.feasible;
  out["certificates"]["cs"] = Json::array({cs.holds[0], cs.holds[1], cs.holds[2]});
  const bool equal = x.objective == y.objective && x.objective == lag.value;
  out["certificates"]["values_equal"] = equal;
  const bool ok = pv.feasible && dv.feasible && cs.all() && equal;
  return {out, ok ? 0 : kInvariantViolation};
}

Outcome run_solve(const kcut::Graph& g, const Options& o) {
  require_k(g, o.k);
  kcut::SolveOptions so;
  if (o.eps) {
    so.mode = kcut::SolveMode::kApprox;
    so.epsilon = *o.eps;
    if (!(*o.eps * (2 * o.k - 1) < 1)) throw InputError("--eps must be below 1/(2k-1)");
  }
  auto s = kcut::min_kcut(g, o.k, so);
  Json out;
  out["k"] = o.k;
  out["mode"] = o.eps ? "approx" : "exact";
  if (o.eps) out["epsilon"] = *o.eps;
  out["h"] = s.report.h;
  out["value"] = kcut::io::rational(s.best.value);
  out["partition"] = kcut::io::partition(s.best.partition);
  out["minimizer_count"] = s.minimizers.size();
  out["trees_scanned"] = s.report.trees;
  out["candidates"] = s.report.candidates;
  out["complete"] = s.report.complete;
  if (o.all) out["minimizers"] = kcut::io::cuts(s.minimizers);
  return {out};
}

Outcome run_enumerate(const kcut::Graph& g, const Options& o) {
  require_k(g, o.k);
  kcut::Rational alpha;
  try {
    alpha = kcut::parse_rational(o.alpha);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--alpha: ") + e.what());
  }
  if (alpha < 1) throw InputError("--alpha must be at least 1");
  auto r = kcut::enumerate_approx_kcuts(g, o.k, alpha);
  Json out;
  out["k"] = o.k;
  out["alpha"] = kcut::io::rational(alpha);
  out["h"] = r.h;
  out["lambda_k"] = kcut::io::rational(r.cuts.empty() ? kcut::Rational(0) : r.cuts.front().value);
  out["threshold"] = kcut::io::rational(r.threshold);
  out["count"] = r.cuts.size();
  out["complete"] = r.complete;
  out["cuts"] = kcut::io::cuts(r.cuts);
  return {out};
}

Outcome run_round(const kcut::Graph& g, const Options& o) {
  require_k(g, o.k);
  auto psp = kcut::principal_sequence(g);
  auto x = kcut::lp_primal(g, psp, o.k);
  auto r = kcut::round_lp(g, x);
  const kcut::Rational bound = 2 * kcut::ratio(g.vertex_count() - 1, g.vertex_count()) * x.objective;
  Json out;
  out["k"] = o.k;
  out["lp_value"] = kcut::io::rational(x.objective);
  out["value"] = kcut::io::rational(r.cut.value);
  out["partition"] = kcut::io::partition(r.cut.partition);
  out["residual_components"] = r.residual_components;
  Json isolated = Json::array();
  for (auto v : r.isolated) isolated.push_back(v + 1);
  out["isolated"] = isolated;
  out["certified"] = r.certified;
  out["bound"] = kcut::io::rational(bound);
  const bool ok = r.certified && r.cut.value <= bound && r.cut.k_achieved() >= o.k;
  out["within_bound"] = ok;
  return {out, ok ? 0 : kInvariantViolation};
}

Outcome run_approx(const kcut::Graph& g, const Options& o) {
  require_k(g, o.k);
  auto psp = kcut::principal_sequence(g);
  auto c = kcut::ravi_sinha_cut(g, psp, o.k);
  auto x = kcut::lp_primal(g, psp, o.k);
  const kcut::Rational bound = 2 * kcut::ratio(g.vertex_count() - 1, g.vertex_count()) * x.objective;
  Json out;
  out["k"] = o.k;
  out["value"] = kcut::io::rational(c.value);
  out["partition"] = kcut::io::partition(c.partition);
  out["lp_value"] = kcut::io::rational(x.objective);
  out["bound"] = kcut::io::rational(bound);
  const bool ok = c.value <= bound && c.k_achieved() >= o.k;
  out["within_bound"] = ok;
  return {out, ok ? 0 : kInvariantViolation};
}

Outcome run_mincut(const kcut::Graph& g, const Options& o) {
  if (g.vertex_count() < 2) throw InputError("mincut needs at least two vertices");
  const double eps = o.eps.value_or(1.0 / 6);
  if (!(eps > 0 && eps < 1.0 / 3)) throw InputError("--eps must lie in (0, 1/3)");
  auto r = kcut::global_mincut(g, eps);
  Json out;
  out["value"] = kcut::io::rational(r.cut.value);
  out["partition"] = kcut::io::partition(r.cut.partition);
  out["witness_tree"] = r.witness_tree < 0 ? Json(nullptr) : Json(r.witness_tree + 1);
  if (r.witness_tree >= 0) {
    out["witness_edges"] = kcut::io::edge_ids(r.packing.trees[static_cast<std::size_t>(r.witness_tree)].edges);
  }
  out["crossing_edges"] = kcut::io::edge_ids(r.crossing);
  out["trees_scanned"] = r.packing.trees.size();
  out["epsilon"] = eps;
  return {out};
}

Outcome run_oracle(const kcut::Graph& g, const Options& o) {
  auto limits = limits_of(o);
  Json out;
  if (g.vertex_count() >= 2) {
    auto s = kcut::oracle::oracle_strength(g, limits);
    out["strength"] = kcut::io::rational(s.sigma);
    out["strength_partition"] = kcut::io::partition(s.argmin);
    out["tree_packing"] = kcut::io::rational(kcut::oracle::oracle_treepack(g, limits));
  }
  if (o.k != 0) {
    require_k(g, o.k);
    auto m = kcut::oracle::oracle_min_kcut(g, o.k, limits);
    out["k"] = o.k;
    out["min_kcut"] = kcut::io::rational(m.best.value);
    out["minimizer_count"] = m.minimizers.size();
    Json parts = Json::array();
    for (const auto& p : m.minimizers) parts.push_back(kcut::io::partition(p));
    out["minimizers"] = parts;
    out["lp_value"] = kcut::io::rational(kcut::oracle::oracle_lp_value(g, o.k, limits));
  }
  return {out};
}

Outcome run_verify(const kcut::Graph& g, const Options& o) {
  kcut::VerifyOptions vo;
  std::istringstream list(o.ks);
  for (std::string item; std::getline(list, item, ',');) {
    if (item.empty()) continue;
    try {
      vo.ks.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("--k expects integers, got '" + item + "'");
    }
  }
  vo.limits = limits_of(o);
  auto report = kcut::verify_graph(g, vo);
  Json out;
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["name"] = r.name;
    row["status"] = kcut::status_name(r.status);
    row["source"] = r.oracle ? "oracle" : "certificate";
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  out["rows"] = rows;
  out["passed"] = report.count(kcut::RowStatus::kPass);
  out["failed"] = report.count(kcut::RowStatus::kFail);
  out["skipped"] = report.count(kcut::RowStatus::kSkipped);
  return {out, report.ok() ? 0 : kInvariantViolation};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kcut: graph strength, principal partitions, k-cut LP certificates and minimum k-cuts"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", o.out_path, "Write the result to this file instead of stdout");

  using Runner = Outcome (*)(const kcut::Graph&, const Options&);
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto command = [&](const std::string& name, const std::string& help, Runner run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.graph_path, "Graph file ('-' or omitted: stdin)");
    commands.emplace_back(sub, run);
    return sub;
  };
  auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", o.k, "Number of parts");
    if (required) opt->required();
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "Largest n the brute-force oracle accepts");
    sub->add_option("--max-trees", o.max_trees, "Largest spanning-tree count the oracle enumerates");
  };

  command("strength", "Graph strength and the finest minimum-strength partition", run_strength);
  command("psp", "Principal sequence of partitions", run_psp);
  auto* pack = command("pack", "Fractional spanning-tree packing (exact unless --eps)", run_pack);
  pack->add_option("--eps", o.eps, "Multiplicative-weights accuracy in (0, 1/2)");
  auto* lp = command("lp", "Closed-form primal and dual k-cut LP optima with certificates", run_lp);
  add_k(lp, true);
  auto* solve = command("solve", "Minimum k-cut via h-respecting trees of the dual packing", run_solve);
  add_k(solve, true);
  auto* exact_flag = solve->add_flag("--exact", o.exact, "Exact dual packing (default)");
  solve->add_option("--eps", o.eps, "Use multiplicative weights with this epsilon < 1/(2k-1)")->excludes(exact_flag);
  solve->add_flag("--all", o.all, "List every minimum k-cut");
  auto* enumerate = command("enumerate", "All k-cuts of value at most alpha times the optimum", run_enumerate);
  add_k(enumerate, true);
  enumerate->add_option("--alpha", o.alpha, "Approximation factor >= 1 (integer, decimal or p/q)");
  auto* round = command("round", "Round the optimal LP solution to a k-cut", run_round);
  add_k(round, true);
  auto* approx = command("approx", "Combinatorial 2-approximation from the principal sequence", run_approx);
  add_k(approx, true);
  auto* mincut = command("mincut", "Global minimum cut from 2-respecting trees", run_mincut);
  mincut->add_option("--eps", o.eps, "Packing accuracy in (0, 1/3); default 1/6");
  auto* oracle = command("oracle", "Brute-force reference values for small graphs", run_oracle);
  add_k(oracle, false);
  add_limits(oracle);
  auto* verify = command("verify", "Run every cross-check on the graph", run_verify);
  verify->add_option("--k", o.ks, "Values of k to check, comma separated (default 2..min(n,5))");
  add_limits(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  Runner run = nullptr;
  for (auto& [sub, r] : commands) {
    if (sub->parsed()) run = r;
  }

  Outcome result;
  try {
    auto g = load_graph(o.graph_path);
    result = run(g, o);
  } catch (const kcut::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const kcut::oracle::LimitExceeded& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariantViolation;
  }

  const std::string text = o.output == "tsv" ? kcut::io::to_tsv(result.body) : kcut::io::dump(result.body);
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out_path);
    if (!out) {
      std::cerr << "input error: cannot write " << o.out_path << "\n";
      return kInputError;
    }
    out << text;
  }
  if (result.code == kInvariantViolation) std::cerr << "certificate check failed\n";
  return result.code;
}
