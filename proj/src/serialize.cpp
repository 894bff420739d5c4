#include "kcut/serialize.hpp"

namespace kcut::io {

Json rational(const Rational& value) { return to_string(value); }

Json rationals(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json partition(const VertexPartition& p) {
  Json out = Json::array();
  for (const auto& part : p.parts()) {
    Json ids = Json::array();
    for (VertexId v : part) ids.push_back(v + 1);
    out.push_back(std::move(ids));
  }
  return out;
}

Json edge_ids(std::span<const EdgeId> edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back(e + 1);
  return out;
}

Json cut(const CutResult& c) {
  Json out;
  out["value"] = rational(c.value);
  out["parts"] = c.k_achieved();
  out["partition"] = partition(c.partition);
  return out;
}

Json cuts(std::span<const CutResult> cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(cut(c));
  return out;
}

Json packing(const TreePacking& p) {
  Json out;
  out["exact"] = p.exact;
  out["total_value"] = rational(p.total_value);
  if (!p.exact) {
    out["approx_value"] = p.approx_value;
    out["iterations"] = p.iterations;
  }
  Json trees = Json::array();
  for (const auto& t : p.trees) {
    Json tree;
    tree["edges"] = edge_ids(t.edges);
    tree["weight"] = rational(t.weight);
    trees.push_back(std::move(tree));
  }
  out["trees"] = std::move(trees);
  out["loads"] = rationals(p.loads);
  out["capacities"] = rationals(p.capacities);
  return out;
}

Json strength(const StrengthResult& s) {
  Json out;
  out["strength"] = rational(s.sigma);
  out["partition"] = partition(s.partition);
  return out;
}

Json sequence(const PrincipalSequence& psp) {
  Json out;
  out["base"] = partition(psp.base);
  Json levels = Json::array();
  for (const auto& level : psp.levels) {
    Json l;
    l["lambda"] = rational(level.lambda);
    l["kappa"] = level.kappa;
    l["cut_value"] = rational(level.cut_value);
    l["partition"] = partition(level.partition);
    l["increment"] = edge_ids(level.increment);
    levels.push_back(std::move(l));
  }
  out["levels"] = std::move(levels);
  return out;
}

Json primal(const PrimalSolution& x) {
  Json out;
  out["value"] = rational(x.objective);
  out["level"] = x.level;
  out["alpha"] = rational(x.alpha);
  out["x"] = rationals(x.x);
  return out;
}

Json dual(const DualSolution& d) {
  Json out;
  out["value"] = rational(d.objective);
  out["mode"] = d.mode == DualMode::kExplicit ? "explicit" : "lazy";
  out["tree_total"] = rational(d.tree_total);
  out["z"] = rationals(d.z);
  if (d.mode == DualMode::kExplicit) {
    Json trees = Json::array();
    for (const auto& t : d.packing.trees) {
      Json tree;
      tree["edges"] = edge_ids(t.edges);
      tree["weight"] = rational(t.weight);
      trees.push_back(std::move(tree));
    }
    out["trees"] = std::move(trees);
  }
  out["loads"] = rationals(d.loads);
  return out;
}

Json respect(const RespectStats& s) {
  Json out;
  out["h"] = s.h;
  out["q"] = rational(s.q);
  out["min_crossing"] = s.min_crossing;
  if (s.bound) out["bound"] = rational(*s.bound);
  out["cut_edges"] = edge_ids(s.cut_edges);
  out["crossings"] = s.crossings;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    if (j.empty()) {
      out += path + "\t\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i + 1), out);
  } else {
    out += path;
    out += '\t';
    out += j.is_string() ? j.get<std::string>() : j.dump();
    out += '\n';
  }
}

}  // namespace

std::string to_tsv(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace kcut::io
