#pragma once

#include <string>

#include "json.hpp"
#include "kcut/cut_solve.hpp"
#include "kcut/graph.hpp"
#include "kcut/kcut_lp.hpp"
#include "kcut/mincut.hpp"
#include "kcut/strength.hpp"
#include "kcut/tree_pack.hpp"

// JSON views of the library types. Rationals become "p/q" strings;
// vertex and edge ids are 1-based, matching the input file.
namespace kcut::io {

using Json = nlohmann::ordered_json;

Json rational(const Rational& value);
Json rationals(std::span<const Rational> values);
Json partition(const VertexPartition& p);
Json edge_ids(std::span<const EdgeId> edges);
Json cut(const CutResult& c);
Json cuts(std::span<const CutResult> cs);
Json packing(const TreePacking& p);
Json strength(const StrengthResult& s);
Json sequence(const PrincipalSequence& psp);
Json primal(const PrimalSolution& x);
Json dual(const DualSolution& d);
Json respect(const RespectStats& s);

/// Deterministic text: two-space indentation, keys in insertion order.
std::string dump(const Json& j);
/// One "path<TAB>value" line per scalar; array indices are 1-based path
/// components.
std::string to_tsv(const Json& j);

}  // namespace kcut::io
