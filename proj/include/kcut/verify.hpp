#pragma once

#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/oracle.hpp"

namespace kcut {

enum class RowStatus { kPass, kFail, kSkipped };

struct VerifyRow {
  std::string name;
  RowStatus status = RowStatus::kSkipped;
  std::string detail;
  bool oracle = false;  // compared against brute force rather than a closed form
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  int count(RowStatus s) const;
  bool ok() const { return count(RowStatus::kFail) == 0; }
};

struct VerifyOptions {
  std::vector<int> ks;  // empty: 2..min(n, 5)
  oracle::OracleLimits limits;
};

/// Runs every invariant check on g. Never throws for a valid graph: a
/// failing or crashing check becomes a failed row, and brute-force rows
/// beyond the oracle limits are skipped.
VerifyReport verify_graph(const Graph& g, const VerifyOptions& options = {});

const char* status_name(RowStatus s);

}  // namespace kcut
