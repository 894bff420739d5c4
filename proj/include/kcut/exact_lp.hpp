#pragma once

#include <utility>
#include <vector>

#include "kcut/rational.hpp"

namespace kcut {

/// Exact rational simplex for
///
///     maximize  cost . y   subject to  A y <= rhs,  y >= 0,  rhs >= 0
///
/// stored column-wise so columns can be appended between solves (column
/// generation). The slack basis is the starting point; the current basis is
/// kept across calls, so a solve after add_column resumes where it stopped.
///
/// Pivoting uses the largest reduced cost, switching to Bland's smallest
/// index rule during runs of degenerate pivots, which rules out cycling.
class ExactLp {
 public:
  using Entry = std::pair<int, Rational>;  // (row, coefficient)

  enum class Status { kOptimal, kUnbounded };

  explicit ExactLp(std::vector<Rational> rhs);

  int row_count() const { return static_cast<int>(rhs_.size()); }
  int column_count() const { return static_cast<int>(columns_.size()); }

  /// Returns the new column index.
  int add_column(Rational cost, std::vector<Entry> entries);

  Status solve();

  Rational objective() const;
  /// Primal value of a structural column at the current basis.
  Rational value(int column) const;
  std::vector<Rational> values() const;
  /// Row duals (simplex multipliers) at the current basis; nonnegative at an
  /// optimum of this problem class.
  std::vector<Rational> duals() const;
  long pivots() const { return pivots_; }

 private:
  struct Column {
    Rational cost;
    std::vector<Entry> entries;
  };

  // Variable ids: 0..rows-1 are slacks, rows+j is structural column j.
  bool is_slack(int var) const { return var < row_count(); }
  Rational var_cost(int var) const;
  std::vector<Rational> column_of(int var) const;  // B^{-1} a_var
  std::vector<Rational> multipliers() const;

  std::vector<Rational> rhs_;
  std::vector<Column> columns_;
  std::vector<std::vector<Rational>> basis_inverse_;
  std::vector<int> basis_;  // basic variable per row
  std::vector<Rational> basic_values_;
  std::vector<int> position_;  // var -> row in basis or -1
  long pivots_ = 0;
};

}  // namespace kcut
