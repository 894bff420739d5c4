#include "kcut/exact_lp.hpp"

#include <stdexcept>

namespace kcut {

namespace {
constexpr int kDegenerateStreakLimit = 8;
}

ExactLp::ExactLp(std::vector<Rational> rhs) : rhs_(std::move(rhs)) {
  const auto m = rhs_.size();
  for (const auto& b : rhs_) {
    if (b < 0) throw std::invalid_argument("ExactLp requires a nonnegative right-hand side");
  }
  basis_inverse_.assign(m, std::vector<Rational>(m, Rational(0)));
  basis_.resize(m);
  position_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    basis_inverse_[i][i] = 1;
    basis_[i] = static_cast<int>(i);
    position_[i] = static_cast<int>(i);
  }
  basic_values_ = rhs_;
}

int ExactLp::add_column(Rational cost, std::vector<Entry> entries) {
  for (const auto& [row, coef] : entries) {
    if (row < 0 || row >= row_count()) throw std::out_of_range("ExactLp column row out of range");
  }
  columns_.push_back(Column{std::move(cost), std::move(entries)});
  position_.push_back(-1);
  return column_count() - 1;
}

Rational ExactLp::var_cost(int var) const {
  if (is_slack(var)) return 0;
  return columns_[static_cast<std::size_t>(var - row_count())].cost;
}

std::vector<Rational> ExactLp::column_of(int var) const {
  const auto m = static_cast<std::size_t>(row_count());
  std::vector<Rational> u(m, Rational(0));
  if (is_slack(var)) {
    for (std::size_t i = 0; i < m; ++i) u[i] = basis_inverse_[i][static_cast<std::size_t>(var)];
    return u;
  }
  const auto& col = columns_[static_cast<std::size_t>(var - row_count())];
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = 0;
    for (const auto& [row, coef] : col.entries) {
      const auto& b = basis_inverse_[i][static_cast<std::size_t>(row)];
      if (sgn(b) != 0) acc += b * coef;
    }
    u[i] = acc;
  }
  return u;
}

std::vector<Rational> ExactLp::multipliers() const {
  const auto m = static_cast<std::size_t>(row_count());
  std::vector<Rational> pi(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rational cb = var_cost(basis_[i]);
    if (sgn(cb) == 0) continue;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(basis_inverse_[i][r]) != 0) pi[r] += cb * basis_inverse_[i][r];
    }
  }
  return pi;
}

ExactLp::Status ExactLp::solve() {
  const int m = row_count();
  const int total_vars = m + column_count();
  int degenerate_streak = 0;
  while (true) {
    auto pi = multipliers();
    const bool bland = degenerate_streak >= kDegenerateStreakLimit;
    int entering = -1;
    Rational best = 0;
    for (int var = 0; var < total_vars; ++var) {
      if (position_[static_cast<std::size_t>(var)] >= 0) continue;
      Rational reduced;
      if (is_slack(var)) {
        reduced = -pi[static_cast<std::size_t>(var)];
      } else {
        const auto& col = columns_[static_cast<std::size_t>(var - m)];
        reduced = col.cost;
        for (const auto& [row, coef] : col.entries) reduced -= pi[static_cast<std::size_t>(row)] * coef;
      }
      if (sgn(reduced) <= 0) continue;
      if (bland) {
        entering = var;
        break;
      }
      if (entering < 0 || reduced > best) {
        entering = var;
        best = reduced;
      }
    }
    if (entering < 0) return Status::kOptimal;

    auto u = column_of(entering);
    int leave_row = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (sgn(u[static_cast<std::size_t>(i)]) <= 0) continue;
      Rational ratio = basic_values_[static_cast<std::size_t>(i)] / u[static_cast<std::size_t>(i)];
      if (leave_row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave_row)])) {
        leave_row = i;
        best_ratio = ratio;
      }
    }
    if (leave_row < 0) return Status::kUnbounded;

    degenerate_streak = sgn(best_ratio) == 0 ? degenerate_streak + 1 : 0;

    const auto lr = static_cast<std::size_t>(leave_row);
    Rational pivot = u[lr];
    for (auto& v : basis_inverse_[lr]) v /= pivot;
    basic_values_[lr] /= pivot;
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
      if (i == lr || sgn(u[i]) == 0) continue;
      Rational factor = u[i];
      for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
        if (sgn(basis_inverse_[lr][r]) != 0) basis_inverse_[i][r] -= factor * basis_inverse_[lr][r];
      }
      basic_values_[i] -= factor * basic_values_[lr];
    }
    position_[static_cast<std::size_t>(basis_[lr])] = -1;
    basis_[lr] = entering;
    position_[static_cast<std::size_t>(entering)] = leave_row;
    ++pivots_;
  }
}

Rational ExactLp::objective() const {
  Rational total = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) total += var_cost(basis_[i]) * basic_values_[i];
  return total;
}

Rational ExactLp::value(int column) const {
  int pos = position_[static_cast<std::size_t>(row_count() + column)];
  if (pos < 0) return 0;
  return basic_values_[static_cast<std::size_t>(pos)];
}

std::vector<Rational> ExactLp::values() const {
  std::vector<Rational> out;
  out.reserve(columns_.size());
  for (int j = 0; j < column_count(); ++j) out.push_back(value(j));
  return out;
}

std::vector<Rational> ExactLp::duals() const { return multipliers(); }

}  // namespace kcut
