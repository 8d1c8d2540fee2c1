#include "ssbchoice/simplex.hpp"

#include <optional>

namespace ssbchoice::lp {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return rows_.empty() ? 0 : rows_.front().size(); }

  /// Installs objective `cost` (maximize) and prices out the current basis.
  void set_objective(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_ = cost;
    value_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < reduced_.size(); ++j) reduced_[j] -= cb * rows_[i][j];
      value_ += cb * rhs_[i];
    }
  }

  /// Runs Bland-rule pivots restricted to columns < `usable`. Returns false if
  /// the objective is unbounded.
  bool optimize(std::size_t usable) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable; ++j)
        if (reduced_[j] > 0) {
          entering = j;
          break;
        }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& coeff = rows_[i][*entering];
        if (coeff <= 0) continue;
        Rational ratio = rhs_[i] / coeff;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    ++pivots_;
    const Rational inv = 1 / rows_[r][col];
    for (auto& e : rows_[r]) e *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][col] == 0) continue;
      const Rational factor = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
      rhs_[i] -= factor * rhs_[r];
    }
    if (reduced_[col] != 0) {
      const Rational factor = reduced_[col];
      for (std::size_t j = 0; j < reduced_.size(); ++j)
        if (rows_[r][j] != 0) reduced_[j] -= factor * rows_[r][j];
      value_ += factor * rhs_[r];
    }
    basis_[r] = col;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void truncate_columns(std::size_t keep) {
    for (auto& row : rows_) row.resize(keep);
  }

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& value() const { return value_; }
  std::size_t pivots() const { return pivots_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  Rational value_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace

Solution solve(const StandardForm& problem) {
  const std::size_t rows = problem.a.size();
  const std::size_t n = problem.c.size();
  if (problem.b.size() != rows) throw std::invalid_argument("rhs length does not match row count");
  for (const auto& row : problem.a)
    if (row.size() != n) throw std::invalid_argument("constraint row has wrong width");

  // Phase 1: one artificial per row, rows flipped so the rhs is nonnegative.
  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(n + rows, Rational(0)));
  std::vector<Rational> rhs(rows);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = problem.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = flip ? Rational(-problem.a[i][j]) : problem.a[i][j];
    rhs[i] = flip ? Rational(-problem.b[i]) : problem.b[i];
    tab[i][n + i] = 1;
    basis[i] = n + i;
  }
  Tableau tableau(std::move(tab), std::move(rhs), std::move(basis));

  std::vector<Rational> phase1_cost(n + rows, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) phase1_cost[n + i] = -1;
  tableau.set_objective(phase1_cost);
  tableau.optimize(n + rows);

  Solution solution;
  if (tableau.value() < 0) {
    solution.status = Status::Infeasible;
    solution.pivots = tableau.pivots();
    return solution;
  }

  // Drive zero-valued artificials out of the basis; rows with no usable
  // pivot are linearly dependent and can be dropped.
  for (std::size_t i = tableau.row_count(); i-- > 0;) {
    if (tableau.basis()[i] < n) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j)
      if (tableau.rows()[i][j] != 0) {
        col = j;
        break;
      }
    if (col) tableau.pivot(i, *col);
    else tableau.drop_row(i);
  }
  tableau.truncate_columns(n);

  // Phase 2.
  tableau.set_objective(problem.c);
  if (!tableau.optimize(n)) {
    solution.status = Status::Unbounded;
    solution.pivots = tableau.pivots();
    return solution;
  }

  solution.status = Status::Optimal;
  solution.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tableau.row_count(); ++i) solution.x[tableau.basis()[i]] = tableau.rhs()[i];
  solution.objective = tableau.value();
  solution.basis = tableau.basis();
  solution.pivots = tableau.pivots();
  return solution;
}

}  // namespace ssbchoice::lp
