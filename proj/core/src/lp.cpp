#include "idiag/lp.hpp"

#include <optional>
#include <utility>

#include "idiag/error.hpp"

namespace idiag::lp {

void Problem::add(Vector coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != num_vars)
    throw Error(ErrorCode::DimensionMismatch, "constraint width does not match variable count");
  constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t cols) : cols_(cols) {}

  void add_row(Vector row, std::size_t basic) {
    rows_.push_back(std::move(row));
    basis_.push_back(basic);
  }

  std::size_t rows() const { return rows_.size(); }
  const Rational& rhs(std::size_t r) const { return rows_[r][cols_]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  /// Maximizes cost over columns with allowed[c]; Bland's rule.
  Status maximize(const Vector& cost, const std::vector<bool>& allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (rows_[i][j] != 0) d -= cost[basis_[i]] * rows_[i][j];
        if (d > 0) entering = j;
      }
      if (!entering) return Status::Optimal;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][c] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][c];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      if (!leaving) return Status::Unbounded;
      pivot(*leaving, c);
    }
  }

  Rational value(const Vector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rows_[i][cols_];
    return v;
  }

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  if (!problem.objective.empty() && problem.objective.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "objective width does not match variable count");

  // Normalize to nonnegative right-hand sides and count auxiliary columns.
  struct Row {
    Vector coeffs;
    Relation rel;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(problem.constraints.size());
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& c : problem.constraints) {
    Row r{c.coeffs, c.relation, c.rhs};
    if (r.rhs < 0) {
      for (auto& x : r.coeffs) x = -x;
      r.rhs = -r.rhs;
      if (r.rel == Relation::LessEqual) r.rel = Relation::GreaterEqual;
      else if (r.rel == Relation::GreaterEqual) r.rel = Relation::LessEqual;
    }
    if (r.rel != Relation::Equal) ++slack_count;
    if (r.rel != Relation::LessEqual) ++artificial_count;
    rows.push_back(std::move(r));
  }

  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  const std::size_t cols = first_artificial + artificial_count;
  Tableau tab(cols);
  std::size_t next_slack = first_slack, next_artificial = first_artificial;
  for (auto& r : rows) {
    Vector row(cols + 1, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = r.coeffs[j];
    row[cols] = r.rhs;
    std::size_t basic = 0;
    switch (r.rel) {
      case Relation::LessEqual:
        row[next_slack] = 1;
        basic = next_slack++;
        break;
      case Relation::GreaterEqual:
        row[next_slack++] = -1;
        row[next_artificial] = 1;
        basic = next_artificial++;
        break;
      case Relation::Equal:
        row[next_artificial] = 1;
        basic = next_artificial++;
        break;
    }
    tab.add_row(std::move(row), basic);
  }

  std::vector<bool> allowed(cols, true);
  if (artificial_count > 0) {
    Vector phase1(cols, 0);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    tab.maximize(phase1, allowed);
    if (tab.value(phase1) < 0) return {Status::Infeasible, 0, {}};

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basic(i) < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial && !col; ++j)
        if (tab.at(i, j) != 0) col = j;
      if (col) {
        tab.pivot(i, *col);
        ++i;
      } else {
        tab.erase_row(i);
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  Vector cost(cols, 0);
  for (std::size_t j = 0; j < problem.objective.size(); ++j) cost[j] = problem.objective[j];
  Solution sol;
  sol.status = tab.maximize(cost, allowed);
  if (sol.status == Status::Unbounded) return sol;
  sol.value = tab.value(cost);
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basic(i) < n) sol.x[tab.basic(i)] = tab.rhs(i);
  return sol;
}

}  // namespace idiag::lp
