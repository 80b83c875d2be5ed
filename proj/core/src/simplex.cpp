#include "cyclecodes/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration limit";
  }
  return "unknown";
}

void SimplexSolver::pivot(int row, int col) {
  const double p = at(row, col);
  for (int c = 0; c <= cols_; ++c) at(row, c) /= p;
  at(row, col) = 1.0;
  for (int r = 0; r < rows_; ++r) {
    if (r == row) continue;
    const double f = at(r, col);
    if (f == 0.0) continue;
    for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(row, c);
    at(r, col) = 0.0;
  }
  basis_[static_cast<std::size_t>(row)] = col;
}

// Runs Bland-rule pivots for the cost vector over columns [0, n_active).
// Returns false if the problem is unbounded in that objective.
bool SimplexSolver::pivot_loop(std::vector<double>& cost, int n_active, int& iterations) {
  for (;;) {
    if (iterations >= opts_.max_iterations) return true;
    // Reduced costs d_j = c_j - c_B^T B^{-1} A_j; the tableau already holds B^{-1} A.
    int enter = -1;
    for (int j = 0; j < n_active; ++j) {
      if (std::find(basis_.begin(), basis_.end(), j) != basis_.end()) continue;
      double d = cost[static_cast<std::size_t>(j)];
      for (int r = 0; r < rows_; ++r)
        d -= cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] * at(r, j);
      if (d < -opts_.pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;

    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < rows_; ++r) {
      const double a = at(r, enter);
      if (a <= opts_.pivot_tol) continue;
      const double ratio = at(r, cols_) / a;
      if (ratio < best - 1e-15 ||
          (std::abs(ratio - best) <= 1e-15 && leave >= 0 &&
           basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave < 0) return false;
    pivot(leave, enter);
    ++iterations;
  }
}

SimplexResult SimplexSolver::solve(const LinearProgram& problem) {
  const int n = static_cast<int>(problem.objective.size());
  rows_ = static_cast<int>(problem.rows.size());
  for (const auto& row : problem.rows)
    if (row.coeffs.size() != problem.objective.size())
      throw DomainError("constraint width does not match objective");

  // Column layout: [structural | slack/surplus per inequality | artificial per row needing one].
  int n_slack = 0, n_art = 0;
  std::vector<int> slack_col(static_cast<std::size_t>(rows_), -1);
  std::vector<int> art_col(static_cast<std::size_t>(rows_), -1);
  std::vector<double> sign(static_cast<std::size_t>(rows_), 1.0);
  for (int r = 0; r < rows_; ++r) {
    const auto& row = problem.rows[static_cast<std::size_t>(r)];
    Sense sense = row.sense;
    if (row.rhs < 0.0) {
      sign[static_cast<std::size_t>(r)] = -1.0;
      if (sense == Sense::less_equal)
        sense = Sense::greater_equal;
      else if (sense == Sense::greater_equal)
        sense = Sense::less_equal;
    }
    if (sense != Sense::equal) slack_col[static_cast<std::size_t>(r)] = n + n_slack++;
    if (sense != Sense::less_equal) art_col[static_cast<std::size_t>(r)] = 0;  // fixed below
  }
  for (int r = 0; r < rows_; ++r)
    if (art_col[static_cast<std::size_t>(r)] == 0) art_col[static_cast<std::size_t>(r)] = n + n_slack + n_art++;

  cols_ = n + n_slack + n_art;
  tab_.assign(static_cast<std::size_t>(rows_) * (cols_ + 1), 0.0);
  basis_.assign(static_cast<std::size_t>(rows_), -1);

  for (int r = 0; r < rows_; ++r) {
    const auto ru = static_cast<std::size_t>(r);
    const auto& row = problem.rows[ru];
    const double sg = sign[ru];
    for (int j = 0; j < n; ++j) at(r, j) = sg * row.coeffs[static_cast<std::size_t>(j)];
    at(r, cols_) = sg * row.rhs;
    // After the sign flip a >= row carries a surplus, a <= row a slack.
    const bool is_ge = (row.sense == Sense::greater_equal) != (sg < 0.0);
    if (slack_col[ru] >= 0) at(r, slack_col[ru]) = is_ge ? -1.0 : 1.0;
    if (art_col[ru] >= 0) {
      at(r, art_col[ru]) = 1.0;
      basis_[ru] = art_col[ru];
    } else {
      basis_[ru] = slack_col[ru];
    }
  }

  const std::vector<double> initial = tab_;
  SimplexResult res;
  int iterations = 0;

  // Phase I: minimize the sum of artificials.
  if (n_art > 0) {
    std::vector<double> cost1(static_cast<std::size_t>(cols_), 0.0);
    for (int j = n + n_slack; j < cols_; ++j) cost1[static_cast<std::size_t>(j)] = 1.0;
    pivot_loop(cost1, cols_, iterations);
    double infeas = 0.0;
    for (int r = 0; r < rows_; ++r)
      if (basis_[static_cast<std::size_t>(r)] >= n + n_slack) infeas += at(r, cols_);
    if (iterations >= opts_.max_iterations) {
      res.status = Status::iteration_limit;
      res.iterations = iterations;
      res.diagnostics = "phase I hit the iteration limit";
      return res;
    }
    if (infeas > opts_.feasibility_tol) {
      res.status = Status::infeasible;
      res.iterations = iterations;
      res.diagnostics = "phase I residual " + std::to_string(infeas);
      return res;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (int r = 0; r < rows_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < n + n_slack) continue;
      int best = -1;
      double mag = opts_.pivot_tol;
      for (int j = 0; j < n + n_slack; ++j)
        if (std::abs(at(r, j)) > mag) {
          mag = std::abs(at(r, j));
          best = j;
        }
      if (best >= 0) pivot(r, best);
      // Otherwise the row is redundant; its artificial stays basic at level 0
      // and is excluded from phase II pricing.
    }
  }

  // Phase II over structural and slack columns only.
  std::vector<double> cost2(static_cast<std::size_t>(cols_), 0.0);
  std::copy(problem.objective.begin(), problem.objective.end(), cost2.begin());
  const bool bounded = pivot_loop(cost2, n + n_slack, iterations);
  res.iterations = iterations;
  if (!bounded) {
    res.status = Status::unbounded;
    res.diagnostics = "unbounded direction after " + std::to_string(iterations) + " pivots";
    return res;
  }
  if (iterations >= opts_.max_iterations) {
    res.status = Status::iteration_limit;
    res.diagnostics = "phase II hit the iteration limit";
    return res;
  }

  // The tableau drifts over many pivots; re-solve B x_B = b for the final
  // basis from the original data.
  std::vector<double> level(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) level[static_cast<std::size_t>(r)] = at(r, cols_);
  if (opts_.refine && rows_ > 0) {
    const auto stride = static_cast<std::size_t>(cols_) + 1;
    Eigen::MatrixXd basis_matrix(rows_, rows_);
    Eigen::VectorXd rhs(rows_);
    for (int r = 0; r < rows_; ++r) {
      rhs(r) = initial[static_cast<std::size_t>(r) * stride + static_cast<std::size_t>(cols_)];
      for (int k = 0; k < rows_; ++k)
        basis_matrix(r, k) = initial[static_cast<std::size_t>(r) * stride +
                                     static_cast<std::size_t>(basis_[static_cast<std::size_t>(k)])];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (lu.isInvertible()) {
      Eigen::VectorXd xb = lu.solve(rhs);
      xb += lu.solve(rhs - basis_matrix * xb);
      for (int r = 0; r < rows_; ++r) level[static_cast<std::size_t>(r)] = xb(r);
    }
  }

  res.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < rows_; ++r) {
    const int b = basis_[static_cast<std::size_t>(r)];
    if (b < n) res.x[static_cast<std::size_t>(b)] = std::max(0.0, level[static_cast<std::size_t>(r)]);
  }
  res.objective = 0.0;
  for (int j = 0; j < n; ++j)
    res.objective += problem.objective[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
  res.status = Status::optimal;
  res.diagnostics = std::to_string(iterations) + " pivots";
  return res;
}

}  // namespace cyclecodes::lp
