#pragma once

// Small dense two-phase primal simplex with Bland's anti-cycling rule.
//
//   minimize  c^T x   subject to  rows (<=, =, >=) rhs,  x >= 0
//
// Intended for problems with at most a few hundred rows and columns.

#include <string>
#include <vector>

namespace cyclecodes::lp {

enum class Sense { less_equal, equal, greater_equal };

struct Constraint {
  std::vector<double> coeffs;
  Sense sense = Sense::less_equal;
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<double> objective;
  std::vector<Constraint> rows;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(Status s);

struct SimplexOptions {
  double pivot_tol = 1e-11;
  double feasibility_tol = 1e-9;
  int max_iterations = 200000;
  /// Recompute the optimal basic solution from the original data.
  bool refine = true;
};

struct SimplexResult {
  Status status = Status::iteration_limit;
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
  std::string diagnostics;
};

/// Holds its tableau workspace; use one solver per thread.
class SimplexSolver {
 public:
  explicit SimplexSolver(SimplexOptions opts = {}) : opts_(opts) {}

  SimplexResult solve(const LinearProgram& problem);

 private:
  bool pivot_loop(std::vector<double>& cost_row, int n_active, int& iterations);
  void pivot(int row, int col);

  SimplexOptions opts_;
  int rows_ = 0;
  int cols_ = 0;                 // structural + slack + artificial columns
  std::vector<double> tab_;      // rows_ x (cols_ + 1), last column is rhs
  std::vector<int> basis_;

  double& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
};

}  // namespace cyclecodes::lp
