#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bpc {

/// maximize c'x subject to A x <= b, x >= 0, with b >= 0 (the all-slack
/// basis is feasible).
struct LinearProgram {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct SimplexResult {
  Eigen::VectorXd x;      ///< primal values of the structural variables
  Eigen::VectorXd duals;  ///< one per row, >= 0 at optimality
  double objective = 0.0;
  std::vector<int> basis;  ///< basic variable per row; >= cols means slack
  int iterations = 0;
  bool optimal = false;
};

inline constexpr double kSimplexTolerance = 1e-9;

/// Dense tableau primal simplex with Bland's rule. Returns a basic feasible
/// solution. Throws ParameterError for a negative right-hand side or
/// mismatched shapes and InternalError when `max_iterations` is hit or the
/// LP is unbounded.
[[nodiscard]] SimplexResult solve_simplex(const LinearProgram& lp, int max_iterations = 100000,
                                          double tolerance = kSimplexTolerance);

}  // namespace bpc
