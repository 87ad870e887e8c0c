#include "bpc/simplex.hpp"

#include <sstream>

#include "bpc/errors.hpp"

namespace bpc {

SimplexResult solve_simplex(const LinearProgram& lp, int max_iterations, double tolerance) {
  const auto m = lp.a.rows();
  const auto n = lp.a.cols();
  if (lp.b.size() != m || lp.c.size() != n) throw ParameterError("simplex: shape mismatch");
  if (m > 0 && lp.b.minCoeff() < 0) throw ParameterError("simplex: right-hand side must be nonnegative");

  // Rows 0..m-1 are constraints, row m holds reduced costs c_j - z_j;
  // the last column is the right-hand side.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  t.topLeftCorner(m, n) = lp.a;
  t.block(0, n, m, m).setIdentity();
  t.col(n + m).head(m) = lp.b;
  t.row(m).head(n) = lp.c.transpose();

  SimplexResult out;
  out.basis.resize(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) out.basis[static_cast<std::size_t>(i)] = static_cast<int>(n + i);

  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (t(m, j) > tolerance) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    if (out.iterations >= max_iterations) {
      std::ostringstream msg;
      msg << "simplex: iteration cap " << max_iterations << " reached (" << m << " rows, " << n
          << " columns, objective " << -t(m, n + m) << ")";
      throw InternalError(msg.str());
    }

    Eigen::Index leave = -1;
    double best_ratio = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= tolerance) continue;
      const double ratio = t(i, n + m) / t(i, enter);
      const bool better = leave < 0 || ratio < best_ratio - tolerance ||
                          (ratio <= best_ratio + tolerance &&
                           out.basis[static_cast<std::size_t>(i)] < out.basis[static_cast<std::size_t>(leave)]);
      if (better) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw InternalError("simplex: unbounded");

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i != leave && t(i, enter) != 0.0) t.row(i) -= t(i, enter) * t.row(leave);
    }
    out.basis[static_cast<std::size_t>(leave)] = static_cast<int>(enter);
    ++out.iterations;
  }

  out.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int var = out.basis[static_cast<std::size_t>(i)];
    if (var < n) out.x(var) = t(i, n + m);
  }
  out.duals = -t.row(m).segment(n, m).transpose();
  out.objective = lp.c.dot(out.x);
  out.optimal = true;
  return out;
}

}  // namespace bpc
