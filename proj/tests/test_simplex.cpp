#include <gtest/gtest.h>

#include <random>

#include "bpc/errors.hpp"
#include "bpc/simplex.hpp"

using namespace bpc;

TEST(Simplex, TextbookProblem) {
  // max 3x + 5y; x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36.
  LinearProgram lp;
  lp.a.resize(3, 2);
  lp.a << 1, 0, 0, 2, 3, 2;
  lp.b.resize(3);
  lp.b << 4, 12, 18;
  lp.c.resize(2);
  lp.c << 3, 5;
  auto r = solve_simplex(lp);
  EXPECT_NEAR(r.objective, 36.0, 1e-9);
  EXPECT_NEAR(r.x(0), 2.0, 1e-9);
  EXPECT_NEAR(r.x(1), 6.0, 1e-9);
  EXPECT_NEAR(r.duals.dot(lp.b), 36.0, 1e-9);
}

TEST(Simplex, FractionalKnapsack) {
  // One row 0.2 (x1 + x2 + x3) <= 0.5 plus xi <= 1.
  LinearProgram lp;
  lp.a = Eigen::MatrixXd::Zero(4, 3);
  lp.a.row(0).setConstant(0.2);
  lp.a.bottomRows(3).setIdentity();
  lp.b = Eigen::VectorXd::Ones(4);
  lp.b(0) = 0.5;
  lp.c = Eigen::VectorXd::Ones(3);
  auto r = solve_simplex(lp);
  EXPECT_NEAR(r.objective, 2.5, 1e-9);
}

TEST(Simplex, RejectsNegativeRhs) {
  LinearProgram lp;
  lp.a = Eigen::MatrixXd::Ones(1, 1);
  lp.b = Eigen::VectorXd::Constant(1, -1.0);
  lp.c = Eigen::VectorXd::Ones(1);
  EXPECT_THROW((void)solve_simplex(lp), ParameterError);
}

TEST(Simplex, UnboundedAndCap) {
  LinearProgram lp;
  lp.a = Eigen::MatrixXd::Zero(1, 2);
  lp.a(0, 0) = 1;
  lp.b = Eigen::VectorXd::Ones(1);
  lp.c = Eigen::VectorXd::Ones(2);
  EXPECT_THROW((void)solve_simplex(lp), InternalError);
  lp.a(0, 1) = 1;
  EXPECT_THROW((void)solve_simplex(lp, 0), InternalError);
}

TEST(Simplex, StrongDualityOnRandomPackingLps) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int round = 0; round < 300; ++round) {
    const int m = 1 + static_cast<int>(rng() % 8), n = 1 + static_cast<int>(rng() % 10);
    LinearProgram lp;
    lp.a = Eigen::MatrixXd::Zero(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) lp.a(i, j) = u(rng) < 0.5 ? 0.0 : u(rng);
    }
    lp.a.row(0).setConstant(1.0);  // keeps the LP bounded
    lp.b = Eigen::VectorXd::NullaryExpr(m, [&] { return u(rng); });
    lp.c = Eigen::VectorXd::NullaryExpr(n, [&] { return u(rng); });
    auto r = solve_simplex(lp);
    EXPECT_GE(r.x.minCoeff(), -1e-9);
    EXPECT_LE(((lp.a * r.x) - lp.b).maxCoeff(), 1e-9);
    EXPECT_GE(r.duals.minCoeff(), -1e-9);
    EXPECT_GE((lp.a.transpose() * r.duals - lp.c).minCoeff(), -1e-9);
    EXPECT_NEAR(r.duals.dot(lp.b), r.objective, 1e-7);
  }
}
