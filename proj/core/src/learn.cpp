#include "spectrograph/learn.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Cholesky>

#include "spectrograph/error.hpp"

namespace spectrograph {
namespace {

constexpr double kMinRcond = 1e-13;

double objective_of(const SignalMatrix& x, const Eigen::MatrixXd& a, double ridge) {
  return (x - a * x).squaredNorm() + ridge * a.squaredNorm();
}

double constraint_violation(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  double worst = a.diagonal().cwiseAbs().maxCoeff();
  worst = std::max(worst, (a * ones - ones).cwiseAbs().maxCoeff());
  worst = std::max(worst, (a.transpose() * ones - ones).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

LearnedAdjacency learn_adjacency(const SignalMatrix& x, double ridge) {
  const Index n = x.rows();
  if (n < 2) {
    throw Error(ErrorCode::InfeasibleDimensions,
                "a zero-diagonal matrix with unit row sums needs at least 2 nodes");
  }
  if (x.cols() < 1) throw Error(ErrorCode::InvalidArgument, "need at least one exemplar");
  if (!x.allFinite()) throw Error(ErrorCode::NonFinite, "signal matrix contains NaN or Inf");
  if (!(ridge >= 0.0) || !std::isfinite(ridge)) {
    throw Error(ErrorCode::InvalidArgument, "ridge must be a finite nonnegative number");
  }

  if (n == 2) {
    Eigen::MatrixXd a(2, 2);
    a << 0.0, 1.0, 1.0, 0.0;
    return {AdjacencyMatrix(a), objective_of(x, a, ridge), 0.0, 0.0};
  }

  const Eigen::MatrixXd gram = x * x.transpose();
  const Index block = n - 1;
  const Index constraints = 2 * n - 1;  // n row sums, first n - 1 column sums

  // Columns of row r's block, skipping the diagonal entry.
  auto column_at = [](Index r, Index p) { return p < r ? p : p + 1; };

  std::vector<Eigen::LLT<Eigen::MatrixXd>> factors;
  std::vector<Eigen::VectorXd> linear(static_cast<std::size_t>(n));
  std::vector<Eigen::VectorXd> base(static_cast<std::size_t>(n));
  std::vector<Eigen::MatrixXd> coupled(static_cast<std::size_t>(n));
  factors.reserve(static_cast<std::size_t>(n));

  Eigen::MatrixXd schur = Eigen::MatrixXd::Zero(constraints, constraints);
  Eigen::VectorXd schur_rhs = -Eigen::VectorXd::Ones(constraints);

  for (Index r = 0; r < n; ++r) {
    Eigen::MatrixXd hessian(block, block);
    Eigen::VectorXd f(block);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(block, constraints);
    for (Index p = 0; p < block; ++p) {
      const Index cp = column_at(r, p);
      for (Index q = 0; q < block; ++q) hessian(p, q) = 2.0 * gram(cp, column_at(r, q));
      hessian(p, p) += 2.0 * ridge;
      f(p) = 2.0 * gram(cp, r);
      e(p, r) = 1.0;
      if (cp < n - 1) e(p, n + cp) = 1.0;
    }
    factors.emplace_back(hessian);
    const auto& llt = factors.back();
    if (llt.info() != Eigen::Success || llt.rcond() < kMinRcond) {
      throw Error(ErrorCode::SingularSystem,
                  "KKT Hessian block for row " + std::to_string(r) +
                      " is singular; supply a positive ridge or more exemplars");
    }
    const auto ur = static_cast<std::size_t>(r);
    base[ur] = llt.solve(f);
    coupled[ur] = llt.solve(e);
    schur.noalias() += e.transpose() * coupled[ur];
    schur_rhs.noalias() += e.transpose() * base[ur];
    linear[ur] = std::move(f);
  }

  const Eigen::LLT<Eigen::MatrixXd> schur_llt(schur);
  if (schur_llt.info() != Eigen::Success || schur_llt.rcond() < kMinRcond) {
    throw Error(ErrorCode::SingularSystem, "KKT Schur complement is singular");
  }
  const Eigen::VectorXd multipliers = schur_llt.solve(schur_rhs);

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  double stationarity = 0.0;
  double rhs_scale = 0.0;
  for (Index r = 0; r < n; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    const Eigen::VectorXd row = base[ur] - coupled[ur] * multipliers;
    for (Index p = 0; p < block; ++p) a(r, column_at(r, p)) = row(p);
    // H a + E mu - f, with H rebuilt from its Cholesky factor.
    const Eigen::MatrixXd l = factors[ur].matrixL();
    Eigen::VectorXd grad = l * (l.transpose() * row) - linear[ur];
    for (Index p = 0; p < block; ++p) {
      const Index cp = column_at(r, p);
      grad(p) += multipliers(r);
      if (cp < n - 1) grad(p) += multipliers(n + cp);
    }
    stationarity += grad.squaredNorm();
    rhs_scale += linear[ur].squaredNorm();
  }

  LearnedAdjacency out{AdjacencyMatrix(a), objective_of(x, a, ridge),
                       std::sqrt(stationarity) / std::max(1.0, std::sqrt(rhs_scale)),
                       constraint_violation(a)};
  return out;
}

}  // namespace spectrograph
