#pragma once

#include "spectrograph/spectral.hpp"

namespace spectrograph {

/// Columns are graph-signal exemplars (rows = nodes).
using SignalMatrix = Eigen::MatrixXd;

struct LearnedAdjacency {
  AdjacencyMatrix adjacency;
  /// ||X - A X||_F^2 + ridge ||A||_F^2 at the solution.
  double objective = 0.0;
  /// Stationarity residual of the KKT system relative to its right-hand side.
  double kkt_residual = 0.0;
  /// Largest absolute violation of diag(A) = 0, A 1 = 1, A^T 1 = 1.
  double constraint_residual = 0.0;
};

/// argmin ||X - A X||_F^2 + ridge ||A||_F^2 subject to diag(A) = 0,
/// A 1 = 1 and A^T 1 = 1, from the KKT system of the vectorized problem.
/// The Hessian is block diagonal (one block per row of A), so the system is
/// reduced to a (2n - 1) x (2n - 1) Schur complement in the multipliers; one
/// column-sum constraint is dropped because it is implied by the others.
///
/// n = 2 is fully determined by the constraints and returns [[0, 1], [1, 0]].
/// Throws InfeasibleDimensions for n < 2, NonFinite for bad data, and
/// SingularSystem when a Hessian block is singular (typically ridge = 0 with
/// fewer exemplars than nodes); pass a small ridge in that case.
LearnedAdjacency learn_adjacency(const SignalMatrix& x, double ridge = 0.0);

}  // namespace spectrograph
