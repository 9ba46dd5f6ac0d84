#pragma once

#include <vector>

#include "spectrograph/spectral.hpp"

namespace spectrograph {

struct AnomalyReport {
  /// |x_h| per node.
  Eigen::VectorXd scores;
  /// Node indices by descending score; ties keep index order.
  std::vector<Index> ranking;
  /// mean(scores) + threshold_sigma * stddev(scores) (population stddev).
  double threshold = 0.0;
  /// Nodes whose score exceeds the threshold (and 1e-9 ||x||_2, so rounding
  /// noise is never flagged), in ranking order.
  std::vector<Index> flagged;
};

AnomalyReport anomaly_scan(const SpectralDecomposition& d, const GraphSignal& x,
                           double threshold_sigma = 2.0);

}  // namespace spectrograph
