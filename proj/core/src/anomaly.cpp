#include "spectrograph/anomaly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectrograph/analytic.hpp"
#include "spectrograph/error.hpp"

namespace spectrograph {
namespace {
constexpr double kNoiseFloor = 1e-9;
}  // namespace

AnomalyReport anomaly_scan(const SpectralDecomposition& d, const GraphSignal& x,
                           double threshold_sigma) {
  if (!std::isfinite(threshold_sigma)) {
    throw Error(ErrorCode::InvalidArgument, "threshold_sigma must be finite");
  }
  AnomalyReport report;
  report.scores = hilbert_transform(d, x).cwiseAbs();

  const Index n = report.scores.size();
  report.ranking.resize(static_cast<std::size_t>(n));
  std::iota(report.ranking.begin(), report.ranking.end(), Index{0});
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [&](Index lhs, Index rhs) { return report.scores(lhs) > report.scores(rhs); });

  const double mean = report.scores.mean();
  const double stddev = std::sqrt((report.scores.array() - mean).square().mean());
  report.threshold = mean + threshold_sigma * stddev;
  // Scores at rounding level carry no structure; never flag them.
  const double floor = kNoiseFloor * x.norm();
  for (Index node : report.ranking) {
    if (report.scores(node) > report.threshold && report.scores(node) > floor) {
      report.flagged.push_back(node);
    }
  }
  return report;
}

}  // namespace spectrograph
