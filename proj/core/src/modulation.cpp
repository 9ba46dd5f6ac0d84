#include "spectrograph/modulation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spectrograph/analytic.hpp"
#include "spectrograph/error.hpp"
#include "spectrograph/logging.hpp"

namespace spectrograph {
namespace {

constexpr double kPi = std::numbers::pi;

double wrapped_arg(Complex z) {
  if (z == Complex(0.0, 0.0)) return 0.0;
  const double angle = std::arg(z);
  // atan2 returns -pi for a negative real with a negative-zero imaginary part.
  return angle == -kPi ? kPi : angle;
}

}  // namespace

ModulationProfile demodulate(const AdjacencyMatrix& a, const SpectralDecomposition& d,
                             const GraphSignal& x) {
  if (a.size() != d.size() || x.size() != a.size()) {
    throw Error(ErrorCode::DimensionMismatch, "demodulate: graph, decomposition and signal sizes differ");
  }
  const double radius = d.eigenvalues().cwiseAbs().maxCoeff();
  if (std::abs(radius - 1.0) > 1e-6) {
    log::warn("demodulate: spectral radius is " + std::to_string(radius) +
              ", FM assumes a graph normalized to radius 1");
  }

  const AnalyticSignal analytic = analytic_signal(d, x);
  ModulationProfile profile;
  const Index n = x.size();
  profile.am.resize(n);
  profile.pm.resize(n);
  for (Index i = 0; i < n; ++i) {
    profile.am(i) = std::abs(analytic.values(i));
    profile.pm(i) = wrapped_arg(analytic.values(i));
  }
  profile.unwrapped = unwrap_phase(profile.pm);
  profile.fm = profile.unwrapped - a.matrix() * profile.unwrapped;
  return profile;
}

Eigen::VectorXd unwrap_phase(const Eigen::VectorXd& pm) {
  Eigen::VectorXd out(pm.size());
  if (pm.size() == 0) return out;
  constexpr double kTwoPi = 2.0 * kPi;
  double turns = 0.0;
  out(0) = pm(0);
  for (Index i = 1; i < pm.size(); ++i) {
    const double step = pm(i) - pm(i - 1);
    // Whole turns that bring step + 2 pi (turns delta) into (-pi, pi].
    double correction = -std::round(step / kTwoPi);
    if (step + kTwoPi * correction <= -kPi) correction += 1.0;
    if (step + kTwoPi * correction > kPi) correction -= 1.0;
    turns += correction;
    out(i) = pm(i) + kTwoPi * turns;
  }
  return out;
}

Eigen::VectorXd demod_features(const ModulationProfile& profile, const SpectralDecomposition& d) {
  const Index n = d.size();
  if (profile.am.size() != n || profile.fm.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "demod_features: profile does not match decomposition");
  }
  Eigen::VectorXd features(2 * n);
  features.head(n) = gft(d, profile.am).cwiseAbs();
  features.tail(n) = gft(d, profile.fm).cwiseAbs();
  return features;
}

std::vector<Index> nodes_without_shift_input(const AdjacencyMatrix& a) {
  std::vector<Index> nodes;
  for (Index i = 0; i < a.size(); ++i) {
    if (a.matrix().row(i).isZero(0.0)) nodes.push_back(i);
  }
  return nodes;
}

}  // namespace spectrograph
