#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "spectrograph/analytic.hpp"
#include "spectrograph/error.hpp"

namespace spectrograph {
namespace {

Index count_distinct(const Eigen::VectorXcd& values, double tolerance) {
  std::vector<Complex> seen;
  for (Index i = 0; i < values.size(); ++i) {
    const Complex v = values(i);
    const bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const Complex& s) {
      return std::abs(s - v) <= tolerance * std::max(1.0, std::abs(v));
    });
    if (!duplicate) seen.push_back(v);
  }
  return static_cast<Index>(seen.size());
}

}  // namespace

FirHilbertFilter design_fir(const SpectralDecomposition& d, int order,
                            const FirDesignOptions& options) {
  const Index n = d.size();
  if (order < 1 || order > n) {
    throw Error(ErrorCode::InvalidArgument, "FIR order must lie in [1, " + std::to_string(n) +
                                                "], got " + std::to_string(order));
  }
  const Index taps = order + 1;
  const Eigen::VectorXcd& lambda = d.eigenvalues();
  const Eigen::VectorXcd target = hilbert_mask(d);

  FirHilbertFilter filter;
  filter.taps.assign(static_cast<std::size_t>(taps), 0.0);
  if (target.isZero(0.0)) {
    filter.condition = 1.0;
    return filter;
  }

  // Row i of the complex system is (1, lambda_i, ..., lambda_i^L); stacking
  // real and imaginary parts gives a real system with the same solution set.
  Eigen::MatrixXd design(2 * n, taps);
  Eigen::VectorXd rhs(2 * n);
  for (Index i = 0; i < n; ++i) {
    Complex power(1.0, 0.0);
    for (Index l = 0; l < taps; ++l) {
      design(i, l) = power.real();
      design(n + i, l) = power.imag();
      power *= lambda(i);
    }
    rhs(i) = target(i).real();
    rhs(n + i) = target(i).imag();
  }
  if (!design.allFinite()) {
    throw Error(ErrorCode::IllConditioned, "FIR design matrix overflows at order " +
                                               std::to_string(order));
  }

  const Eigen::BDCSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const Index rank = std::min(taps, count_distinct(lambda, options.distinct_tolerance));
  filter.condition = sigma(rank - 1) > 0.0 ? sigma(0) / sigma(rank - 1)
                                           : std::numeric_limits<double>::infinity();
  if (!(filter.condition <= options.condition_cap)) {
    throw Error(ErrorCode::IllConditioned,
                "FIR design matrix condition " + std::to_string(filter.condition) +
                    " exceeds cap at order " + std::to_string(order));
  }

  const Eigen::VectorXd projected = svd.matrixU().leftCols(rank).transpose() * rhs;
  const Eigen::VectorXd solution =
      svd.matrixV().leftCols(rank) * projected.cwiseQuotient(sigma.head(rank));
  std::copy(solution.data(), solution.data() + taps, filter.taps.begin());

  Eigen::VectorXcd residual(n);
  for (Index i = 0; i < n; ++i) {
    Complex value(0.0, 0.0);
    for (Index l = taps - 1; l >= 0; --l) value = value * lambda(i) + solution(l);
    residual(i) = value - target(i);
  }
  filter.design_residual = residual.norm();
  return filter;
}

GraphSignal apply_fir(const AdjacencyMatrix& a, const FirHilbertFilter& filter, const GraphSignal& x) {
  if (x.size() != a.size()) {
    throw Error(ErrorCode::DimensionMismatch, "apply_fir: signal length does not match graph size");
  }
  if (filter.taps.empty()) return GraphSignal::Zero(x.size());
  GraphSignal y = filter.taps.back() * x;
  for (auto it = filter.taps.rbegin() + 1; it != filter.taps.rend(); ++it) {
    y = a.matrix() * y + (*it) * x;
  }
  return y;
}

}  // namespace spectrograph
