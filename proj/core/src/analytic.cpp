#include "spectrograph/analytic.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "spectrograph/error.hpp"

namespace spectrograph {
namespace {

constexpr Complex kJ(0.0, 1.0);

void require_size(const SpectralDecomposition& d, Index n, const char* what) {
  if (n != d.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": signal length " + std::to_string(n) +
                    " does not match graph size " + std::to_string(d.size()));
  }
}

void require_finite(const GraphSignal& x, const char* what) {
  if (!x.allFinite()) {
    throw Error(ErrorCode::NonFinite, std::string(what) + ": signal contains NaN or Inf");
  }
}

// Real part of V J_h V^-1 x after checking the imaginary residue.
GraphSignal real_hilbert(const SpectralDecomposition& d, const GraphSignal& x,
                         const TransformOptions& options) {
  const Eigen::VectorXcd full = apply_hilbert_operator(d, x.cast<Complex>());
  const double bound =
      std::max(options.imag_tolerance,
               64.0 * std::numeric_limits<double>::epsilon() * d.condition_estimate()) *
      x.norm();
  const double residue = full.imag().cwiseAbs().maxCoeff();
  if (residue > bound) {
    throw Error(ErrorCode::NumericalResidue,
                "Hilbert transform has imaginary residue " + std::to_string(residue) +
                    " above bound " + std::to_string(bound));
  }
  return full.real();
}

}  // namespace

Eigen::VectorXcd hilbert_mask(const SpectralDecomposition& d) {
  Eigen::VectorXcd mask = Eigen::VectorXcd::Zero(d.size());
  for (Index i : d.gamma2()) mask(i) = -kJ;
  for (Index i : d.gamma4()) mask(i) = kJ;
  return mask;
}

Eigen::VectorXcd apply_hilbert_operator(const SpectralDecomposition& d, const Eigen::VectorXcd& z) {
  require_size(d, z.size(), "hilbert");
  const SpectrumVector spectrum = d.solve(z);
  return d.basis() * hilbert_mask(d).cwiseProduct(spectrum);
}

Eigen::VectorXcd apply_analytic_operator(const SpectralDecomposition& d, const Eigen::VectorXcd& z) {
  return z + kJ * apply_hilbert_operator(d, z);
}

AnalyticSignal analytic_signal(const SpectralDecomposition& d, const GraphSignal& x,
                               const TransformOptions& options) {
  require_size(d, x.size(), "analytic_signal");
  require_finite(x, "analytic_signal");
  AnalyticSignal out;
  out.source = x;
  out.hilbert = real_hilbert(d, x, options);
  out.values.resize(x.size());
  for (Index i = 0; i < x.size(); ++i) out.values(i) = Complex(x(i), out.hilbert(i));
  return out;
}

GraphSignal hilbert_transform(const SpectralDecomposition& d, const GraphSignal& x,
                              const TransformOptions& options) {
  require_size(d, x.size(), "hilbert_transform");
  require_finite(x, "hilbert_transform");
  return real_hilbert(d, x, options);
}

}  // namespace spectrograph
