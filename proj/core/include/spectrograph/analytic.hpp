#pragma once

#include <vector>

#include "spectrograph/spectral.hpp"

namespace spectrograph {

/// x_a = x + j x_h, with a spectrum that vanishes on the lower-half-plane
/// eigenvalues.
struct AnalyticSignal {
  Eigen::VectorXcd values;
  GraphSignal hilbert;
  GraphSignal source;
};

struct TransformOptions {
  /// Bound on the imaginary residue of V J_h V^-1 x, relative to ||x||_2.
  /// The effective bound is max(imag_tolerance, 64 eps cond(V)) so that
  /// poorly conditioned bases are not rejected for unavoidable rounding.
  double imag_tolerance = 1e-9;
};

/// Diagonal of the spectral Hilbert mask J_h: -j on upper complex
/// eigenvalues, +j on lower ones, 0 on real ones.
Eigen::VectorXcd hilbert_mask(const SpectralDecomposition& d);

/// The linear operator V J_h V^-1 applied to an arbitrary complex vector.
Eigen::VectorXcd apply_hilbert_operator(const SpectralDecomposition& d, const Eigen::VectorXcd& z);

/// The analytic operator I + j H applied to an arbitrary complex vector.
Eigen::VectorXcd apply_analytic_operator(const SpectralDecomposition& d, const Eigen::VectorXcd& z);

/// Doubles the spectrum on Gamma_2, keeps Gamma_1 and Gamma_3, zeroes Gamma_4.
/// Re(values) is bit-identical to x. Throws NumericalResidue if the Hilbert
/// part comes out measurably complex.
AnalyticSignal analytic_signal(const SpectralDecomposition& d, const GraphSignal& x,
                               const TransformOptions& options = {});

/// x_h = V J_h V^-1 x, truncated to its real part after the residue check.
GraphSignal hilbert_transform(const SpectralDecomposition& d, const GraphSignal& x,
                              const TransformOptions& options = {});

/// Polynomial approximation h(A) = sum_l taps[l] A^l of the Hilbert transform.
struct FirHilbertFilter {
  std::vector<double> taps;
  /// ||h(lambda) - c||_2 over all eigenvalues, c being the mask targets.
  double design_residual = 0.0;
  /// s_max / s_r of the realified design matrix, r = min(L + 1, #distinct lambda).
  double condition = 0.0;

  int order() const noexcept { return static_cast<int>(taps.size()) - 1; }
};

struct FirDesignOptions {
  double condition_cap = 1e12;
  /// Relative distance under which two eigenvalues count as one node of the
  /// Vandermonde system.
  double distinct_tolerance = 1e-9;
};

/// Least-squares taps h_0..h_L with h(lambda_i) = 0 on real eigenvalues,
/// -j on Gamma_2 and +j on Gamma_4. The system is solved in realified form so
/// the taps are real; when L + 1 exceeds the number of distinct eigenvalues
/// the minimum-norm solution is returned. Throws IllConditioned.
FirHilbertFilter design_fir(const SpectralDecomposition& d, int order,
                            const FirDesignOptions& options = {});

/// sum_l h_l A^l x evaluated by Horner's rule with repeated shifts.
GraphSignal apply_fir(const AdjacencyMatrix& a, const FirHilbertFilter& filter, const GraphSignal& x);

/// Relative distance between H{Re v_low . Re v_high} and Re v_low . Im v_high
/// (entrywise products). Both indices must lie in Gamma_2 with
/// smoothness(Re v_low) < smoothness(Re v_high); otherwise throws
/// IndexOutOfPartition or InvalidArgument.
double bedrosian_gap(const SpectralDecomposition& d, Index low, Index high);

}  // namespace spectrograph
