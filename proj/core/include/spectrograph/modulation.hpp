#pragma once

#include <vector>

#include "spectrograph/spectral.hpp"

namespace spectrograph {

/// Amplitude, phase and frequency modulation of one graph signal.
struct ModulationProfile {
  GraphSignal am;         // |x_a|
  GraphSignal pm;         // arg x_a in (-pi, pi]; 0 where x_a = 0
  GraphSignal unwrapped;  // pm + 2 pi k, scanned in node order
  GraphSignal fm;         // unwrapped - A unwrapped
};

/// Demodulates x over the graph. `a` is expected to have unit spectral
/// radius; a warning is logged (not thrown) when it deviates by more than 1e-6.
ModulationProfile demodulate(const AdjacencyMatrix& a, const SpectralDecomposition& d,
                             const GraphSignal& x);

/// One-dimensional phase unwrapping in index order: out(0) = pm(0), every
/// successive difference lands in (-pi, pi], and out - pm is a multiple of
/// 2 pi entrywise.
Eigen::VectorXd unwrap_phase(const Eigen::VectorXd& pm);

/// |GFT(am)| followed by |GFT(fm)|, length 2n.
Eigen::VectorXd demod_features(const ModulationProfile& profile, const SpectralDecomposition& d);

/// Nodes whose row of A is identically zero; their FM is just the unwrapped
/// phase because A contributes nothing there.
std::vector<Index> nodes_without_shift_input(const AdjacencyMatrix& a);

}  // namespace spectrograph
