#pragma once

#include <cstdint>

#include "spectrograph/random.hpp"
#include "spectrograph/spectral.hpp"

namespace spectrograph {

// Every generator is a pure function of its arguments and the generator
// state it is handed. Throws TooSmall / SizeOverflow / InvalidArgument on bad
// parameters.

/// Directed cycle: A(i, i + 1 mod n) = 1, so (A x)(i) = x(i + 1).
AdjacencyMatrix cycle(Index n);

/// Cycle with weights w_i = 1 + d_i, d_i ~ N(0, sigma^2), on the same edges.
AdjacencyMatrix jittered_cycle(Index n, double sigma, SeededRng& rng);

/// cycle(rows) (x) cycle(cols); node (i, j) has flat index i * cols + j.
AdjacencyMatrix grid2d(Index rows, Index cols);

/// Dense directed communities with U[0, 1] weights and a zero diagonal, plus
/// round(inter_density * P) distinct inter-community directed edges with
/// U[0, 0.5] weights, P being the number of ordered node pairs that straddle
/// two communities. Normalized to unit spectral radius.
AdjacencyMatrix weighted_community(Index communities, Index members, double inter_density,
                                   SeededRng& rng);

/// Unweighted directed Erdos-Renyi(p_intra) communities with a zero diagonal
/// and exactly `inter_edges` distinct inter-community directed edges.
AdjacencyMatrix er_community(Index communities, Index members, double p_intra,
                             Index inter_edges, SeededRng& rng);

/// i.i.d. N(0, 1) entries.
AdjacencyMatrix gaussian_random(Index n, SeededRng& rng);

/// (n + k) / 2 after checking that n and k share parity and that
/// |Gamma_1| + |Gamma_2| + |Gamma_3| agrees. Throws ParityViolation.
Index theta_of(const SpectralDecomposition& d);

/// Largest node count the community generators accept.
inline constexpr Index kMaxCommunityNodes = 4096;

}  // namespace spectrograph
