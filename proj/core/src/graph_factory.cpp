#include "spectrograph/graph_factory.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "spectrograph/error.hpp"

namespace spectrograph {
namespace {

void require_at_least(Index value, Index minimum, const char* what) {
  if (value < minimum) {
    throw Error(ErrorCode::TooSmall, std::string(what) + " must be at least " +
                                         std::to_string(minimum) + ", got " + std::to_string(value));
  }
}

Index community_size(Index communities, Index members) {
  require_at_least(communities, 1, "communities");
  require_at_least(members, 1, "members");
  if (members > kMaxCommunityNodes || communities > kMaxCommunityNodes / members) {
    throw Error(ErrorCode::SizeOverflow, "community graph exceeds " +
                                             std::to_string(kMaxCommunityNodes) + " nodes");
  }
  return communities * members;
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must lie in [0, 1]");
  }
}

// Ordered (row, col) pairs that join different communities, in row-major order.
std::vector<std::pair<Index, Index>> cross_pairs(Index communities, Index members) {
  const Index n = communities * members;
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(n * (n - members)));
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      if (r / members != c / members) pairs.emplace_back(r, c);
    }
  }
  return pairs;
}

// Partial Fisher-Yates: the first `count` entries become a uniform sample.
void sample_prefix(std::vector<std::pair<Index, Index>>& pairs, std::size_t count, SeededRng& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pairs.size() - i));
    std::swap(pairs[i], pairs[j]);
  }
}

}  // namespace

AdjacencyMatrix cycle(Index n) {
  require_at_least(n, 2, "cycle size");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i) a(i, (i + 1) % n) = 1.0;
  return AdjacencyMatrix(std::move(a));
}

AdjacencyMatrix jittered_cycle(Index n, double sigma, SeededRng& rng) {
  require_at_least(n, 2, "cycle size");
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be nonnegative");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i) a(i, (i + 1) % n) = 1.0 + sigma * rng.normal();
  return AdjacencyMatrix(std::move(a));
}

AdjacencyMatrix grid2d(Index rows, Index cols) {
  require_at_least(rows, 2, "grid rows");
  require_at_least(cols, 2, "grid cols");
  // (C (x) C) links (i, j) to (i + 1, j + 1), both with wraparound.
  const Index n = rows * cols;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      a(i * cols + j, ((i + 1) % rows) * cols + (j + 1) % cols) = 1.0;
    }
  }
  return AdjacencyMatrix(std::move(a));
}

AdjacencyMatrix weighted_community(Index communities, Index members, double inter_density,
                                   SeededRng& rng) {
  const Index n = community_size(communities, members);
  require_probability(inter_density, "inter_density");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Index block = 0; block < communities; ++block) {
    const Index base = block * members;
    for (Index r = 0; r < members; ++r) {
      for (Index c = 0; c < members; ++c) {
        if (r != c) a(base + r, base + c) = rng.uniform();
      }
    }
  }
  auto pairs = cross_pairs(communities, members);
  const auto count = static_cast<std::size_t>(
      std::llround(inter_density * static_cast<double>(pairs.size())));
  sample_prefix(pairs, count, rng);
  for (std::size_t e = 0; e < count; ++e) {
    a(pairs[e].first, pairs[e].second) = rng.uniform(0.0, 0.5);
  }
  return normalize_spectral_radius(AdjacencyMatrix(std::move(a)));
}

AdjacencyMatrix er_community(Index communities, Index members, double p_intra,
                             Index inter_edges, SeededRng& rng) {
  const Index n = community_size(communities, members);
  require_probability(p_intra, "p_intra");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Index block = 0; block < communities; ++block) {
    const Index base = block * members;
    for (Index r = 0; r < members; ++r) {
      for (Index c = 0; c < members; ++c) {
        if (r != c && rng.uniform() < p_intra) a(base + r, base + c) = 1.0;
      }
    }
  }
  auto pairs = cross_pairs(communities, members);
  if (inter_edges < 0 || static_cast<std::size_t>(inter_edges) > pairs.size()) {
    throw Error(ErrorCode::InvalidArgument, "inter_edges must lie in [0, " +
                                                std::to_string(pairs.size()) + "]");
  }
  sample_prefix(pairs, static_cast<std::size_t>(inter_edges), rng);
  for (Index e = 0; e < inter_edges; ++e) {
    a(pairs[static_cast<std::size_t>(e)].first, pairs[static_cast<std::size_t>(e)].second) = 1.0;
  }
  return AdjacencyMatrix(std::move(a));
}

AdjacencyMatrix gaussian_random(Index n, SeededRng& rng) {
  require_at_least(n, 2, "matrix size");
  Eigen::MatrixXd a(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) a(r, c) = rng.normal();
  }
  return AdjacencyMatrix(std::move(a));
}

Index theta_of(const SpectralDecomposition& d) {
  const Index n = d.size();
  const Index k = d.k();
  if ((n + k) % 2 != 0 || d.gamma2().size() != d.gamma4().size()) {
    throw Error(ErrorCode::ParityViolation,
                "node count " + std::to_string(n) + " and real-eigenvalue count " +
                    std::to_string(k) + " differ in parity");
  }
  const Index theta = (n + k) / 2;
  const auto counted =
      static_cast<Index>(d.gamma1().size() + d.gamma2().size() + d.gamma3().size());
  if (counted != theta) {
    throw Error(ErrorCode::ParityViolation, "partition sizes disagree with (n + k) / 2");
  }
  return theta;
}

}  // namespace spectrograph
