#include "spectrograph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "spectrograph/error.hpp"

namespace spectrograph {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_size(const SpectralDecomposition& d, Index n, const char* what) {
  if (n != d.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": vector length " + std::to_string(n) +
                    " does not match graph size " + std::to_string(d.size()));
  }
}

// Index of the entry of largest magnitude. Entries within a relative 1e-9 of
// the maximum count as tied and the first one wins, so equal-modulus vectors
// (cycle eigenvectors) do not depend on rounding noise.
Index dominant_entry(const Eigen::VectorXcd& v) {
  const double peak = v.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= peak * (1.0 - 1e-9)) return i;
  }
  return 0;
}

// Rotate so the dominant entry is real and positive, then scale to unit norm.
Eigen::VectorXcd fix_phase(const Eigen::VectorXcd& v) {
  const Complex pivot = v(dominant_entry(v));
  Eigen::VectorXcd out = v * (std::abs(pivot) / pivot);
  out(dominant_entry(v)).imag(0.0);
  return out / out.norm();
}

struct Candidate {
  Complex value;
  Eigen::VectorXcd vector;
  Partition partition;
  double phase;
  double magnitude;
  Index solver_index;  // for a synthesized conjugate, the partner's index
};

}  // namespace

AdjacencyMatrix::AdjacencyMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(ErrorCode::NonSquare, "adjacency matrix must be square, got " +
                                          std::to_string(entries_.rows()) + "x" +
                                          std::to_string(entries_.cols()));
  }
  if (entries_.rows() == 0) {
    throw Error(ErrorCode::TooSmall, "adjacency matrix must have at least one node");
  }
  if (!entries_.allFinite()) {
    throw Error(ErrorCode::NonFinite, "adjacency matrix contains NaN or Inf");
  }
}

GraphSignal AdjacencyMatrix::shift(const GraphSignal& x) const {
  if (x.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch, "shift: signal length does not match graph size");
  }
  return entries_ * x;
}

SpectralDecomposition::SpectralDecomposition(AdjacencyMatrix adjacency)
    : adjacency_(std::move(adjacency)) {}

Eigen::VectorXcd SpectralDecomposition::solve(const Eigen::VectorXcd& b) const {
  require_size(*this, b.size(), "solve");
  return factorization_.solve(b);
}

SpectralDecomposition decompose(const AdjacencyMatrix& a, const DecomposeOptions& options) {
  const Index n = a.size();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a.matrix(), /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SolverFailure, "eigensolver did not converge");
  }
  const Eigen::VectorXcd values = solver.eigenvalues();
  const Eigen::MatrixXcd vectors = solver.eigenvectors();

  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(n));
  Index upper = 0;
  Index lower = 0;
  for (Index s = 0; s < n; ++s) {
    const Complex lambda = values(s);
    const double tol = options.real_tolerance * std::max(1.0, std::abs(lambda));
    if (std::abs(lambda.imag()) <= tol) {
      const double re = lambda.real();
      Eigen::VectorXcd v = fix_phase(vectors.col(s)).real().cast<Complex>();
      v /= v.norm();
      const bool negative = re < 0.0;
      candidates.push_back({Complex(re, 0.0), std::move(v),
                            negative ? Partition::NegativeReal : Partition::PositiveReal,
                            negative ? std::numbers::pi : 0.0, std::abs(re), s});
    } else if (lambda.imag() > 0.0) {
      ++upper;
      Eigen::VectorXcd v = fix_phase(vectors.col(s));
      const double phase = std::atan2(lambda.imag(), lambda.real());
      const double magnitude = std::abs(lambda);
      Eigen::VectorXcd w = v.conjugate();
      candidates.push_back({lambda, std::move(v), Partition::UpperComplex, phase, magnitude, s});
      candidates.push_back({std::conj(lambda), std::move(w), Partition::LowerComplex,
                            kTwoPi - phase, magnitude, s});
    } else {
      ++lower;
    }
  }
  if (upper != lower) {
    throw Error(ErrorCode::SolverFailure,
                "eigensolver returned unpaired complex eigenvalues (" + std::to_string(upper) +
                    " upper vs " + std::to_string(lower) + " lower)");
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& lhs, const Candidate& rhs) {
                     if (lhs.phase != rhs.phase) return lhs.phase < rhs.phase;
                     return lhs.magnitude > rhs.magnitude;
                   });

  SpectralDecomposition d(a);
  d.real_tolerance_ = options.real_tolerance;
  d.basis_.resize(n, n);
  d.eigenvalues_.resize(n);
  d.partition_.resize(static_cast<std::size_t>(n));
  d.partner_.assign(static_cast<std::size_t>(n), -1);

  std::vector<Index> upper_position(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Candidate& c = candidates[static_cast<std::size_t>(i)];
    d.eigenvalues_(i) = c.value;
    d.basis_.col(i) = c.vector;
    d.partition_[static_cast<std::size_t>(i)] = c.partition;
    d.gamma_[static_cast<int>(c.partition) - 1].push_back(i);
    if (c.partition == Partition::UpperComplex) {
      upper_position[static_cast<std::size_t>(c.solver_index)] = i;
    }
  }
  for (Index i = 0; i < n; ++i) {
    const Candidate& c = candidates[static_cast<std::size_t>(i)];
    if (c.partition == Partition::LowerComplex) {
      const Index j = upper_position[static_cast<std::size_t>(c.solver_index)];
      d.partner_[static_cast<std::size_t>(i)] = j;
      d.partner_[static_cast<std::size_t>(j)] = i;
    }
  }

  d.factorization_.compute(d.basis_);
  const double rcond = d.factorization_.rcond();
  d.condition_estimate_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(d.condition_estimate_ <= options.condition_cap)) {
    throw Error(ErrorCode::DefectiveMatrix,
                "eigenbasis condition estimate " + std::to_string(d.condition_estimate_) +
                    " exceeds cap; the adjacency matrix is (nearly) defective");
  }

  const Eigen::MatrixXcd av = a.matrix().cast<Complex>() * d.basis_;
  const double scale = std::max(a.matrix().norm(), std::numeric_limits<double>::min());
  d.residual_ = (av - d.basis_ * d.eigenvalues_.asDiagonal()).norm() / scale;
  return d;
}

SpectrumVector gft(const SpectralDecomposition& d, const GraphSignal& x) {
  require_size(d, x.size(), "gft");
  return d.solve(x.cast<Complex>());
}

SpectrumVector gft(const SpectralDecomposition& d, const Eigen::VectorXcd& x) {
  require_size(d, x.size(), "gft");
  return d.solve(x);
}

Eigen::VectorXcd igft(const SpectralDecomposition& d, const SpectrumVector& s) {
  require_size(d, s.size(), "igft");
  return d.basis() * s;
}

double smoothness(const AdjacencyMatrix& a, const GraphSignal& x) {
  if (x.size() != a.size()) {
    throw Error(ErrorCode::DimensionMismatch, "smoothness: signal length does not match graph size");
  }
  const double energy = x.squaredNorm();
  if (energy == 0.0) {
    throw Error(ErrorCode::ZeroSignal, "smoothness is undefined for the zero signal");
  }
  return (x - a.matrix() * x).squaredNorm() / energy;
}

double spectral_radius(const AdjacencyMatrix& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a.matrix(), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SolverFailure, "eigensolver did not converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

AdjacencyMatrix normalize_spectral_radius(const AdjacencyMatrix& a) {
  const double radius = spectral_radius(a);
  if (radius < 1e-12) {
    throw Error(ErrorCode::NilpotentMatrix,
                "spectral radius " + std::to_string(radius) + " is too small to normalize");
  }
  return AdjacencyMatrix(a.matrix() / radius);
}

}  // namespace spectrograph
