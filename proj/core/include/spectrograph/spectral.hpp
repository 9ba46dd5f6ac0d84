#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spectrograph {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Real node-domain signal, one sample per node.
using GraphSignal = Eigen::VectorXd;
/// Complex graph-Fourier coefficients, one per eigenvalue.
using SpectrumVector = Eigen::VectorXcd;

/// Square real matrix with finite entries. Entry (i, j) is the weight with
/// which node j feeds node i under the shift x -> A x.
class AdjacencyMatrix {
 public:
  /// Throws NonSquare or NonFinite.
  explicit AdjacencyMatrix(Eigen::MatrixXd entries);

  Index size() const noexcept { return entries_.rows(); }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }
  double operator()(Index row, Index col) const { return entries_(row, col); }

  /// One application of the graph shift, A x.
  GraphSignal shift(const GraphSignal& x) const;

 private:
  Eigen::MatrixXd entries_;
};

/// Which of the four phase classes an eigenvalue belongs to.
enum class Partition : std::uint8_t {
  PositiveReal = 1,  // phase 0, zero included
  UpperComplex = 2,  // phase in (0, pi)
  NegativeReal = 3,  // phase pi
  LowerComplex = 4,  // phase in (pi, 2 pi)
};

struct DecomposeOptions {
  /// lambda is real iff |Im lambda| <= real_tolerance * max(1, |lambda|).
  double real_tolerance = 1e-9;
  /// Eigenbasis condition estimates above this are rejected as defective.
  double condition_cap = 1e12;
};

/// Eigendecomposition A = V diag(lambda) V^-1 of a diagonalizable real
/// adjacency matrix, ordered by ascending eigenvalue phase in [0, 2 pi) and,
/// within equal phase, by descending magnitude. Every upper-half-plane
/// eigenpair (i) has a partner (i') whose eigenvalue and eigenvector are the
/// exact complex conjugates of those at i. Immutable once built.
class SpectralDecomposition {
 public:
  const AdjacencyMatrix& adjacency() const noexcept { return adjacency_; }
  Index size() const noexcept { return eigenvalues_.size(); }

  /// Columns are unit 2-norm eigenvectors.
  const Eigen::MatrixXcd& basis() const noexcept { return basis_; }
  const Eigen::VectorXcd& eigenvalues() const noexcept { return eigenvalues_; }

  std::span<const Index> gamma1() const noexcept { return gamma_[0]; }
  std::span<const Index> gamma2() const noexcept { return gamma_[1]; }
  std::span<const Index> gamma3() const noexcept { return gamma_[2]; }
  std::span<const Index> gamma4() const noexcept { return gamma_[3]; }
  std::span<const Index> gamma(Partition p) const noexcept {
    return gamma_[static_cast<int>(p) - 1];
  }

  Partition partition_of(Index i) const { return partition_.at(static_cast<std::size_t>(i)); }
  /// Conjugate partner of a complex index; -1 for real eigenvalues.
  Index partner(Index i) const { return partner_.at(static_cast<std::size_t>(i)); }

  Index k1() const noexcept { return static_cast<Index>(gamma_[0].size()); }
  Index k2() const noexcept { return static_cast<Index>(gamma_[2].size()); }
  Index k() const noexcept { return k1() + k2(); }
  /// Number of GFT coefficients that determine a real signal, (n + k) / 2.
  Index theta() const noexcept { return (size() + k()) / 2; }

  /// 1-norm condition estimate of the eigenbasis (within a factor n of the
  /// 2-norm condition number).
  double condition_estimate() const noexcept { return condition_estimate_; }
  /// ||A V - V diag(lambda)||_F / ||A||_F.
  double residual() const noexcept { return residual_; }
  double real_tolerance() const noexcept { return real_tolerance_; }

  /// V^-1 b through the stored LU factorization.
  Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const;

 private:
  friend SpectralDecomposition decompose(const AdjacencyMatrix&, const DecomposeOptions&);

  explicit SpectralDecomposition(AdjacencyMatrix adjacency);

  AdjacencyMatrix adjacency_;
  Eigen::MatrixXcd basis_;
  Eigen::VectorXcd eigenvalues_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> factorization_;
  std::vector<Index> gamma_[4];
  std::vector<Partition> partition_;
  std::vector<Index> partner_;
  double condition_estimate_ = 0.0;
  double residual_ = 0.0;
  double real_tolerance_ = 0.0;
};

/// Throws DefectiveMatrix when the eigenbasis condition estimate exceeds the
/// cap, SolverFailure if the eigensolver does not converge.
SpectralDecomposition decompose(const AdjacencyMatrix& a, const DecomposeOptions& options = {});

/// Graph Fourier transform, V^-1 x.
SpectrumVector gft(const SpectralDecomposition& d, const GraphSignal& x);
SpectrumVector gft(const SpectralDecomposition& d, const Eigen::VectorXcd& x);

/// Inverse transform, V s.
Eigen::VectorXcd igft(const SpectralDecomposition& d, const SpectrumVector& s);

/// ||x - A x||^2 / ||x||^2. Throws ZeroSignal for x = 0.
double smoothness(const AdjacencyMatrix& a, const GraphSignal& x);

/// max |lambda_i|.
double spectral_radius(const AdjacencyMatrix& a);

/// A / max |lambda_i|. Throws NilpotentMatrix when the radius is below 1e-12.
AdjacencyMatrix normalize_spectral_radius(const AdjacencyMatrix& a);

}  // namespace spectrograph
