#pragma once

#include <complex>

#include <Eigen/Dense>

#include "spectrograph/graph_factory.hpp"
#include "spectrograph/random.hpp"
#include "spectrograph/spectral.hpp"

namespace testing_support {

using spectrograph::Complex;
using spectrograph::Index;

inline Eigen::VectorXd random_signal(spectrograph::SeededRng& rng, Index n) {
  Eigen::VectorXd x(n);
  for (Index i = 0; i < n; ++i) x(i) = rng.normal();
  return x;
}

inline Complex random_complex(spectrograph::SeededRng& rng) {
  return {rng.normal(), rng.normal()};
}

// Real signal 2 Re(sum_i c_i v_i) over the upper-half eigenvectors, i.e. an
// element of span(Gamma_2 + Gamma_4) with conjugate-symmetric coefficients.
inline Eigen::VectorXd gamma24_signal(const spectrograph::SpectralDecomposition& d,
                                      spectrograph::SeededRng& rng) {
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d.size());
  for (Index i : d.gamma2()) acc += random_complex(rng) * d.basis().col(i);
  return 2.0 * acc.real();
}

// Complex element of span(Gamma_2 + Gamma_4) with arbitrary coefficients.
inline Eigen::VectorXcd gamma24_complex(const spectrograph::SpectralDecomposition& d,
                                        spectrograph::SeededRng& rng) {
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d.size());
  for (Index i : d.gamma2()) acc += random_complex(rng) * d.basis().col(i);
  for (Index i : d.gamma4()) acc += random_complex(rng) * d.basis().col(i);
  return acc;
}

inline double max_abs(const Eigen::VectorXcd& v) { return v.cwiseAbs().maxCoeff(); }

inline double rel_err(const Eigen::VectorXcd& got, const Eigen::VectorXcd& want) {
  return (got - want).norm() / std::max(1.0, want.norm());
}

}  // namespace testing_support
