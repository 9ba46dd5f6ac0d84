#include <cmath>

#include <gtest/gtest.h>

#include "spectrograph/analytic.hpp"
#include "spectrograph/graph_factory.hpp"
#include "support.hpp"

namespace sg = spectrograph;
using sg::Complex;
using sg::Index;
using testing_support::gamma24_complex;
using testing_support::gamma24_signal;
using testing_support::random_complex;
using testing_support::rel_err;

namespace {

class OperatorProperties : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  void SetUp() override {
    rng_ = std::make_unique<sg::SeededRng>(GetParam(), 99);
    const Index n = 8 + Index(rng_->below(40));
    a_ = std::make_unique<sg::AdjacencyMatrix>(sg::gaussian_random(n, *rng_));
    d_ = std::make_unique<sg::SpectralDecomposition>(sg::decompose(*a_));
  }

  Eigen::VectorXcd h(const Eigen::VectorXcd& z) const { return sg::apply_hilbert_operator(*d_, z); }

  std::unique_ptr<sg::SeededRng> rng_;
  std::unique_ptr<sg::AdjacencyMatrix> a_;
  std::unique_ptr<sg::SpectralDecomposition> d_;
};

}  // namespace

TEST_P(OperatorProperties, ShiftInvariance) {
  const Eigen::VectorXcd x = gamma24_complex(*d_, *rng_);
  const Complex alpha = random_complex(*rng_);
  const Eigen::MatrixXcd a = a_->matrix().cast<Complex>();
  EXPECT_LT(rel_err(h(alpha * (a * x)), alpha * (a * h(x))), 1e-8);
}

TEST_P(OperatorProperties, Superposition) {
  const Eigen::VectorXcd x1 = gamma24_complex(*d_, *rng_);
  const Eigen::VectorXcd x2 = gamma24_complex(*d_, *rng_);
  const Complex a = random_complex(*rng_), b = random_complex(*rng_);
  EXPECT_LT(rel_err(h(a * x1 + b * x2), a * h(x1) + b * h(x2)), 1e-8);
}

TEST_P(OperatorProperties, PhaseShiftOfEigenvectors) {
  for (Index i : d_->gamma2()) {
    const Eigen::VectorXd re = d_->basis().col(i).real();
    const Eigen::VectorXd im = d_->basis().col(i).imag();
    EXPECT_LT((sg::hilbert_transform(*d_, re) - im).norm(), 1e-8 * std::max(1.0, im.norm()));
    EXPECT_LT((sg::hilbert_transform(*d_, im) + re).norm(), 1e-8 * std::max(1.0, re.norm()));
  }
}

TEST_P(OperatorProperties, InverseAndPeriodFour) {
  const Eigen::VectorXcd x = gamma24_complex(*d_, *rng_);
  EXPECT_LT(rel_err(h(h(x)), -x), 1e-8);
  EXPECT_LT(rel_err(h(h(h(h(x)))), x), 1e-8);
}

TEST_P(OperatorProperties, AnalyticOperatorDoubles) {
  const Eigen::VectorXcd x = gamma24_complex(*d_, *rng_);
  const auto once = sg::apply_analytic_operator(*d_, x);
  EXPECT_LT(rel_err(sg::apply_analytic_operator(*d_, once), 2.0 * once), 1e-8);
}

TEST_P(OperatorProperties, SpectralIsometry) {
  const Eigen::VectorXd x = gamma24_signal(*d_, *rng_);
  const auto s = sg::gft(*d_, x);
  const auto sh = sg::gft(*d_, sg::hilbert_transform(*d_, x));
  const auto sa = sg::gft(*d_, sg::analytic_signal(*d_, x).values);
  const double scale = s.norm();
  for (Index i = 0; i < d_->size(); ++i) EXPECT_NEAR(std::abs(sh(i)), std::abs(s(i)), 1e-8 * scale);
  EXPECT_NEAR(sh.cwiseAbs().sum(), s.cwiseAbs().sum(), 1e-8 * s.cwiseAbs().sum());
  EXPECT_NEAR(sh.norm(), s.norm(), 1e-8 * scale);
  EXPECT_NEAR(sh.cwiseAbs().maxCoeff(), s.cwiseAbs().maxCoeff(), 1e-8 * scale);
  EXPECT_NEAR(s.squaredNorm(), 0.5 * sa.squaredNorm(), 1e-8 * s.squaredNorm());
}

TEST_P(OperatorProperties, PolynomialFilterCommutes) {
  const Eigen::VectorXcd x = gamma24_complex(*d_, *rng_);
  std::vector<double> coeffs(6);
  for (double& c : coeffs) c = rng_->normal();
  const Eigen::MatrixXcd a = a_->matrix().cast<Complex>();
  auto m = [&](const Eigen::VectorXcd& z) {
    Eigen::VectorXcd y = coeffs.back() * z;
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) y = a * y + *it * z;
    return y;
  };
  EXPECT_LT(rel_err(h(m(x)), m(h(x))), 1e-8);
}

TEST_P(OperatorProperties, RealnessAndOneSidedness) {
  const Eigen::VectorXd x = testing_support::random_signal(*rng_, d_->size());
  const auto z = sg::apply_hilbert_operator(*d_, x.cast<Complex>());
  EXPECT_LE(z.imag().cwiseAbs().maxCoeff(), 1e-9 * x.norm());
  const auto sa = sg::gft(*d_, sg::analytic_signal(*d_, x).values);
  for (Index i : d_->gamma4()) EXPECT_LE(std::abs(sa(i)), 1e-9 * sa.norm());
  const Index nonzero = (sa.cwiseAbs().array() > 1e-9 * sa.norm()).count();
  EXPECT_LE(nonzero, d_->theta());
}

INSTANTIATE_TEST_SUITE_P(RandomGraphs, OperatorProperties, ::testing::Range<std::uint64_t>(1, 11));

TEST(CycleProperties, OrthogonalityPreserved) {
  const auto d = sg::decompose(sg::cycle(24));
  sg::SeededRng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd x1 = gamma24_signal(d, rng);
    Eigen::VectorXd x2 = gamma24_signal(d, rng);
    x2 -= x1 * (x1.dot(x2) / x1.squaredNorm());
    ASSERT_LT(std::abs(x1.dot(x2)), 1e-12 * x1.norm() * x2.norm());
    const auto h1 = sg::hilbert_transform(d, x1);
    const auto h2 = sg::hilbert_transform(d, x2);
    EXPECT_LT(std::abs(h1.dot(h2)), 1e-8 * x1.norm() * x2.norm());
  }
}
