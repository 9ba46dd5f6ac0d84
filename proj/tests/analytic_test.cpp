#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles/dft_oracle.hpp"
#include "spectrograph/analytic.hpp"
#include "spectrograph/error.hpp"
#include "spectrograph/graph_factory.hpp"
#include "support.hpp"

namespace sg = spectrograph;
using sg::Complex;
using sg::Index;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Hilbert, FrozenDiscreteValuesEvenLength) {
  Eigen::VectorXd x(8);
  x << 1, 2, 3, 4, 0, 0, 0, 0;
  Eigen::VectorXd want(8);
  want << -1.6213203435596428, -1.2071067811865475, -1.2071067811865475, 1.9142135623730951,
      2.621320343559643, 0.20710678118654757, 0.20710678118654746, -0.9142135623730951;
  const auto got = sg::hilbert_transform(sg::decompose(sg::cycle(8)), x);
  EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((oracle::hilbert(x) - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Hilbert, FrozenDiscreteValuesOddLength) {
  Eigen::VectorXd x(5);
  x << 0.3, -1.2, 2.5, 0.7, -0.4;
  Eigen::VectorXd want(5);
  want << 0.7539846760299704, -1.1943414001959323, -1.271235698047347, 2.0030192099632553,
      -0.29142678774994674;
  const auto got = sg::hilbert_transform(sg::decompose(sg::cycle(5)), x);
  EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Hilbert, CosineBecomesSine) {
  const Index n = 16;
  const auto d = sg::decompose(sg::cycle(n));
  Eigen::VectorXd x(n);
  for (Index t = 0; t < n; ++t) x(t) = std::cos(2 * kPi * t / n);
  const auto a = sg::analytic_signal(d, x);
  for (Index t = 0; t < n; ++t) {
    EXPECT_LT(std::abs(a.values(t) - std::polar(1.0, 2 * kPi * t / n)), 1e-12);
    EXPECT_NEAR(a.hilbert(t), std::sin(2 * kPi * t / n), 1e-12);
  }
}

TEST(Hilbert, ConstantHasNoHilbertPart) {
  const auto d = sg::decompose(sg::cycle(9));
  const auto a = sg::analytic_signal(d, Eigen::VectorXd::Ones(9));
  EXPECT_LT(a.hilbert.cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((a.values - Eigen::VectorXcd::Ones(9)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Hilbert, RealSubspaceMapsToZero) {
  sg::SeededRng rng(4);
  const auto d = sg::decompose(sg::gaussian_random(20, rng));
  Eigen::VectorXd x = Eigen::VectorXd::Zero(20);
  for (Index i : d.gamma1()) x += rng.normal() * d.basis().col(i).real();
  for (Index i : d.gamma3()) x += rng.normal() * d.basis().col(i).real();
  EXPECT_LT(sg::hilbert_transform(d, x).norm(), 1e-10 * x.norm());
}

TEST(Analytic, FlatSpectrumOnEightNodes) {
  const auto d = sg::decompose(sg::cycle(8));
  ASSERT_EQ(d.gamma2().size(), 3u);
  ASSERT_EQ(d.gamma4().size(), 3u);
  const Eigen::VectorXd x = sg::igft(d, Eigen::VectorXcd::Ones(8)).real();
  const auto s = sg::gft(d, sg::analytic_signal(d, x).values);
  const double want[] = {1, 2, 2, 2, 1, 0, 0, 0};
  for (Index i = 0; i < 8; ++i) EXPECT_LT(std::abs(s(i) - want[i]), 1e-12) << i;
}

TEST(Analytic, RealPartIsBitIdentical) {
  sg::SeededRng rng(12);
  const auto d = sg::decompose(sg::gaussian_random(30, rng));
  const Eigen::VectorXd x = testing_support::random_signal(rng, 30);
  const auto a = sg::analytic_signal(d, x);
  for (Index i = 0; i < 30; ++i) EXPECT_EQ(a.values(i).real(), x(i));
  EXPECT_EQ(a.source, x);
  EXPECT_EQ(a.values.imag(), a.hilbert);
}

TEST(Analytic, Errors) {
  const auto d = sg::decompose(sg::cycle(6));
  EXPECT_THROW(sg::analytic_signal(d, Eigen::VectorXd::Ones(5)), sg::Error);
  Eigen::VectorXd bad = Eigen::VectorXd::Ones(6);
  bad(2) = std::numeric_limits<double>::quiet_NaN();
  try {
    sg::hilbert_transform(d, bad);
    ADD_FAILURE();
  } catch (const sg::Error& e) {
    EXPECT_EQ(e.code(), sg::ErrorCode::NonFinite);
  }
}

TEST(HilbertMask, Entries) {
  const auto d = sg::decompose(sg::cycle(6));
  const auto mask = sg::hilbert_mask(d);
  for (Index i = 0; i < 6; ++i) {
    switch (d.partition_of(i)) {
      case sg::Partition::UpperComplex: EXPECT_EQ(mask(i), Complex(0, -1)); break;
      case sg::Partition::LowerComplex: EXPECT_EQ(mask(i), Complex(0, 1)); break;
      default: EXPECT_EQ(mask(i), Complex(0, 0));
    }
  }
}

TEST(Fir, CycleFullOrderIsImpulseResponse) {
  const Index n = 8;
  const auto d = sg::decompose(sg::cycle(n));
  const auto f = sg::design_fir(d, int(n));
  ASSERT_EQ(f.order(), 8);
  EXPECT_LE(f.design_residual, 1e-8);
  const double g[] = {0, 0.6035533905932737, 0, 0.10355339059327379,
                      0, -0.10355339059327379, 0, -0.6035533905932737};
  for (Index l = 0; l < n; ++l) EXPECT_NEAR(f.taps[l], g[(n - l) % n], 1e-12) << l;
  EXPECT_NEAR(f.taps[8], 0.0, 1e-12);
}

TEST(Fir, CycleMatchesOracleImpulseForOddLength) {
  const Index n = 15;
  const auto d = sg::decompose(sg::cycle(n));
  const auto f = sg::design_fir(d, int(n));
  const Eigen::VectorXd g = oracle::hilbert_impulse(n);
  for (Index l = 1; l < n; ++l) EXPECT_NEAR(f.taps[l], g((n - l) % n), 1e-10) << l;
}

TEST(Fir, AppliedFilterMatchesSpectralPath) {
  const Index n = 32;
  const auto a = sg::cycle(n);
  const auto d = sg::decompose(a);
  const auto f = sg::design_fir(d, int(n));
  sg::SeededRng rng(2);
  const Eigen::VectorXd x = testing_support::random_signal(rng, n);
  EXPECT_LT((sg::apply_fir(a, f, x) - sg::hilbert_transform(d, x)).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Fir, LowerOrderHasLargerResidual) {
  const auto d = sg::decompose(sg::cycle(16));
  EXPECT_GT(sg::design_fir(d, 8).design_residual, sg::design_fir(d, 16).design_residual);
  EXPECT_GT(sg::design_fir(d, 8).design_residual, 1e-3);
}

TEST(Fir, SymmetricGraphGivesZeroTaps) {
  Eigen::MatrixXd m(3, 3);
  m << 0, 1, 2, 1, 0, 3, 2, 3, 0;
  const auto f = sg::design_fir(sg::decompose(sg::AdjacencyMatrix(m)), 3);
  for (double t : f.taps) EXPECT_EQ(t, 0.0);
  EXPECT_EQ(f.design_residual, 0.0);
}

TEST(Fir, TrivialFilters) {
  const auto a = sg::cycle(5);
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(5, -1, 3);
  sg::FirHilbertFilter zero;
  zero.taps = {0.0, 0.0};
  EXPECT_EQ(sg::apply_fir(a, zero, x), Eigen::VectorXd::Zero(5));
  sg::FirHilbertFilter identity;
  identity.taps = {1.0};
  EXPECT_EQ(sg::apply_fir(a, identity, x), x);
  EXPECT_THROW(sg::apply_fir(a, identity, Eigen::VectorXd::Ones(4)), sg::Error);
}

TEST(Fir, OrderOutOfRange) {
  const auto d = sg::decompose(sg::cycle(5));
  EXPECT_THROW(sg::design_fir(d, 0), sg::Error);
  EXPECT_THROW(sg::design_fir(d, 6), sg::Error);
}

TEST(Fir, EigenvectorScaledCloseToMinusJ) {
  sg::SeededRng rng(17);
  const auto a = sg::jittered_cycle(12, 0.1, rng);
  const auto d = sg::decompose(a);
  const auto f = sg::design_fir(d, 6);
  for (Index i : d.gamma2()) {
    Complex acc = 0.0;
    for (auto it = f.taps.rbegin(); it != f.taps.rend(); ++it) acc = acc * d.eigenvalues()(i) + *it;
    EXPECT_LE(std::abs(acc - Complex(0, -1)), f.design_residual + 1e-12);
  }
}

TEST(Bedrosian, ExactOnPlainCycle) {
  const auto d = sg::decompose(sg::cycle(32));
  for (auto [lo, hi] : {std::pair<Index, Index>{1, 5}, {2, 9}, {3, 4}, {1, 14}}) {
    EXPECT_LE(sg::bedrosian_gap(d, lo, hi), 1e-8) << lo << "," << hi;
  }
}

TEST(Bedrosian, PositiveOnJitteredCycle) {
  sg::SeededRng rng(1);
  const auto d = sg::decompose(sg::jittered_cycle(100, 0.1, rng));
  EXPECT_GT(sg::bedrosian_gap(d, 2, 44), 1e-3);
}

TEST(Bedrosian, Preconditions) {
  const auto d = sg::decompose(sg::cycle(16));
  auto code = [&](Index i, Index j) {
    try {
      sg::bedrosian_gap(d, i, j);
    } catch (const sg::Error& e) {
      return e.code();
    }
    return sg::ErrorCode::SolverFailure;
  };
  EXPECT_EQ(code(3, 3), sg::ErrorCode::InvalidArgument);
  EXPECT_EQ(code(5, 2), sg::ErrorCode::InvalidArgument);
  EXPECT_EQ(code(0, 3), sg::ErrorCode::IndexOutOfPartition);
  EXPECT_EQ(code(2, 12), sg::ErrorCode::IndexOutOfPartition);
  EXPECT_EQ(code(2, 99), sg::ErrorCode::IndexOutOfPartition);
}
