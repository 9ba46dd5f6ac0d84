#pragma once

#include <cstdint>
#include <random>

namespace spectrograph {

/// Reproducible random source for graph and signal generation.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The engine seed is splitmix64(seed ^ splitmix64(stream)), so
/// independent streams derived from one user seed never share state.
/// Uniform doubles take the top 53 bits of one draw; normals use the
/// Box-Muller transform (one draw pair per variate, no caching), which keeps
/// sequences identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Child generator on an independent stream.
  SeededRng split(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer on [0, bound), bound > 0; unbiased.
  std::uint64_t below(std::uint64_t bound);
  /// Standard normal variate.
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace spectrograph
