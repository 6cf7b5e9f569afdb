#pragma once

#include <cstdint>
#include <random>

namespace colourlab {

/// SplitMix64 finalizer. Used for seed/stream mixing only.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// A (seed, stream) pair identifying one reproducible random stream.
///
/// The engine behind a source is std::mt19937_64 (its output sequence is fixed
/// by the C++ standard) seeded with
///   splitmix64(seed ^ splitmix64(stream ^ 0x9E3779B97F4A7C15)).
/// All distributions below are implemented here rather than taken from
/// <random>, whose distribution algorithms are implementation-defined.
struct RandomSource {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Stream for sub-task `index` (e.g. trial i) of this source.
  RandomSource child(std::uint64_t index) const noexcept;
};

class Rng {
 public:
  explicit Rng(RandomSource src);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform double in (0, 1].
  double uniform_open0() { return 1.0 - uniform01(); }

  /// Standard exponential variate.
  double exponential();

  /// Standard normal variate (Marsaglia polar method).
  double normal();

  /// Poisson variate: inversion for mean < 10, PTRS transformed rejection
  /// (Hormann 1993) otherwise.
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace colourlab
