#pragma once

#include <array>
#include <cstdint>

namespace bptrial {

/// SplitMix64 step (Vigna). Used to expand seeds into generator state and
/// to derive independent substream seeds; not used as a draw generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Mixes (seed, index) into a substream seed. Every stochastic operation in
/// the library derives its streams this way, so results are independent of
/// how work is partitioned across threads.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// xoshiro256++ 1.0 (Blackman and Vigna), seeded through SplitMix64.
///
/// The library's single generator type. All draws consume an explicit
/// stream object; there is no global RNG state. A given (seed, draw
/// sequence) is reproducible across platforms because every sampler below
/// is implemented in-library.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  /// Stream for work item `index` of a run seeded with `seed`.
  static Xoshiro256pp substream(std::uint64_t seed, std::uint64_t index) {
    return Xoshiro256pp(derive_seed(seed, index));
  }

  std::uint64_t next();

  /// Uniform draw on the open interval (0, 1).
  double uniform();

  /// Standard normal draw (Box-Muller, no cached spare).
  double normal();

  /// Gamma(shape, 1) draw via Marsaglia-Tsang squeeze; handles shape < 1
  /// through the boost Gamma(a) = Gamma(a+1) * U^(1/a).
  double gamma(double shape);

 private:
  std::array<std::uint64_t, 4> s_;
};

}  // namespace bptrial
