#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace viewsel {

/// Portable seeded random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Stream keys are folded into the seed with the SplitMix64
/// finalizer, and every distribution below is implemented here rather than
/// via <random> distributions (whose algorithms are implementation-defined):
///   uniform()  top 53 bits of one engine draw, scaled to [0,1)
///   below(n)   rejection sampling on a full 64-bit draw
///   normal()   Box-Muller, cosine branch only, two uniforms per sample
/// Equal seeds and stream keys therefore reproduce across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for a (seed, key...) tuple.
  static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  double normal();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace viewsel
