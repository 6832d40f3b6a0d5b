#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace gjsp {

// SplitMix64 finalizer; the fixed 64-bit mixing function used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

// Order-sensitive combination of two seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Seeded generator with hand-written distributions. std::*_distribution output
// differs between standard libraries; these do not, so generated instances and
// trained models are byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer on [lo, hi], rejection-sampled.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Box-Muller; consumes exactly two draws per call.
  double normal(double mean, double sd);
  double exponential(double mean);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      auto k = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[k]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gjsp
