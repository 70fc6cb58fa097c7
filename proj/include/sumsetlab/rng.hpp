#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sumsetlab {

// Seeded generator with platform-independent draws. The standard
// distributions are implementation-defined, so bounded integers and reals
// are derived here directly from the engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  // Uniform in [0, 1) with 53 random bits.
  double unit();
  // A uniformly random k-subset of [0, n), sorted ascending.
  std::vector<std::uint64_t> sample_subset(std::uint64_t n, std::uint64_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sumsetlab
