#include "sumsetlab/rng.hpp"

#include <algorithm>
#include <limits>

#include "sumsetlab/bit_vector.hpp"
#include "sumsetlab/error.hpp"

namespace sumsetlab {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below needs a positive bound");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> Rng::sample_subset(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw DomainError("cannot sample more elements than the population");
  // Floyd's algorithm: k draws, no O(n) shuffle buffer.
  BitVector chosen(n);
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t j = n - k; j < n; ++j) {
    const std::uint64_t t = below(j + 1);
    const std::uint64_t pick = chosen.test(t) ? j : t;
    chosen.set(pick);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sumsetlab
