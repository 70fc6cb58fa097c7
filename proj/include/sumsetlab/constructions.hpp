#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumsetlab/group.hpp"
#include "sumsetlab/group_set.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {

bool is_prime(std::uint64_t n);

// Rank over Z_p of the given coordinate rows (Gaussian elimination mod p).
std::size_t rank_mod_p(std::vector<Coords> rows, std::uint64_t p);

// Nonzero vectors of Z_p^{2^i} whose first half of coordinates is all zero
// or whose second half is all zero (exactly one of the two).
GroupSet example_c(std::uint64_t p, unsigned i, std::uint64_t cap = default_order_cap());

// Over Z_p^{2^k}: i = 0 gives (Z_p \ {0})^{2^k}; i >= 1 gives the
// 2^{k-i}-fold product of example_c(p, i), one copy per block of 2^i
// consecutive coordinates.
GroupSet example_a(std::uint64_t p, unsigned k, unsigned i,
                   std::uint64_t cap = default_order_cap());

// (Z_p^{2^j} \ {0})^{2^{k-j}} inside Z_p^{2^k}: every block of 2^j
// coordinates is nonzero.
GroupSet nonzero_blocks(std::uint64_t p, unsigned k, unsigned j,
                        std::uint64_t cap = default_order_cap());

struct Example1Family {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t n = 0;       // 2^k
  std::vector<GroupSet> a;   // A_0 .. A_k
  std::vector<std::string> warnings;
};

Example1Family example1_family(std::uint64_t p, unsigned k,
                               std::uint64_t cap = default_order_cap());

struct Example1Level {
  unsigned i = 0;
  std::uint64_t a_size = 0;
  std::uint64_t a_size_expected = 0;
  // Only for i >= 1.
  std::uint64_t c_size = 0;
  std::uint64_t c_size_expected = 0;
  std::uint64_t c_double_size = 0;
  bool c_double_covers = false;   // C_i + C_i = Z_p^{2^i}
  bool a_double_covers = false;   // A_i + A_i = Z_p^n
};

struct Example1ChainStep {
  unsigned j = 0;
  std::uint64_t size = 0;            // |A_0 + ... + A_j|
  std::uint64_t size_expected = 0;   // (p^{2^j} - 1)^{2^{k-j}}
  bool matches_structure = false;    // equals nonzero_blocks(p, k, j)
  bool covers = false;
};

struct Example1Report {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t n = 0;
  std::uint64_t order = 0;
  std::vector<Example1Level> levels;       // i = 0 .. k
  std::vector<Example1ChainStep> chain;    // j = 0 .. k
  // The family's claimed identities are only expected to hold for p >= 3.
  bool claims_expected = false;
  bool claims_hold = false;
  // p = 2: C_1 + C_1 over Z_2^2, which is {(0,0),(1,1)} rather than Z_2^2.
  std::vector<Coords> p2_c1_double;
  bool p2_edge_case_reproduced = false;
  std::vector<std::string> warnings;
  bool pass = false;
};

Example1Report check_example1(std::uint64_t p, unsigned k,
                              std::uint64_t cap = default_order_cap());

ElementMultiset standard_basis(std::uint64_t p, std::uint64_t n,
                               std::uint64_t cap = default_order_cap());
ElementMultiset random_basis(std::uint64_t p, std::uint64_t n, std::uint64_t seed,
                             std::uint64_t cap = default_order_cap());
ElementMultiset random_basis(const GroupSpec& space, Rng& rng);

// Rows of the basis as coordinate vectors, in entry order.
std::vector<Coords> basis_rows(const ElementMultiset& basis);

inline constexpr int kDefaultCoverAttempts = 1000;

// A random set with ceil(density * N) elements whose m-fold sumset is the
// whole group, found by resampling. Throws BudgetExhaustedError when no
// attempt succeeds.
GroupSet random_cover_set(const GroupSpec& spec, std::uint64_t m, double density,
                          std::uint64_t seed, int max_attempts = kDefaultCoverAttempts);
GroupSet random_cover_set(const GroupSpec& spec, std::uint64_t m, double density,
                          Rng& rng, int max_attempts = kDefaultCoverAttempts);

// ceil(density * n) clamped to [1, n]; density must lie in (0, 1].
std::uint64_t target_size(std::uint64_t n, double density);

}  // namespace sumsetlab
