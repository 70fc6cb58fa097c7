#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumsetlab/bounds.hpp"
#include "sumsetlab/group_set.hpp"

namespace sumsetlab {

struct PlunneckeReport {
  std::uint64_t a_size = 0;
  std::uint64_t b_size = 0;
  std::uint64_t sum_size = 0;    // |A + B|
  double alpha = 0.0;            // |A + B| / |B|
  std::uint64_t k = 0;
  std::uint64_t lhs = 0;         // |kA|
  double rhs = 0.0;              // alpha^k |B|
  bool pass = false;
};

// |kA| <= alpha^k |B| with alpha = |A+B|/|B|. Requires nonempty A and B
// and k >= 2.
PlunneckeReport check_plunnecke(const GroupSet& a, const GroupSet& b, std::uint64_t k);

struct BoundValue {
  double raw = 0.0;       // the real-valued threshold
  std::uint64_t k = 0;    // least integer satisfying the bound
};

// Least K >= m ln(log2 N) for m >= 3, least K >= log2(log2 N) for m = 2.
// Needs N >= 4.
BoundValue theorem1_bound(std::uint64_t m, std::uint64_t order);
// Same, given log2 N directly (for orders beyond 64 bits).
BoundValue theorem1_bound_log2(std::uint64_t m, double log2_order);

struct ChainStep {
  std::size_t index = 0;        // 1-based position i of the set being added
  std::uint64_t prev_size = 0;  // |A_1 + ... + A_{i-1}|
  std::uint64_t size = 0;       // |A_1 + ... + A_i|
  double bound = 0.0;           // |G|^{1/m} |prev|^{(m-1)/m}
  bool holds = false;
  bool asserted = false;        // mA_i = G, so the bound is guaranteed
};

struct HalfReport {
  std::vector<std::uint64_t> prefix_sizes;
  std::vector<ChainStep> steps;
  // Product of the step bounds: |G|^{1-mu} |first|^{mu}, mu = ((m-1)/m)^{K-1}.
  double telescoped_bound = 0.0;
  bool telescoped_bound_holds = false;
  bool telescoped_bound_asserted = false;   // mA_i = G for the sets after the first
  // |G|^{1-lambda}, from the telescoped bound and |first| > |G|^{1/m}.
  double lambda_bound = 0.0;
  bool lambda_bound_holds = false;
  bool lambda_bound_asserted = false;       // mA_i = G for every set of the half
  // |G|^{1-lambda} |first|^{lambda}: one step stronger than the telescoped
  // bound, so it is reported but never asserted (it fails for K = 1).
  double stated_bound = 0.0;
  bool stated_bound_holds = false;
  std::uint64_t size = 0;
  bool exceeds_half = false;    // 2 |sum| > |G|
};

struct Theorem1Report {
  std::uint64_t m = 0;
  std::uint64_t k = 0;                  // family size is 2K
  std::uint64_t order = 0;
  double lambda = 1.0;                  // ((m-1)/m)^K
  std::optional<BoundValue> bound;      // absent when |G| < 4
  bool k_meets_bound = false;
  std::vector<bool> hypotheses;         // mA_i = G
  bool hypotheses_hold = false;
  HalfReport halves[2];
  bool chain_holds = false;
  std::uint64_t total_size = 0;
  bool final_cover = false;
  // Hypotheses hold but a check the theorem guarantees failed.
  bool violation = false;
  bool pass = false;
};

// Checks every hypothesis, the per-step growth inequality and its telescoped
// form within each half, both half sizes against |G|/2, and whether the
// full sum covers G. Family size must be even and nonzero.
Theorem1Report verify_theorem1(const std::vector<GroupSet>& family, std::uint64_t m);

struct PigeonholeReport {
  std::uint64_t a_size = 0;
  std::uint64_t b_size = 0;
  std::uint64_t order = 0;
  bool premise_met = false;   // |A|, |B| > |G|/2
  std::uint64_t sum_size = 0;
  bool covers = false;
  // False only when the premise holds and A + B != G.
  bool pass = false;
};

PigeonholeReport pigeonhole_sum(const GroupSet& a, const GroupSet& b);

struct KpnUpper {
  double general = 0.0;                  // 2(p-1) ln n + 2(p-1) ln log2 p
  std::optional<double> ternary;         // 2 log2 n + 2, only for p = 3
};

KpnUpper kpn_upper(std::uint64_t p, std::uint64_t n);

bool is_additive_basis(const ElementMultiset& b);

struct KpnLevel {
  std::uint64_t k = 0;
  bool exhaustive = false;
  std::uint64_t tuples_checked = 0;
  bool counterexample_found = false;
};

struct KpnWitness {
  std::uint64_t k = 0;
  std::vector<std::vector<Coords>> bases;   // the k bases of the union
  std::vector<Coords> subset_sums;          // S(union), which misses G
};

struct KpnReport {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t k_max = 0;
  std::uint64_t budget = 0;
  std::uint64_t basis_count = 0;            // unordered bases of Z_p^n, 0 if not enumerated
  std::vector<KpnLevel> levels;
  // Least k in [1, k_max] with no counterexample found.
  std::optional<std::uint64_t> answer;
  bool exact = false;                       // answer backed by exhaustion
  std::optional<KpnWitness> witness;        // failing union of answer-1 (or k_max) bases
};

inline constexpr std::uint64_t kDefaultKpnBudget = 10000;

// Searches unions of k bases of Z_p^n for one that is not an additive
// basis, for k = 1 .. k_max. Exhaustive over multisets of bases when their
// count fits the budget, otherwise `budget` seeded random samples.
KpnReport kpn_exact_small(std::uint64_t p, std::uint64_t n, std::uint64_t k_max,
                          std::uint64_t budget = kDefaultKpnBudget,
                          std::uint64_t seed = 0,
                          std::uint64_t cap = default_order_cap());

}  // namespace sumsetlab
