#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sumsetlab/bit_vector.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {

// 2x2 matrix (a b; c d) over Z_p.
using Matrix2 = std::array<std::uint32_t, 4>;

// Multiplication tables are built when the order is at most this.
inline constexpr std::uint64_t kSl2TableCap = 4096;

// SL_2(Z_p) enumerated in lexicographic order of (a, b, c, d).
class SL2Group {
 public:
  // Throws DomainError for non-prime p, CapExceededError when p^3 - p
  // exceeds the cap.
  static std::shared_ptr<const SL2Group> create(std::uint64_t p,
                                                std::uint64_t cap = default_order_cap());

  std::uint64_t p() const { return p_; }
  std::uint64_t order() const { return elements_.size(); }
  Element identity() const { return identity_; }
  bool has_table() const { return !mul_.empty(); }

  const Matrix2& matrix(Element x) const { return elements_.at(x); }
  // Index of a determinant-one matrix; throws DomainError otherwise.
  Element index_of(const Matrix2& m) const;

  Element mul(Element x, Element y) const {
    if (!mul_.empty()) return mul_[x * elements_.size() + y];
    return mul_direct(x, y);
  }
  Element inv(Element x) const { return inv_[x]; }
  Element mul_direct(Element x, Element y) const;

 private:
  explicit SL2Group(std::uint64_t p);

  std::uint64_t p_;
  std::vector<Matrix2> elements_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> mul_;
  Element identity_ = 0;
};

using SL2Ptr = std::shared_ptr<const SL2Group>;

class SL2Set {
 public:
  static SL2Set empty(SL2Ptr group);
  static SL2Set full(SL2Ptr group);
  static SL2Set from_elements(SL2Ptr group, const std::vector<Element>& elements);
  static SL2Set from_bits(SL2Ptr group, BitVector bits);

  const SL2Group& group() const { return *group_; }
  const SL2Ptr& group_ptr() const { return group_; }
  const BitVector& bits() const { return bits_; }
  std::size_t size() const { return card_; }
  bool is_empty() const { return card_ == 0; }
  bool is_full() const { return card_ == group_->order(); }
  bool contains(Element x) const { return x < group_->order() && bits_.test(x); }
  std::vector<Element> elements() const;

  friend bool operator==(const SL2Set& a, const SL2Set& b) {
    return a.group_->p() == b.group_->p() && a.bits_ == b.bits_;
  }

 private:
  SL2Set(SL2Ptr group, BitVector bits);

  SL2Ptr group_;
  BitVector bits_;
  std::size_t card_ = 0;
};

// {ab : a in A, b in B}; not commutative.
SL2Set product_set(const SL2Set& a, const SL2Set& b);
// {a^{-1} : a in A}.
SL2Set inverse_set(const SL2Set& a);

struct QuasirandomInfo {
  std::uint64_t d = 0;     // (p-1)/2, the minimal nontrivial representation degree
  double delta = 0.0;      // ln D / ln |G|
};

QuasirandomInfo quasirandom_info(std::uint64_t p);

struct RuzsaReport {
  std::uint64_t a_size = 0;
  std::uint64_t b_size = 0;
  std::uint64_t c_size = 0;
  std::uint64_t ac_size = 0;   // |AC^{-1}|
  std::uint64_t ab_size = 0;   // |AB^{-1}|
  std::uint64_t bc_size = 0;   // |BC^{-1}|
  double bound = 0.0;          // |AB^{-1}| |BC^{-1}| / |B|
  bool inequality_holds = false;
  // Every z in AC^{-1} has at least |B| factorizations z = xy with
  // x in AB^{-1}, y in BC^{-1}.
  bool representations_checked = false;
  std::uint64_t min_representations = 0;
  bool representations_hold = true;
  bool pass = false;
};

// Representation counting runs when the order is at most this.
inline constexpr std::uint64_t kRepresentationCountCap = 2048;

RuzsaReport check_ruzsa(const SL2Set& a, const SL2Set& b, const SL2Set& c);

struct GowersReport {
  std::uint64_t d = 0;
  std::uint64_t a_size = 0;
  std::uint64_t b_size = 0;
  std::uint64_t c_size = 0;
  double size_product = 0.0;   // |A||B||C|
  double threshold = 0.0;      // |G|^3 / D
  bool premise_met = false;
  std::uint64_t product_size = 0;   // |ABC|
  bool covers = false;
  bool pass = false;           // false only when the premise holds and ABC != G
};

GowersReport check_gowers(const SL2Set& a, const SL2Set& b, const SL2Set& c);

struct Theorem4Bound {
  double raw = 0.0;       // log2(3 / delta)
  std::uint64_t k = 0;    // least integer strictly above raw
};

Theorem4Bound theorem4_bound(double delta);

struct ProductStep {
  std::size_t index = 0;        // 1-based position within the block
  std::uint64_t prev_size = 0;
  std::uint64_t size = 0;
  bool holds = false;           // |G| * prev <= size^2
  bool asserted = false;
};

struct BlockReport {
  std::vector<std::uint64_t> prefix_sizes;   // |A_1|, |A_1 A_2|, ...
  std::vector<ProductStep> prefix_steps;     // growth when appending on the right
  std::vector<std::uint64_t> suffix_sizes;   // |A_K|, |A_{K-1} A_K|, ...
  std::vector<ProductStep> suffix_steps;     // growth when prepending on the left
  std::uint64_t size = 0;                    // |A_1 ... A_K|
  double power_bound = 0.0;                  // |G|^{1 - 2^{-K}}
  bool power_bound_holds = false;
  double delta_bound = 0.0;                  // |G|^{1 - delta/3}
  bool exceeds_delta_bound = false;
};

struct Theorem4Report {
  std::uint64_t p = 0;
  std::uint64_t order = 0;
  std::uint64_t k = 0;                 // family size is 3K
  QuasirandomInfo info;
  Theorem4Bound bound;
  bool k_meets_bound = false;
  std::vector<bool> hypotheses;        // A_i A_i^{-1} = G
  std::vector<bool> mirror_hypotheses; // A_i^{-1} A_i = G
  bool hypotheses_hold = false;
  bool size_floors_hold = false;       // |A_i|^2 >= |G| for all i
  BlockReport blocks[3];
  bool chain_holds = false;
  GowersReport gowers;                 // applied to the three block products
  std::uint64_t total_size = 0;
  bool final_cover = false;
  bool violation = false;
  bool pass = false;
};

// Growth steps and covering for a family of 3K sets in SL_2(Z_p). Right
// appends (prefix products) are asserted where A_i^{-1} A_i = G; left
// prepends (suffix products) where A_i A_i^{-1} = G.
Theorem4Report verify_theorem4(const std::vector<SL2Set>& family);

inline constexpr int kDefaultSl2Attempts = 1000;

// Random set of ceil(density * |G|) elements with A A^{-1} = G, by rejection.
SL2Set random_difference_cover(const SL2Ptr& group, double density, Rng& rng,
                               int max_attempts = kDefaultSl2Attempts);

struct Remark12Report {
  std::uint64_t p = 0;
  QuasirandomInfo info;
  Theorem4Bound bound;
  bool applies = false;               // p >= 7
  bool twelve_sets_suffice = false;   // bound K == 4, so 3K == 12
  std::uint64_t trials = 0;
  std::uint64_t trials_passed = 0;
  std::vector<Theorem4Report> runs;
  bool pass = false;
};

inline constexpr double kDefaultSl2Density = 0.2;

// Bound computation for p, plus `trials` random 12-set families when p >= 7.
// Trial t uses seed + t.
Remark12Report remark12(std::uint64_t p, std::uint64_t trials, std::uint64_t seed,
                        double density = kDefaultSl2Density,
                        std::uint64_t cap = default_order_cap());

}  // namespace sumsetlab
