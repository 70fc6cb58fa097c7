#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumsetlab {

// Index of a group element in [0, order). Coordinates use little-endian
// mixed radix: the first factor is the least significant digit.
using Element = std::uint64_t;
using Coords = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 26;

// The element cap in effect: SUMSETLAB_ORDER_CAP if set and valid,
// otherwise kDefaultOrderCap.
std::uint64_t default_order_cap();

// Returns a*b, or throws CapExceededError when the product exceeds cap.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap);

// A finite Abelian group Z_{d_1} x ... x Z_{d_r}. Factors are kept exactly
// as given; no invariant-factor normalization.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::uint64_t> factors,
                     std::uint64_t cap = default_order_cap());

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }

  static constexpr Element identity() { return 0; }
  bool contains(Element x) const { return x < order_; }

  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  Element encode(std::span<const std::uint64_t> coords) const;
  Coords decode(Element x) const;

  // Canonical text form accepted by parse_group_spec, e.g. "Z3^4xZ10".
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  void check(Element x) const;

  std::vector<std::uint64_t> factors_;
  std::uint64_t order_ = 1;
};

// Parses `term ('x' term)*` with `term := 'Z' int ('^' int)?`. 'Z' and 'x'
// are case-insensitive; no whitespace is allowed.
GroupSpec parse_group_spec(std::string_view text,
                           std::uint64_t cap = default_order_cap());

// Z_p^n.
GroupSpec power_group(std::uint64_t p, std::uint64_t n,
                      std::uint64_t cap = default_order_cap());

}  // namespace sumsetlab
