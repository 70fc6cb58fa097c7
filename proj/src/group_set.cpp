#include "sumsetlab/group_set.hpp"

#include <algorithm>
#include <optional>

#include "sumsetlab/error.hpp"

namespace sumsetlab {

GroupSet::GroupSet(GroupSpec spec, BitVector bits)
    : spec_(std::move(spec)), bits_(std::move(bits)), card_(bits_.count()) {}

GroupSet GroupSet::empty(const GroupSpec& spec) {
  return GroupSet(spec, BitVector(spec.order()));
}

GroupSet GroupSet::full(const GroupSpec& spec) {
  BitVector bits(spec.order());
  bits.fill();
  return GroupSet(spec, std::move(bits));
}

GroupSet GroupSet::singleton(const GroupSpec& spec, Element x) {
  const Element one[] = {x};
  return from_elements(spec, one);
}

GroupSet GroupSet::from_elements(const GroupSpec& spec,
                                 std::span<const Element> elements) {
  BitVector bits(spec.order());
  for (Element x : elements) {
    if (!spec.contains(x)) {
      throw DomainError("element index " + std::to_string(x) +
                        " out of range for " + spec.to_string());
    }
    bits.set(x);
  }
  return GroupSet(spec, std::move(bits));
}

GroupSet GroupSet::from_bits(const GroupSpec& spec, BitVector bits) {
  if (bits.size() != spec.order()) {
    throw DomainError("bit array length " + std::to_string(bits.size()) +
                      " does not match group order " +
                      std::to_string(spec.order()));
  }
  return GroupSet(spec, std::move(bits));
}

bool GroupSet::is_subset_of(const GroupSet& other) const {
  return spec_ == other.spec_ && bits_.is_subset_of(other.bits_);
}

std::vector<Element> GroupSet::elements() const {
  std::vector<Element> out;
  out.reserve(card_);
  bits_.for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

ElementMultiset::ElementMultiset(GroupSpec spec, std::span<const Element> elements)
    : spec_(std::move(spec)) {
  for (Element x : elements) add(x);
}

void ElementMultiset::add(Element x, std::uint64_t multiplicity) {
  if (!spec_.contains(x)) {
    throw DomainError("element index " + std::to_string(x) +
                      " out of range for " + spec_.to_string());
  }
  if (multiplicity == 0) throw DomainError("multiplicity must be positive");
  entries_.push_back({x, multiplicity});
}

std::uint64_t ElementMultiset::total_count() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<Element> ElementMultiset::expanded() const {
  std::vector<Element> out;
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.element);
  return out;
}

ElementMultiset multiset_union(const ElementMultiset& a, const ElementMultiset& b) {
  if (!(a.spec() == b.spec())) {
    throw DomainError("multisets are over different groups: " +
                      a.spec().to_string() + " vs " + b.spec().to_string());
  }
  ElementMultiset out = a;
  for (const auto& e : b.entries()) out.add(e.element, e.multiplicity);
  return out;
}

namespace kernel {
namespace {

bool is_elementary_two_group(const GroupSpec& spec) {
  const auto& f = spec.factors();
  return std::all_of(f.begin(), f.end(), [](std::uint64_t d) { return d == 2; });
}

// Permutes bit positions i -> i ^ c inside one word (c < 64).
BitVector::Word xor_permute_word(BitVector::Word v, unsigned c) {
  static constexpr BitVector::Word kMasks[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (unsigned b = 0; b < 6; ++b) {
    if ((c >> b) & 1U) {
      const unsigned s = 1U << b;
      v = ((v & kMasks[b]) << s) | ((v >> s) & kMasks[b]);
    }
  }
  return v;
}

// In Z_2^r addition is XOR of indices: move whole words, permute within.
void or_translate_xor(BitVector& dst, const BitVector& src, Element g) {
  const auto in = src.words();
  auto out = dst.mutable_words();
  const unsigned low = static_cast<unsigned>(g % BitVector::kWordBits);
  const std::size_t high = static_cast<std::size_t>(g / BitVector::kWordBits);
  for (std::size_t w = 0; w < in.size(); ++w) {
    if (in[w] != 0) out[w ^ high] |= xor_permute_word(in[w], low);
  }
}

}  // namespace

void or_translate(BitVector& dst, const BitVector& src, const GroupSpec& spec,
                  Element g) {
  const Coords shift = spec.decode(g);
  if (is_elementary_two_group(spec)) {
    or_translate_xor(dst, src, g);
    return;
  }
  // Rows are cosets of the first cyclic factor. Inside a row the
  // translation is a rotation; the higher coordinates permute whole rows.
  const auto& f = spec.factors();
  const std::uint64_t width = f[0];
  const std::uint64_t rot = shift[0];
  const std::size_t high_rank = f.size() - 1;
  std::vector<std::uint64_t> cur(high_rank, 0);
  std::vector<std::uint64_t> moved(high_rank);
  std::vector<std::uint64_t> stride(high_rank);
  std::uint64_t dest_row = 0;
  std::uint64_t s = 1;
  for (std::size_t j = 0; j < high_rank; ++j) {
    moved[j] = shift[j + 1];
    stride[j] = s;
    dest_row += moved[j] * s;
    s *= f[j + 1];
  }
  const std::uint64_t rows = spec.order() / width;
  for (std::uint64_t row = 0; row < rows; ++row) {
    const std::uint64_t from = row * width;
    const std::uint64_t to = dest_row * width;
    if (rot == 0) {
      dst.or_range(src, from, to, width);
    } else {
      dst.or_range(src, from, to + rot, width - rot);
      dst.or_range(src, from + width - rot, to, rot);
    }
    for (std::size_t j = 0; j < high_rank; ++j) {
      const std::uint64_t d = f[j + 1];
      const std::uint64_t next = moved[j] + 1 == d ? 0 : moved[j] + 1;
      dest_row = dest_row - moved[j] * stride[j] + next * stride[j];
      moved[j] = next;
      if (++cur[j] < d) break;
      cur[j] = 0;
    }
  }
}

}  // namespace kernel

namespace {

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) {
    throw DomainError("sets are over different groups: " + a.to_string() +
                      " vs " + b.to_string());
  }
}

}  // namespace

GroupSet translate(const GroupSet& a, Element g) {
  if (!a.spec().contains(g)) {
    throw DomainError("translation element " + std::to_string(g) +
                      " out of range for " + a.spec().to_string());
  }
  BitVector out(a.spec().order());
  kernel::or_translate(out, a.bits(), a.spec(), g);
  return GroupSet::from_bits(a.spec(), std::move(out));
}

GroupSet sumset(const GroupSet& a, const GroupSet& b) {
  require_same_group(a.spec(), b.spec());
  const GroupSpec& spec = a.spec();
  if (a.is_empty() || b.is_empty()) return GroupSet::empty(spec);
  const GroupSet& small = a.size() <= b.size() ? a : b;
  const GroupSet& large = a.size() <= b.size() ? b : a;
  if (large.is_full()) return large;

  BitVector out(spec.order());
  bool covered = false;
  small.bits().for_each_set([&](std::size_t x) {
    if (covered) return;
    kernel::or_translate(out, large.bits(), spec, x);
    covered = out.count() == spec.order();
  });
  return GroupSet::from_bits(spec, std::move(out));
}

GroupSet m_fold(const GroupSet& a, std::uint64_t m) {
  const GroupSpec& spec = a.spec();
  if (m == 0) return GroupSet::singleton(spec, GroupSpec::identity());
  if (a.is_empty() || a.is_full()) return a;

  GroupSet power = a;
  std::optional<GroupSet> acc;
  while (true) {
    if (m & 1U) {
      acc = acc ? sumset(*acc, power) : power;
      if (acc->is_full()) return *acc;
    }
    m >>= 1U;
    if (m == 0) break;
    power = sumset(power, power);
    if (power.is_full()) return power;
  }
  return *acc;
}

GroupSet subset_sums(const ElementMultiset& b) {
  const GroupSpec& spec = b.spec();
  BitVector sums(spec.order());
  sums.set(GroupSpec::identity());
  std::size_t card = 1;
  for (const auto& entry : b.entries()) {
    for (std::uint64_t copy = 0; copy < entry.multiplicity; ++copy) {
      BitVector next = sums;
      kernel::or_translate(next, sums, spec, entry.element);
      const std::size_t next_card = next.count();
      // A copy that adds nothing means every further copy adds nothing.
      if (next_card == card) break;
      sums = std::move(next);
      card = next_card;
      if (card == spec.order()) return GroupSet::from_bits(spec, std::move(sums));
    }
  }
  return GroupSet::from_bits(spec, std::move(sums));
}

GroupSet set_union(const GroupSet& a, const GroupSet& b) {
  require_same_group(a.spec(), b.spec());
  BitVector out = a.bits();
  out |= b.bits();
  return GroupSet::from_bits(a.spec(), std::move(out));
}

}  // namespace sumsetlab
