#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumsetlab/bit_vector.hpp"
#include "sumsetlab/group.hpp"

namespace sumsetlab {

// A subset of a GroupSpec's elements stored as a dense bit array with a
// cached cardinality. Immutable once built.
class GroupSet {
 public:
  static GroupSet empty(const GroupSpec& spec);
  static GroupSet full(const GroupSpec& spec);
  static GroupSet singleton(const GroupSpec& spec, Element x);
  static GroupSet from_elements(const GroupSpec& spec,
                                std::span<const Element> elements);
  static GroupSet from_bits(const GroupSpec& spec, BitVector bits);

  const GroupSpec& spec() const { return spec_; }
  const BitVector& bits() const { return bits_; }
  std::size_t size() const { return card_; }
  bool is_empty() const { return card_ == 0; }
  bool is_full() const { return card_ == spec_.order(); }
  bool contains(Element x) const { return x < spec_.order() && bits_.test(x); }
  bool is_subset_of(const GroupSet& other) const;

  // Members in increasing index order.
  std::vector<Element> elements() const;

  friend bool operator==(const GroupSet& a, const GroupSet& b) {
    return a.spec_ == b.spec_ && a.bits_ == b.bits_;
  }

 private:
  GroupSet(GroupSpec spec, BitVector bits);

  GroupSpec spec_;
  BitVector bits_;
  std::size_t card_ = 0;
};

// A multiset of elements of one group; entries with equal elements are kept
// separately and their multiplicities add.
class ElementMultiset {
 public:
  struct Entry {
    Element element;
    std::uint64_t multiplicity;
  };

  explicit ElementMultiset(GroupSpec spec) : spec_(std::move(spec)) {}
  ElementMultiset(GroupSpec spec, std::span<const Element> elements);

  void add(Element x, std::uint64_t multiplicity = 1);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t total_count() const;
  // Every copy listed individually, in entry order.
  std::vector<Element> expanded() const;

 private:
  GroupSpec spec_;
  std::vector<Entry> entries_;
};

// Disjoint (multiplicity-adding) union B1 ⊎ B2.
ElementMultiset multiset_union(const ElementMultiset& a, const ElementMultiset& b);

// {a + g : a in A}.
GroupSet translate(const GroupSet& a, Element g);

// {a + b : a in A, b in B}.
GroupSet sumset(const GroupSet& a, const GroupSet& b);

// A + ... + A with m copies; m = 0 gives {identity}. Binary doubling with
// early exit once an intermediate covers the group.
GroupSet m_fold(const GroupSet& a, std::uint64_t m);

// All sums over sub-multisets of B, including the empty sum.
GroupSet subset_sums(const ElementMultiset& b);

inline bool is_cover(const GroupSet& a) { return a.is_full(); }

GroupSet set_union(const GroupSet& a, const GroupSet& b);

namespace kernel {

// dst[x + g] |= src[x] for every x, with word-parallel moves.
void or_translate(BitVector& dst, const BitVector& src, const GroupSpec& spec,
                  Element g);

}  // namespace kernel

}  // namespace sumsetlab
