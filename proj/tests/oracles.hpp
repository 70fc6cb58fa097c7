#pragma once

// Brute-force reference computations used only by the tests. None of these
// go through the word-parallel kernels they are compared against.

#include <cstdint>
#include <set>
#include <vector>

#include "sumsetlab/group.hpp"
#include "sumsetlab/group_set.hpp"
#include "sumsetlab/sl2.hpp"

namespace oracle {

using sumsetlab::Coords;
using sumsetlab::Element;
using sumsetlab::GroupSpec;

// Coordinatewise addition via decode/encode.
Element add(const GroupSpec& spec, Element x, Element y);

// {a + b} by enumerating all pairs.
std::set<Element> sumset(const GroupSpec& spec, const std::set<Element>& a,
                         const std::set<Element>& b);

// A + A + ... + A by m - 1 successive pairwise sumsets ({0} for m = 0).
std::set<Element> iterated_sumset(const GroupSpec& spec, const std::set<Element>& a,
                                  std::uint64_t m);

// Sums over all 2^|B| sub-multisets of the listed elements.
std::set<Element> subset_sums(const GroupSpec& spec, const std::vector<Element>& items);

std::set<Element> to_set(const sumsetlab::GroupSet& s);
std::set<Element> to_set(const sumsetlab::SL2Set& s);

// Determinant of a square integer matrix mod p, by cofactor expansion.
std::int64_t det_mod_p(const std::vector<Coords>& rows, std::int64_t p);

// SL_2 product by explicit matrix multiplication and a linear scan.
Element sl2_mul(const sumsetlab::SL2Group& g, Element x, Element y);

std::set<Element> product_set(const sumsetlab::SL2Group& g, const std::set<Element>& a,
                              const std::set<Element>& b);

}  // namespace oracle
