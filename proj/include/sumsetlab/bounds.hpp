#pragma once

#include <cmath>

namespace sumsetlab {

// Wide integer for exact products of cardinalities.
__extension__ using UInt128 = unsigned __int128;

// Relative slack granted to every real-valued bound before a measured
// integer is declared to violate it.
inline constexpr double kBoundGuard = 1e-9;

// lhs <= rhs, with rhs widened by kBoundGuard.
inline bool within_bound(double lhs, double rhs) {
  return lhs <= rhs + kBoundGuard * std::abs(rhs);
}

// lhs > rhs, with rhs narrowed by kBoundGuard.
inline bool above_bound(double lhs, double rhs) {
  return lhs > rhs - kBoundGuard * std::abs(rhs);
}

}  // namespace sumsetlab
