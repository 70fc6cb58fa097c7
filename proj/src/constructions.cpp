#include "sumsetlab/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "sumsetlab/bounds.hpp"
#include "sumsetlab/error.hpp"

namespace sumsetlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  UInt128 result = 1;
  UInt128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t e = 0; e < exp; ++e) result = checked_mul(result, base, cap);
  return result;
}

std::uint64_t two_to(unsigned e) {
  if (e >= 40) throw CapExceededError("dimension 2^" + std::to_string(e) + " is too large");
  return std::uint64_t{1} << e;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

// All x in Z_p^{blocks * block_len} whose base-p^{block_len} digits lie in
// `digits` (a sorted list of admissible block values).
GroupSet block_product(const GroupSpec& spec, std::uint64_t block_order,
                       std::uint64_t blocks, const std::vector<std::uint64_t>& digits) {
  BitVector bits(spec.order());
  if (!digits.empty()) {
    std::vector<std::size_t> pos(blocks, 0);
    std::vector<std::uint64_t> stride(blocks);
    std::uint64_t s = 1;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      stride[b] = s;
      s *= block_order;
    }
    while (true) {
      std::uint64_t x = 0;
      for (std::uint64_t b = 0; b < blocks; ++b) x += digits[pos[b]] * stride[b];
      bits.set(x);
      std::uint64_t b = 0;
      while (b < blocks && ++pos[b] == digits.size()) pos[b++] = 0;
      if (b == blocks) break;
    }
  }
  return GroupSet::from_bits(spec, std::move(bits));
}

std::vector<std::uint64_t> nonzero_digits(std::uint64_t block_order) {
  std::vector<std::uint64_t> digits(block_order - 1);
  for (std::uint64_t d = 1; d < block_order; ++d) digits[d - 1] = d;
  return digits;
}

}  // namespace

std::size_t rank_mod_p(std::vector<Coords> rows, std::uint64_t p) {
  require_prime(p);
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = pow_mod(rows[rank][c], p - 2, p);
    for (auto& v : rows[rank]) v = static_cast<std::uint64_t>(
        static_cast<UInt128>(v % p) * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const std::uint64_t factor = rows[r][c] % p;
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        const std::uint64_t sub = static_cast<std::uint64_t>(
            static_cast<UInt128>(factor) * rows[rank][j] % p);
        rows[r][j] = (rows[r][j] % p + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

GroupSet example_c(std::uint64_t p, unsigned i, std::uint64_t cap) {
  if (i < 1) throw DomainError("example_c needs i >= 1");
  const GroupSpec spec = power_group(p, two_to(i), cap);
  const std::uint64_t half = checked_pow(p, two_to(i - 1), cap);
  BitVector bits(spec.order());
  for (std::uint64_t v = 1; v < half; ++v) {
    bits.set(v);          // second half zero
    bits.set(v * half);   // first half zero
  }
  return GroupSet::from_bits(spec, std::move(bits));
}

GroupSet example_a(std::uint64_t p, unsigned k, unsigned i, std::uint64_t cap) {
  if (i > k) throw DomainError("example_a needs 0 <= i <= k");
  const GroupSpec spec = power_group(p, two_to(k), cap);
  if (i == 0) return block_product(spec, p, two_to(k), nonzero_digits(p));
  const GroupSet c = example_c(p, i, cap);
  return block_product(spec, c.spec().order(), two_to(k - i), c.elements());
}

GroupSet nonzero_blocks(std::uint64_t p, unsigned k, unsigned j, std::uint64_t cap) {
  if (j > k) throw DomainError("nonzero_blocks needs 0 <= j <= k");
  const GroupSpec spec = power_group(p, two_to(k), cap);
  const std::uint64_t block_order = checked_pow(p, two_to(j), cap);
  return block_product(spec, block_order, two_to(k - j), nonzero_digits(block_order));
}

Example1Family example1_family(std::uint64_t p, unsigned k, std::uint64_t cap) {
  if (p < 2) throw DomainError("example1 needs p >= 2");
  if (k < 1) throw DomainError("example1 needs k >= 1");
  Example1Family family;
  family.p = p;
  family.k = k;
  family.n = two_to(k);
  for (unsigned i = 0; i <= k; ++i) family.a.push_back(example_a(p, k, i, cap));
  if (p == 2) {
    family.warnings.push_back(
        "p = 2: C_1 + C_1 = {(0,0),(1,1)} != Z_2^2 and A_0 + A_0 = {0}; "
        "the family's covering identities need p >= 3");
  }
  return family;
}

Example1Report check_example1(std::uint64_t p, unsigned k, std::uint64_t cap) {
  const Example1Family family = example1_family(p, k, cap);
  const GroupSpec& spec = family.a.front().spec();

  Example1Report report;
  report.p = p;
  report.k = k;
  report.n = family.n;
  report.order = spec.order();
  report.warnings = family.warnings;
  report.claims_expected = p >= 3;

  bool formulas_hold = true;
  bool claims_hold = true;
  for (unsigned i = 0; i <= k; ++i) {
    Example1Level level;
    level.i = i;
    const GroupSet& a = family.a[i];
    level.a_size = a.size();
    level.a_double_covers = is_cover(sumset(a, a));
    if (i == 0) {
      level.a_size_expected = checked_pow(p - 1, family.n, cap);
    } else {
      const GroupSet c = example_c(p, i, cap);
      level.c_size = c.size();
      level.c_size_expected = 2 * (checked_pow(p, two_to(i - 1), cap) - 1);
      const GroupSet c_double = sumset(c, c);
      level.c_double_size = c_double.size();
      level.c_double_covers = is_cover(c_double);
      level.a_size_expected = checked_pow(level.c_size_expected, two_to(k - i), cap);
      formulas_hold = formulas_hold && level.c_size == level.c_size_expected;
      claims_hold = claims_hold && level.c_double_covers && level.a_double_covers;
    }
    formulas_hold = formulas_hold && level.a_size == level.a_size_expected;
    report.levels.push_back(level);
  }

  GroupSet running = family.a[0];
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) running = sumset(running, family.a[j]);
    Example1ChainStep step;
    step.j = j;
    step.size = running.size();
    step.size_expected =
        checked_pow(checked_pow(p, two_to(j), cap) - 1, two_to(k - j), cap);
    step.matches_structure = running == nonzero_blocks(p, k, j, cap);
    step.covers = is_cover(running);
    claims_hold = claims_hold && step.matches_structure &&
                  step.size == step.size_expected && !step.covers;
    report.chain.push_back(step);
  }
  report.claims_hold = claims_hold;

  if (p == 2) {
    const GroupSet c1 = example_c(2, 1, cap);
    const GroupSet c1_double = sumset(c1, c1);
    for (Element x : c1_double.elements()) {
      report.p2_c1_double.push_back(c1.spec().decode(x));
    }
    report.p2_edge_case_reproduced =
        report.p2_c1_double == std::vector<Coords>{{0, 0}, {1, 1}};
  }

  report.pass = formulas_hold &&
                (report.claims_expected ? report.claims_hold
                                        : report.p2_edge_case_reproduced);
  return report;
}

ElementMultiset standard_basis(std::uint64_t p, std::uint64_t n, std::uint64_t cap) {
  require_prime(p);
  const GroupSpec spec = power_group(p, n, cap);
  ElementMultiset basis(spec);
  std::uint64_t unit = 1;
  for (std::uint64_t i = 0; i < n; ++i, unit *= p) basis.add(unit);
  return basis;
}

ElementMultiset random_basis(const GroupSpec& space, Rng& rng) {
  const std::uint64_t p = space.factors().front();
  require_prime(p);
  for (std::uint64_t d : space.factors()) {
    if (d != p) throw DomainError("random_basis needs a group of the form Z_p^n");
  }
  const std::size_t n = space.rank();
  // Invertible matrices are a constant fraction of all matrices (>= 0.28).
  while (true) {
    std::vector<Coords> rows(n, Coords(n));
    for (auto& row : rows) {
      for (auto& v : row) v = rng.below(p);
    }
    if (rank_mod_p(rows, p) == n) {
      ElementMultiset basis(space);
      for (const auto& row : rows) basis.add(space.encode(row));
      return basis;
    }
  }
}

ElementMultiset random_basis(std::uint64_t p, std::uint64_t n, std::uint64_t seed,
                             std::uint64_t cap) {
  require_prime(p);
  Rng rng(seed);
  return random_basis(power_group(p, n, cap), rng);
}

std::vector<Coords> basis_rows(const ElementMultiset& basis) {
  std::vector<Coords> rows;
  for (Element x : basis.expanded()) rows.push_back(basis.spec().decode(x));
  return rows;
}

std::uint64_t target_size(std::uint64_t n, double density) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw DomainError("density must lie in (0, 1], got " + std::to_string(density));
  }
  const double raw = density * static_cast<double>(n);
  // Absorb representation error so that e.g. 0.4 * 5 gives exactly 2.
  auto size = static_cast<std::uint64_t>(std::ceil(raw - 1e-9 * raw));
  return std::clamp<std::uint64_t>(size, 1, n);
}

GroupSet random_cover_set(const GroupSpec& spec, std::uint64_t m, double density,
                          Rng& rng, int max_attempts) {
  if (m < 1) throw DomainError("random_cover_set needs m >= 1");
  const std::uint64_t size = target_size(spec.order(), density);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const auto picks = rng.sample_subset(spec.order(), size);
    GroupSet a = GroupSet::from_elements(spec, picks);
    if (is_cover(m_fold(a, m))) return a;
  }
  throw BudgetExhaustedError(
      "no set of density " + std::to_string(density) + " with " +
      std::to_string(m) + "-fold sumset covering " + spec.to_string() +
      " found in " + std::to_string(max_attempts) + " attempts");
}

GroupSet random_cover_set(const GroupSpec& spec, std::uint64_t m, double density,
                          std::uint64_t seed, int max_attempts) {
  Rng rng(seed);
  return random_cover_set(spec, m, density, rng, max_attempts);
}

}  // namespace sumsetlab
