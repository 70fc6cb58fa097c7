#include "sumsetlab/abelian_verify.hpp"

#include <algorithm>
#include <cmath>

#include "sumsetlab/constructions.hpp"
#include "sumsetlab/error.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {

namespace {

void require_same_group(const GroupSet& a, const GroupSet& b) {
  if (!(a.spec() == b.spec())) {
    throw DomainError("sets are over different groups: " + a.spec().to_string() +
                      " vs " + b.spec().to_string());
  }
}

}  // namespace

PlunneckeReport check_plunnecke(const GroupSet& a, const GroupSet& b, std::uint64_t k) {
  require_same_group(a, b);
  if (k < 2) throw DomainError("the inequality is stated for k >= 2, got k = " + std::to_string(k));
  if (b.is_empty()) throw DomainError("B must be nonempty (alpha undefined)");
  if (a.is_empty()) throw DomainError("A must be nonempty");

  PlunneckeReport r;
  r.a_size = a.size();
  r.b_size = b.size();
  r.sum_size = sumset(a, b).size();
  r.alpha = static_cast<double>(r.sum_size) / static_cast<double>(r.b_size);
  r.k = k;
  r.lhs = m_fold(a, k).size();
  r.rhs = std::pow(r.alpha, static_cast<double>(k)) * static_cast<double>(r.b_size);
  r.pass = within_bound(static_cast<double>(r.lhs), r.rhs);
  return r;
}

BoundValue theorem1_bound_log2(std::uint64_t m, double log2_order) {
  if (m < 2) throw DomainError("the covering bound needs m >= 2");
  if (!(log2_order >= 2.0)) {
    throw DomainError("the covering bound is undefined for |G| < 4 (log log |G| <= 0)");
  }
  BoundValue b;
  b.raw = m == 2 ? std::log2(log2_order)
                 : static_cast<double>(m) * std::log(log2_order);
  b.k = static_cast<std::uint64_t>(std::ceil(b.raw));
  return b;
}

BoundValue theorem1_bound(std::uint64_t m, std::uint64_t order) {
  if (order < 4) {
    throw DomainError("the covering bound is undefined for |G| = " +
                      std::to_string(order) + " < 4 (log log |G| <= 0)");
  }
  return theorem1_bound_log2(m, std::log2(static_cast<double>(order)));
}

Theorem1Report verify_theorem1(const std::vector<GroupSet>& family, std::uint64_t m) {
  if (family.empty() || family.size() % 2 != 0) {
    throw DomainError("family must hold 2K >= 2 sets, got " + std::to_string(family.size()));
  }
  if (m < 1) throw DomainError("m must be >= 1");
  for (const auto& a : family) {
    require_same_group(family.front(), a);
    if (a.is_empty()) throw DomainError("family sets must be nonempty");
  }
  const GroupSpec& spec = family.front().spec();
  const std::uint64_t order = spec.order();
  const double log_order = std::log(static_cast<double>(order));

  Theorem1Report r;
  r.m = m;
  r.k = family.size() / 2;
  r.order = order;
  const double ratio = static_cast<double>(m - 1) / static_cast<double>(m);
  r.lambda = std::pow(ratio, static_cast<double>(r.k));
  if (m == 1) {
    // mA = G forces A = G, so any K suffices.
    r.k_meets_bound = true;
  } else if (order >= 4) {
    r.bound = theorem1_bound(m, order);
    r.k_meets_bound = r.k >= r.bound->k;
  }

  for (const auto& a : family) r.hypotheses.push_back(is_cover(m_fold(a, m)));
  r.hypotheses_hold = std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                                  [](bool h) { return h; });

  bool chain_holds = true;
  GroupSet halves_sum[2] = {family.front(), family.front()};
  for (int h = 0; h < 2; ++h) {
    HalfReport& half = r.halves[h];
    const std::size_t first = static_cast<std::size_t>(h) * r.k;
    GroupSet prefix = family[first];
    half.prefix_sizes.push_back(prefix.size());
    bool half_hypotheses = true;
    for (std::size_t i = 1; i < r.k; ++i) {
      const GroupSet& a = family[first + i];
      GroupSet next = sumset(prefix, a);
      ChainStep step;
      step.index = i + 1;
      step.prev_size = prefix.size();
      step.size = next.size();
      step.bound = std::exp(log_order / static_cast<double>(m) +
                            ratio * std::log(static_cast<double>(step.prev_size)));
      step.holds = within_bound(step.bound, static_cast<double>(step.size));
      step.asserted = m >= 2 && r.hypotheses[first + i];
      half_hypotheses = half_hypotheses && r.hypotheses[first + i];
      if (step.asserted && !step.holds) chain_holds = false;
      half.steps.push_back(step);
      half.prefix_sizes.push_back(next.size());
      prefix = std::move(next);
    }
    half.size = prefix.size();
    const double size = static_cast<double>(half.size);
    const double log_first = std::log(static_cast<double>(family[first].size()));
    const double mu = std::pow(ratio, static_cast<double>(r.k - 1));
    half.telescoped_bound = std::exp((1.0 - mu) * log_order + mu * log_first);
    half.telescoped_bound_holds = within_bound(half.telescoped_bound, size);
    half.telescoped_bound_asserted = m >= 2 && half_hypotheses;
    half.lambda_bound = std::exp((1.0 - r.lambda) * log_order);
    half.lambda_bound_holds = within_bound(half.lambda_bound, size);
    half.lambda_bound_asserted = half.telescoped_bound_asserted && r.hypotheses[first];
    half.stated_bound = std::exp((1.0 - r.lambda) * log_order + r.lambda * log_first);
    half.stated_bound_holds = within_bound(half.stated_bound, size);
    if ((half.telescoped_bound_asserted && !half.telescoped_bound_holds) ||
        (half.lambda_bound_asserted && !half.lambda_bound_holds)) {
      chain_holds = false;
    }
    half.exceeds_half = 2 * half.size > order;
    halves_sum[h] = std::move(prefix);
  }
  r.chain_holds = chain_holds;

  const GroupSet total = sumset(halves_sum[0], halves_sum[1]);
  r.total_size = total.size();
  r.final_cover = is_cover(total);

  const bool guaranteed_cover_failed =
      r.k_meets_bound &&
      (!r.halves[0].exceeds_half || !r.halves[1].exceeds_half || !r.final_cover);
  r.violation = r.hypotheses_hold && (!r.chain_holds || guaranteed_cover_failed);
  r.pass = r.hypotheses_hold && r.chain_holds && r.final_cover && !r.violation;
  return r;
}

PigeonholeReport pigeonhole_sum(const GroupSet& a, const GroupSet& b) {
  require_same_group(a, b);
  PigeonholeReport r;
  r.a_size = a.size();
  r.b_size = b.size();
  r.order = a.spec().order();
  r.premise_met = 2 * r.a_size > r.order && 2 * r.b_size > r.order;
  const GroupSet sum = sumset(a, b);
  r.sum_size = sum.size();
  r.covers = is_cover(sum);
  r.pass = !r.premise_met || r.covers;
  return r;
}

KpnUpper kpn_upper(std::uint64_t p, std::uint64_t n) {
  if (p < 2 || n < 1) throw DomainError("kpn_upper needs p >= 2 and n >= 1");
  KpnUpper u;
  const double pm1 = static_cast<double>(p - 1);
  u.general = 2.0 * pm1 * std::log(static_cast<double>(n)) +
              2.0 * pm1 * std::log(std::log2(static_cast<double>(p)));
  if (p == 3) u.ternary = 2.0 * std::log2(static_cast<double>(n)) + 2.0;
  return u;
}

bool is_additive_basis(const ElementMultiset& b) { return is_cover(subset_sums(b)); }

namespace {

// C(n + k - 1, k), saturating at `limit` + 1.
std::uint64_t multichoose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (n == 0) return k == 0 ? 1 : 0;
  UInt128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n + i - 1) / i;
    if (result > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(result);
}

constexpr std::uint64_t kMaxEnumeratedCombinations = 2'000'000;

// Unordered bases of Z_p^n as sorted element lists, or nothing if the
// candidate n-subsets are too many to walk.
std::optional<std::vector<std::vector<Element>>> enumerate_bases(const GroupSpec& space) {
  const std::uint64_t p = space.factors().front();
  const std::uint64_t n = space.rank();
  const std::uint64_t vectors = space.order() - 1;
  if (n > vectors) return std::vector<std::vector<Element>>{};
  // C(vectors, n) via the multichoose helper: C(a, b) = multichoose(a-b+1, b).
  if (multichoose_capped(vectors - n + 1, n, kMaxEnumeratedCombinations) >
      kMaxEnumeratedCombinations) {
    return std::nullopt;
  }
  std::vector<std::vector<Element>> bases;
  std::vector<Element> pick(n);
  for (std::uint64_t i = 0; i < n; ++i) pick[i] = i + 1;
  while (true) {
    std::vector<Coords> rows;
    for (Element x : pick) rows.push_back(space.decode(x));
    if (rank_mod_p(rows, p) == n) bases.push_back(pick);
    // Next n-combination of [1, vectors].
    std::int64_t i = static_cast<std::int64_t>(n) - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == vectors - n + 1 + static_cast<std::uint64_t>(i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return bases;
}

KpnWitness make_witness(const GroupSpec& space, const std::vector<std::vector<Element>>& bases) {
  KpnWitness w;
  w.k = bases.size();
  ElementMultiset all(space);
  for (const auto& basis : bases) {
    std::vector<Coords> rows;
    for (Element x : basis) {
      rows.push_back(space.decode(x));
      all.add(x);
    }
    w.bases.push_back(std::move(rows));
  }
  for (Element x : subset_sums(all).elements()) w.subset_sums.push_back(space.decode(x));
  return w;
}

}  // namespace

KpnReport kpn_exact_small(std::uint64_t p, std::uint64_t n, std::uint64_t k_max,
                          std::uint64_t budget, std::uint64_t seed,
                          std::uint64_t cap) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  if (budget < 1) throw DomainError("budget must be >= 1");
  const GroupSpec space = power_group(p, n, cap);

  KpnReport r;
  r.p = p;
  r.n = n;
  r.k_max = k_max;
  r.budget = budget;
  const auto bases = enumerate_bases(space);
  std::vector<GroupSet> basis_sums;
  if (bases) {
    r.basis_count = bases->size();
    for (const auto& basis : *bases) {
      basis_sums.push_back(subset_sums(ElementMultiset(space, basis)));
    }
  }

  Rng rng(seed);
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    KpnLevel level;
    level.k = k;
    std::optional<std::vector<std::vector<Element>>> failing;

    if (bases && multichoose_capped(bases->size(), k, budget) <= budget) {
      level.exhaustive = true;
      // Nondecreasing k-tuples of basis indices.
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        ++level.tuples_checked;
        GroupSet sums = basis_sums[idx[0]];
        for (std::size_t j = 1; j < k && !sums.is_full(); ++j) {
          sums = sumset(sums, basis_sums[idx[j]]);
        }
        if (!sums.is_full()) {
          std::vector<std::vector<Element>> chosen;
          for (std::size_t j : idx) chosen.push_back((*bases)[j]);
          failing = std::move(chosen);
          break;
        }
        std::int64_t j = static_cast<std::int64_t>(k) - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] + 1 == bases->size()) --j;
        if (j < 0) break;
        const std::size_t next = idx[static_cast<std::size_t>(j)] + 1;
        for (std::size_t t = static_cast<std::size_t>(j); t < k; ++t) idx[t] = next;
      }
    } else {
      for (std::uint64_t t = 0; t < budget; ++t) {
        ++level.tuples_checked;
        std::vector<std::vector<Element>> chosen;
        ElementMultiset all(space);
        for (std::uint64_t j = 0; j < k; ++j) {
          std::vector<Element> basis;
          if (bases && !bases->empty()) {
            basis = (*bases)[rng.below(bases->size())];
          } else {
            basis = random_basis(space, rng).expanded();
            std::sort(basis.begin(), basis.end());
          }
          for (Element x : basis) all.add(x);
          chosen.push_back(std::move(basis));
        }
        if (!is_additive_basis(all)) {
          failing = std::move(chosen);
          break;
        }
      }
    }

    level.counterexample_found = failing.has_value();
    r.levels.push_back(level);
    if (failing) {
      r.witness = make_witness(space, *failing);
      continue;
    }
    r.answer = k;
    // Failures are closed under dropping a basis, so exhaustion at this k
    // settles the value.
    r.exact = level.exhaustive;
    break;
  }
  return r;
}

}  // namespace sumsetlab
