#include "sumsetlab/sl2.hpp"

#include <algorithm>
#include <cmath>

#include "sumsetlab/bounds.hpp"
#include "sumsetlab/constructions.hpp"
#include "sumsetlab/error.hpp"

namespace sumsetlab {

SL2Group::SL2Group(std::uint64_t p) : p_(p) {
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t c = 0; c < p; ++c) {
        for (std::uint64_t d = 0; d < p; ++d) {
          if ((a * d + p * p - b * c) % p == 1 % p) {
            elements_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                 static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d)});
          }
        }
      }
    }
  }
  identity_ = index_of({1, 0, 0, 1});
  const std::size_t n = elements_.size();
  inv_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& m = elements_[x];
    const auto neg = [p](std::uint32_t v) {
      return static_cast<std::uint32_t>(v == 0 ? 0 : p - v);
    };
    inv_[x] = static_cast<std::uint32_t>(index_of({m[3], neg(m[1]), neg(m[2]), m[0]}));
  }
  if (n <= kSl2TableCap) {
    mul_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        mul_[x * n + y] = static_cast<std::uint32_t>(mul_direct(x, y));
      }
    }
  }
}

std::shared_ptr<const SL2Group> SL2Group::create(std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  checked_mul(checked_mul(p, p, cap), p, cap);
  return std::shared_ptr<const SL2Group>(new SL2Group(p));
}

Element SL2Group::index_of(const Matrix2& m) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
  if (it == elements_.end() || *it != m) {
    throw DomainError("matrix is not in SL_2(Z_" + std::to_string(p_) + ")");
  }
  return static_cast<Element>(it - elements_.begin());
}

Element SL2Group::mul_direct(Element x, Element y) const {
  const auto& u = elements_[x];
  const auto& v = elements_[y];
  const std::uint64_t p = p_;
  const auto dot = [p](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return static_cast<std::uint32_t>((a * b + c * d) % p);
  };
  return index_of({dot(u[0], v[0], u[1], v[2]), dot(u[0], v[1], u[1], v[3]),
                   dot(u[2], v[0], u[3], v[2]), dot(u[2], v[1], u[3], v[3])});
}

SL2Set::SL2Set(SL2Ptr group, BitVector bits)
    : group_(std::move(group)), bits_(std::move(bits)), card_(bits_.count()) {}

SL2Set SL2Set::empty(SL2Ptr group) {
  BitVector bits(group->order());
  return SL2Set(std::move(group), std::move(bits));
}

SL2Set SL2Set::full(SL2Ptr group) {
  BitVector bits(group->order());
  bits.fill();
  return SL2Set(std::move(group), std::move(bits));
}

SL2Set SL2Set::from_elements(SL2Ptr group, const std::vector<Element>& elements) {
  BitVector bits(group->order());
  for (Element x : elements) {
    if (x >= group->order()) {
      throw DomainError("element index " + std::to_string(x) + " out of range for SL_2(Z_" +
                        std::to_string(group->p()) + ")");
    }
    bits.set(x);
  }
  return SL2Set(std::move(group), std::move(bits));
}

SL2Set SL2Set::from_bits(SL2Ptr group, BitVector bits) {
  if (bits.size() != group->order()) {
    throw DomainError("bit array length does not match the group order");
  }
  return SL2Set(std::move(group), std::move(bits));
}

std::vector<Element> SL2Set::elements() const {
  std::vector<Element> out;
  out.reserve(card_);
  bits_.for_each_set([&](std::size_t i) { out.push_back(i); });
  return out;
}

namespace {

void require_same_group(const SL2Set& a, const SL2Set& b) {
  if (a.group().p() != b.group().p()) {
    throw DomainError("sets are over different groups: SL_2(Z_" + std::to_string(a.group().p()) +
                      ") vs SL_2(Z_" + std::to_string(b.group().p()) + ")");
  }
}

}  // namespace

SL2Set product_set(const SL2Set& a, const SL2Set& b) {
  require_same_group(a, b);
  const SL2Group& g = a.group();
  const std::uint64_t order = g.order();
  BitVector out(order);
  std::uint64_t count = 0;
  const std::vector<Element> right = b.elements();
  for (Element x : a.elements()) {
    for (Element y : right) {
      if (out.test_and_set(g.mul(x, y))) ++count;
    }
    if (count == order) break;
  }
  return SL2Set::from_bits(a.group_ptr(), std::move(out));
}

SL2Set inverse_set(const SL2Set& a) {
  BitVector out(a.group().order());
  a.bits().for_each_set([&](std::size_t x) { out.set(a.group().inv(x)); });
  return SL2Set::from_bits(a.group_ptr(), std::move(out));
}

QuasirandomInfo quasirandom_info(std::uint64_t p) {
  if (!is_prime(p) || p < 3) {
    throw DomainError("quasirandomness degree (p-1)/2 needs an odd prime p, got " +
                      std::to_string(p));
  }
  QuasirandomInfo info;
  info.d = (p - 1) / 2;
  const double order = static_cast<double>(p * p * p - p);
  info.delta = std::log(static_cast<double>(info.d)) / std::log(order);
  return info;
}

RuzsaReport check_ruzsa(const SL2Set& a, const SL2Set& b, const SL2Set& c) {
  require_same_group(a, b);
  require_same_group(b, c);
  if (b.is_empty()) throw DomainError("B must be nonempty");
  const SL2Set b_inv = inverse_set(b);
  const SL2Set c_inv = inverse_set(c);
  const SL2Set ac = product_set(a, c_inv);
  const SL2Set ab = product_set(a, b_inv);
  const SL2Set bc = product_set(b, c_inv);

  RuzsaReport r;
  r.a_size = a.size();
  r.b_size = b.size();
  r.c_size = c.size();
  r.ac_size = ac.size();
  r.ab_size = ab.size();
  r.bc_size = bc.size();
  r.bound = static_cast<double>(r.ab_size) * static_cast<double>(r.bc_size) /
            static_cast<double>(r.b_size);
  r.inequality_holds = static_cast<UInt128>(r.ac_size) * r.b_size <=
                       static_cast<UInt128>(r.ab_size) * r.bc_size;

  const SL2Group& g = a.group();
  if (g.order() <= kRepresentationCountCap) {
    r.representations_checked = true;
    std::vector<std::uint64_t> reps(g.order(), 0);
    const std::vector<Element> right = bc.elements();
    ab.bits().for_each_set([&](std::size_t x) {
      for (Element y : right) ++reps[g.mul(x, y)];
    });
    bool first = true;
    ac.bits().for_each_set([&](std::size_t z) {
      r.min_representations = first ? reps[z] : std::min(r.min_representations, reps[z]);
      first = false;
    });
    r.representations_hold = first || r.min_representations >= r.b_size;
  }
  r.pass = r.inequality_holds && r.representations_hold;
  return r;
}

GowersReport check_gowers(const SL2Set& a, const SL2Set& b, const SL2Set& c) {
  require_same_group(a, b);
  require_same_group(b, c);
  const QuasirandomInfo info = quasirandom_info(a.group().p());
  const std::uint64_t order = a.group().order();

  GowersReport r;
  r.d = info.d;
  r.a_size = a.size();
  r.b_size = b.size();
  r.c_size = c.size();
  r.size_product = static_cast<double>(r.a_size) * static_cast<double>(r.b_size) *
                   static_cast<double>(r.c_size);
  const double n = static_cast<double>(order);
  r.threshold = n * n * n / static_cast<double>(info.d);
  const UInt128 lhs =
      static_cast<UInt128>(r.a_size) * r.b_size * r.c_size * info.d;
  const UInt128 rhs = static_cast<UInt128>(order) * order * order;
  r.premise_met = lhs > rhs;
  const SL2Set abc = product_set(product_set(a, b), c);
  r.product_size = abc.size();
  r.covers = abc.is_full();
  r.pass = !r.premise_met || r.covers;
  return r;
}

Theorem4Bound theorem4_bound(double delta) {
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  Theorem4Bound b;
  b.raw = std::log2(3.0 / delta);
  const double next = std::floor(b.raw) + 1.0;
  b.k = next < 1.0 ? 1 : static_cast<std::uint64_t>(next);
  return b;
}

namespace {

bool all_true(const std::vector<bool>& flags) {
  return std::all_of(flags.begin(), flags.end(), [](bool f) { return f; });
}

}  // namespace

Theorem4Report verify_theorem4(const std::vector<SL2Set>& family) {
  if (family.empty() || family.size() % 3 != 0) {
    throw DomainError("family must hold 3K >= 3 sets, got " + std::to_string(family.size()));
  }
  for (const auto& s : family) {
    require_same_group(family.front(), s);
    if (s.is_empty()) throw DomainError("family sets must be nonempty");
  }
  const SL2Ptr& group = family.front().group_ptr();
  if (group->p() < 5) throw DomainError("the product covering check needs p >= 5");

  Theorem4Report r;
  r.p = group->p();
  r.order = group->order();
  r.k = family.size() / 3;
  r.info = quasirandom_info(r.p);
  r.bound = theorem4_bound(r.info.delta);
  r.k_meets_bound = r.k >= r.bound.k;

  const double n = static_cast<double>(r.order);
  bool floors = true;
  for (const auto& s : family) {
    const bool hyp = product_set(s, inverse_set(s)).is_full();
    r.hypotheses.push_back(hyp);
    r.mirror_hypotheses.push_back(product_set(inverse_set(s), s).is_full());
    if (hyp && static_cast<UInt128>(s.size()) * s.size() < r.order) floors = false;
  }
  r.hypotheses_hold = all_true(r.hypotheses);
  r.size_floors_hold = floors;

  const auto grows = [&](std::uint64_t prev, std::uint64_t size) {
    return static_cast<UInt128>(r.order) * prev <=
           static_cast<UInt128>(size) * size;
  };

  bool chain = true;
  std::vector<SL2Set> products;
  for (std::size_t blk = 0; blk < 3; ++blk) {
    BlockReport& block = r.blocks[blk];
    const std::size_t first = blk * r.k;
    bool block_hyp = true;
    for (std::size_t i = 0; i < r.k; ++i) block_hyp = block_hyp && r.hypotheses[first + i];

    SL2Set prefix = family[first];
    block.prefix_sizes.push_back(prefix.size());
    for (std::size_t i = 1; i < r.k; ++i) {
      SL2Set next = product_set(prefix, family[first + i]);
      ProductStep step{i + 1, prefix.size(), next.size(), grows(prefix.size(), next.size()),
                       r.mirror_hypotheses[first + i]};
      if (step.asserted && !step.holds) chain = false;
      block.prefix_steps.push_back(step);
      block.prefix_sizes.push_back(next.size());
      prefix = std::move(next);
    }

    SL2Set suffix = family[first + r.k - 1];
    block.suffix_sizes.push_back(suffix.size());
    for (std::size_t i = r.k - 1; i-- > 0;) {
      SL2Set next = product_set(family[first + i], suffix);
      ProductStep step{i + 1, suffix.size(), next.size(), grows(suffix.size(), next.size()),
                       r.hypotheses[first + i]};
      if (step.asserted && !step.holds) chain = false;
      block.suffix_steps.push_back(step);
      block.suffix_sizes.push_back(next.size());
      suffix = std::move(next);
    }

    block.size = prefix.size();
    block.power_bound = std::pow(n, 1.0 - std::ldexp(1.0, -static_cast<int>(r.k)));
    block.power_bound_holds = within_bound(block.power_bound, static_cast<double>(block.size));
    if (block_hyp && !block.power_bound_holds) chain = false;
    block.delta_bound = std::pow(n, 1.0 - r.info.delta / 3.0);
    block.exceeds_delta_bound = above_bound(static_cast<double>(block.size), block.delta_bound);
    products.push_back(std::move(prefix));
  }
  r.chain_holds = chain;

  r.gowers = check_gowers(products[0], products[1], products[2]);
  r.total_size = r.gowers.product_size;
  r.final_cover = r.gowers.covers;

  bool blocks_exceed = true;
  for (const auto& block : r.blocks) blocks_exceed = blocks_exceed && block.exceeds_delta_bound;
  const bool guaranteed_cover_failed =
      r.k_meets_bound && (!blocks_exceed || !r.gowers.premise_met || !r.final_cover);
  r.violation = !r.gowers.pass ||
                (r.hypotheses_hold &&
                 (!r.size_floors_hold || !r.chain_holds || guaranteed_cover_failed));
  r.pass = r.hypotheses_hold && r.size_floors_hold && r.chain_holds && r.final_cover &&
           !r.violation;
  return r;
}

SL2Set random_difference_cover(const SL2Ptr& group, double density, Rng& rng,
                               int max_attempts) {
  const std::uint64_t size = target_size(group->order(), density);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SL2Set a = SL2Set::from_elements(group, rng.sample_subset(group->order(), size));
    if (product_set(a, inverse_set(a)).is_full()) return a;
  }
  throw BudgetExhaustedError("no set of density " + std::to_string(density) +
                             " with A A^{-1} = SL_2(Z_" + std::to_string(group->p()) +
                             ") found in " + std::to_string(max_attempts) + " attempts");
}

Remark12Report remark12(std::uint64_t p, std::uint64_t trials, std::uint64_t seed,
                        double density, std::uint64_t cap) {
  Remark12Report r;
  r.p = p;
  r.info = quasirandom_info(p);
  r.bound = theorem4_bound(r.info.delta);
  r.twelve_sets_suffice = r.bound.k <= 4;
  r.applies = p >= 7;
  if (!r.applies) return r;

  const SL2Ptr group = SL2Group::create(p, cap);
  r.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    std::vector<SL2Set> family;
    for (int i = 0; i < 12; ++i) family.push_back(random_difference_cover(group, density, rng));
    r.runs.push_back(verify_theorem4(family));
    if (r.runs.back().pass) ++r.trials_passed;
  }
  r.pass = r.twelve_sets_suffice && r.trials_passed == r.trials;
  return r;
}

}  // namespace sumsetlab
