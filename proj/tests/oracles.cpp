#include "oracles.hpp"

namespace oracle {

Element add(const GroupSpec& spec, Element x, Element y) {
  Coords a = spec.decode(x);
  const Coords b = spec.decode(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % spec.factors()[i];
  return spec.encode(a);
}

std::set<Element> sumset(const GroupSpec& spec, const std::set<Element>& a,
                         const std::set<Element>& b) {
  std::set<Element> out;
  for (Element x : a) {
    for (Element y : b) out.insert(add(spec, x, y));
  }
  return out;
}

std::set<Element> iterated_sumset(const GroupSpec& spec, const std::set<Element>& a,
                                  std::uint64_t m) {
  if (m == 0) return {0};
  std::set<Element> acc = a;
  for (std::uint64_t i = 1; i < m; ++i) acc = sumset(spec, acc, a);
  return acc;
}

std::set<Element> subset_sums(const GroupSpec& spec, const std::vector<Element>& items) {
  std::set<Element> out;
  const std::uint64_t subsets = std::uint64_t{1} << items.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Element s = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) s = add(spec, s, items[i]);
    }
    out.insert(s);
  }
  return out;
}

std::set<Element> to_set(const sumsetlab::GroupSet& s) {
  const auto xs = s.elements();
  return {xs.begin(), xs.end()};
}

std::set<Element> to_set(const sumsetlab::SL2Set& s) {
  const auto xs = s.elements();
  return {xs.begin(), xs.end()};
}

std::int64_t det_mod_p(const std::vector<Coords>& rows, std::int64_t p) {
  const std::size_t n = rows.size();
  if (n == 1) return static_cast<std::int64_t>(rows[0][0]) % p;
  std::int64_t det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Coords> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Coords row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(rows[r][c]);
      }
      minor.push_back(row);
    }
    const std::int64_t sign = col % 2 == 0 ? 1 : p - 1;
    det = (det + sign * (static_cast<std::int64_t>(rows[0][col]) % p) % p * det_mod_p(minor, p)) % p;
  }
  return det;
}

Element sl2_mul(const sumsetlab::SL2Group& g, Element x, Element y) {
  const auto& u = g.matrix(x);
  const auto& v = g.matrix(y);
  const std::uint64_t p = g.p();
  const sumsetlab::Matrix2 w = {
      static_cast<std::uint32_t>((std::uint64_t{u[0]} * v[0] + std::uint64_t{u[1]} * v[2]) % p),
      static_cast<std::uint32_t>((std::uint64_t{u[0]} * v[1] + std::uint64_t{u[1]} * v[3]) % p),
      static_cast<std::uint32_t>((std::uint64_t{u[2]} * v[0] + std::uint64_t{u[3]} * v[2]) % p),
      static_cast<std::uint32_t>((std::uint64_t{u[2]} * v[1] + std::uint64_t{u[3]} * v[3]) % p)};
  for (Element z = 0; z < g.order(); ++z) {
    if (g.matrix(z) == w) return z;
  }
  return g.order();
}

std::set<Element> product_set(const sumsetlab::SL2Group& g, const std::set<Element>& a,
                              const std::set<Element>& b) {
  std::set<Element> out;
  for (Element x : a) {
    for (Element y : b) out.insert(sl2_mul(g, x, y));
  }
  return out;
}

}  // namespace oracle
