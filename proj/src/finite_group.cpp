#include "regsub/finite_group.hpp"

#include <cstdio>
#include <map>

namespace regsub {

std::string IsoFingerprint::hash() const
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFFu;
      h *= 0x100000001b3ull;
    }
  };
  for (const auto &[order, centralizer] : pairs) {
    feed(order);
    feed(centralizer);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CayleyTable::CayleyTable(std::size_t order, std::vector<std::uint16_t> table)
  : order_(order), table_(std::move(table)), inverse_(order, 0)
{
  if (order == 0 || order > kMaxOrder)
    throw std::invalid_argument("CayleyTable: order out of range");
  if (table_.size() != order * order)
    throw std::invalid_argument("CayleyTable: table has wrong size");
  std::vector<char> seen(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i)
      throw std::invalid_argument("CayleyTable: element 0 is not the identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order; ++j) {
      auto p = mul(i, j);
      if (p >= order || seen[p])
        throw std::invalid_argument("CayleyTable: rows must be permutations");
      seen[p] = 1;
      if (p == 0)
        inverse_[i] = static_cast<std::uint16_t>(j);
    }
  }
}

std::uint64_t CayleyTable::element_order(std::size_t a) const
{
  std::uint64_t k = 1;
  for (std::size_t p = a; p != 0; p = mul(p, a))
    ++k;
  return k;
}

std::uint64_t CayleyTable::centralizer_order(std::size_t a) const
{
  std::uint64_t c = 0;
  for (std::size_t b = 0; b < order_; ++b)
    c += commute(a, b);
  return c;
}

bool CayleyTable::is_abelian() const
{
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (!commute(a, b))
        return false;
  return true;
}

IsoFingerprint fingerprint(const CayleyTable &g)
{
  IsoFingerprint fp;
  for (std::size_t a = 0; a < g.order(); ++a)
    fp.pairs.emplace_back(g.element_order(a), g.centralizer_order(a));
  std::ranges::sort(fp.pairs);
  return fp;
}

namespace {

// Elements of the subgroup generated by `gens`, as a membership mask.
std::vector<char> generated(const CayleyTable &g, const std::vector<std::size_t> &gens)
{
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> queue{0};
  in[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto s : gens) {
      auto p = g.mul(queue[q], s);
      if (!in[p]) {
        in[p] = 1;
        queue.push_back(p);
      }
    }
  return in;
}

// Extends gens[i] -> images[i] (i < count) along right multiplication.
// Returns false on an inconsistency or a collision of images.
bool extend(const CayleyTable &g, const CayleyTable &h,
            const std::vector<std::size_t> &gens,
            const std::vector<std::size_t> &images, std::size_t count,
            std::vector<int> &map)
{
  std::fill(map.begin(), map.end(), -1);
  std::vector<char> used(h.order(), 0);
  std::vector<std::size_t> queue{0};
  map[0] = 0;
  used[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto x = queue[q];
    for (std::size_t i = 0; i < count; ++i) {
      auto y = g.mul(x, gens[i]);
      auto img = h.mul(static_cast<std::size_t>(map[x]), images[i]);
      if (map[y] < 0) {
        if (used[img])
          return false;
        used[img] = 1;
        map[y] = static_cast<int>(img);
        queue.push_back(y);
      } else if (static_cast<std::size_t>(map[y]) != img) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

std::vector<std::size_t> generating_set(const CayleyTable &g)
{
  std::vector<std::size_t> by_order(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    by_order[i] = i;
  std::ranges::stable_sort(by_order, [&](std::size_t a, std::size_t b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<std::size_t> gens;
  std::vector<char> in = generated(g, gens);
  for (auto e : by_order) {
    if (in[e])
      continue;
    gens.push_back(e);
    in = generated(g, gens);
  }
  return gens;
}

bool isomorphic(const CayleyTable &g, const CayleyTable &h)
{
  if (g.order() != h.order())
    return false;
  if (fingerprint(g) != fingerprint(h))
    return false;

  const auto gens = generating_set(g);
  std::vector<std::vector<std::size_t>> candidates;
  for (auto s : gens) {
    std::vector<std::size_t> c;
    for (std::size_t t = 0; t < h.order(); ++t)
      if (h.element_order(t) == g.element_order(s) &&
          h.centralizer_order(t) == g.centralizer_order(s))
        c.push_back(t);
    candidates.push_back(std::move(c));
  }

  std::vector<std::size_t> images(gens.size());
  std::vector<int> map(g.order());
  auto search = [&](auto &self, std::size_t depth) -> bool {
    if (depth == gens.size())
      return true;
    for (auto t : candidates[depth]) {
      images[depth] = t;
      if (extend(g, h, gens, images, depth + 1, map) && self(self, depth + 1))
        return true;
    }
    return false;
  };
  return search(search, 0);
}

std::vector<std::uint64_t> abelian_invariants(const CayleyTable &g)
{
  if (!g.is_abelian())
    throw std::invalid_argument("abelian_invariants: group is not abelian");
  auto power = [&](std::size_t a, std::uint64_t e) {
    std::size_t p = 0;
    for (std::uint64_t i = 0; i < e; ++i)
      p = g.mul(p, a);
    return p;
  };

  // Per prime, the exponents e_i of the cyclic p-factors (descending).
  std::vector<std::vector<std::uint64_t>> factors;
  std::uint64_t rest = g.order();
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p)
      continue;
    while (rest % p == 0)
      rest /= p;
    // log_p #{x : x^(p^k) = 1}
    std::vector<int> logs{0};
    for (std::uint64_t pk = p;; pk *= p) {
      std::uint64_t count = 0;
      for (std::size_t a = 0; a < g.order(); ++a)
        count += power(a, pk) == 0;
      int l = 0;
      for (std::uint64_t c = count; c > 1; c /= p)
        ++l;
      if (l == logs.back())
        break;
      logs.push_back(l);
    }
    // #{i : e_i >= k} = logs[k] - logs[k-1]
    std::vector<std::uint64_t> cyclic;
    for (std::size_t k = logs.size() - 1; k >= 1; --k) {
      int at_least = logs[k] - logs[k - 1];
      int more = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < k; ++i)
        pk *= p;
      for (int i = 0; i < at_least - more; ++i)
        cyclic.push_back(pk);
    }
    factors.push_back(std::move(cyclic));
  }

  std::size_t width = 0;
  for (const auto &f : factors)
    width = std::max(width, f.size());
  std::vector<std::uint64_t> invariants(width, 1);
  for (const auto &f : factors)
    for (std::size_t i = 0; i < f.size(); ++i)
      invariants[width - 1 - i] *= f[i];
  return invariants;
}

namespace {

std::string abelian_name(const std::vector<std::uint64_t> &inv)
{
  if (inv.empty())
    return "1";
  std::map<std::uint64_t, int> counts;
  for (auto d : inv)
    ++counts[d];
  std::string out;
  for (const auto &[d, c] : counts) {
    if (!out.empty())
      out += "x";
    out += "Z" + std::to_string(d);
    if (c > 1)
      out += "^" + std::to_string(c);
  }
  return out;
}

} // namespace

std::optional<std::string> identify(const CayleyTable &g)
{
  if (g.is_abelian())
    return abelian_name(abelian_invariants(g));
  for (const auto &m : models::small_two_groups())
    if (m.group.order() == g.order() && !m.group.is_abelian() &&
        isomorphic(g, m.group))
      return m.name;
  return std::nullopt;
}

namespace models {

namespace {

template <class Mul>
CayleyTable tabulate(std::size_t n, Mul mul)
{
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<std::uint16_t>(mul(i, j));
  return CayleyTable(n, std::move(table));
}

} // namespace

CayleyTable cyclic(std::size_t n)
{
  return tabulate(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; });
}

CayleyTable dihedral(std::size_t n) { return metacyclic(n, 2, n - 1, 0); }

CayleyTable metacyclic(std::size_t m, std::size_t k, std::size_t s, std::size_t t)
{
  // Element a^i b^j has index j * m + i.
  std::vector<std::size_t> spow(k, 1);
  for (std::size_t j = 1; j < k; ++j)
    spow[j] = spow[j - 1] * s % m;
  return tabulate(m * k, [=](std::size_t x, std::size_t y) {
    std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
    std::size_t i = (i1 + spow[j1] * i2) % m;
    std::size_t j = j1 + j2;
    if (j >= k) {
      j -= k;
      i = (i + t) % m;
    }
    return j * m + i;
  });
}

CayleyTable direct_product(const CayleyTable &g, const CayleyTable &h)
{
  const std::size_t nh = h.order();
  return tabulate(g.order() * nh, [&](std::size_t x, std::size_t y) {
    return g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
  });
}

CayleyTable pauli()
{
  // i^k X^x Z^z has index k | x << 2 | z << 3.
  return tabulate(16, [](std::size_t a, std::size_t b) {
    std::size_t k1 = a & 3, x1 = (a >> 2) & 1, z1 = a >> 3;
    std::size_t k2 = b & 3, x2 = (b >> 2) & 1, z2 = b >> 3;
    std::size_t k = (k1 + k2 + 2 * (z1 & x2)) & 3;
    return k | ((x1 ^ x2) << 2) | ((z1 ^ z2) << 3);
  });
}

CayleyTable z2sq_by_z4()
{
  // (v, j) has index v | j << 2, v in F_2^2.
  auto swap = [](std::size_t v) { return ((v & 1) << 1) | (v >> 1); };
  return tabulate(16, [&](std::size_t a, std::size_t b) {
    std::size_t v1 = a & 3, j1 = a >> 2, v2 = b & 3, j2 = b >> 2;
    std::size_t w = (j1 & 1) ? swap(v2) : v2;
    return (v1 ^ w) | (((j1 + j2) & 3) << 2);
  });
}

const std::vector<Named> &small_two_groups()
{
  static const std::vector<Named> groups = [] {
    const CayleyTable z2 = cyclic(2);
    const CayleyTable z4 = cyclic(4);
    const CayleyTable z2sq = direct_product(z2, z2);
    const CayleyTable d4 = dihedral(4);
    const CayleyTable q8 = metacyclic(4, 2, 3, 2);
    std::vector<Named> out;
    out.push_back({"Z2", z2});
    out.push_back({"Z4", z4});
    out.push_back({"Z2^2", z2sq});
    out.push_back({"Z8", cyclic(8)});
    out.push_back({"Z2xZ4", direct_product(z2, z4)});
    out.push_back({"Z2^3", direct_product(z2, z2sq)});
    out.push_back({"D4", d4});
    out.push_back({"Q8", q8});
    out.push_back({"Z16", cyclic(16)});
    out.push_back({"Z2xZ8", direct_product(z2, cyclic(8))});
    out.push_back({"Z4^2", direct_product(z4, z4)});
    out.push_back({"Z2^2xZ4", direct_product(z2sq, z4)});
    out.push_back({"Z2^4", direct_product(z2sq, z2sq)});
    out.push_back({"D8", dihedral(8)});
    out.push_back({"Q16", metacyclic(8, 2, 7, 4)});
    out.push_back({"SD16", metacyclic(8, 2, 3, 0)});
    out.push_back({"M16", metacyclic(8, 2, 5, 0)});
    out.push_back({"Z4:Z4", metacyclic(4, 4, 3, 0)});
    out.push_back({"Z2^2:Z4", z2sq_by_z4()});
    out.push_back({"Z2xD4", direct_product(z2, d4)});
    out.push_back({"Z2xQ8", direct_product(z2, q8)});
    out.push_back({"Z4oD4", pauli()});
    return out;
  }();
  return groups;
}

} // namespace models

} // namespace regsub
