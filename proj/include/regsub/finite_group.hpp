#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regsub {

/// Sorted multiset of (element order, centralizer order) over a group.
struct IsoFingerprint {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  std::size_t group_order() const { return pairs.size(); }
  // FNV-1a over the sorted pairs, as 16 hex digits.
  std::string hash() const;

  friend bool operator==(const IsoFingerprint &, const IsoFingerprint &) = default;
  friend auto operator<=>(const IsoFingerprint &, const IsoFingerprint &) = default;
};

/**
 * A finite group given by its full multiplication table. Element 0 is
 * always the identity.
 */
class CayleyTable {
 public:
  // Groups larger than this are rejected; exact isomorphism is meant for
  // small groups only.
  static constexpr std::size_t kMaxOrder = 256;

  CayleyTable() = default;
  // table[i * n + j] = i * j. Throws if the table is not a group with
  // identity 0.
  CayleyTable(std::size_t order, std::vector<std::uint16_t> table);

  // Builds the table of a closed set of elements under `mul`.
  template <class T, class Mul>
  static CayleyTable from_elements(const std::vector<T> &elements,
                                   const T &identity, Mul mul);

  std::size_t order() const { return order_; }
  std::size_t mul(std::size_t a, std::size_t b) const
  {
    return table_[a * order_ + b];
  }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::uint64_t element_order(std::size_t a) const;
  std::uint64_t centralizer_order(std::size_t a) const;
  bool commute(std::size_t a, std::size_t b) const
  {
    return mul(a, b) == mul(b, a);
  }
  bool is_abelian() const;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
};

IsoFingerprint fingerprint(const CayleyTable &g);

// Greedy generating set: repeatedly add the first element outside the
// subgroup generated so far, preferring elements of larger order.
std::vector<std::size_t> generating_set(const CayleyTable &g);

// Exact isomorphism by backtracking over generator images.
bool isomorphic(const CayleyTable &g, const CayleyTable &h);

// Invariant factors of an abelian group, e.g. {2, 8}; empty for trivial.
std::vector<std::uint64_t> abelian_invariants(const CayleyTable &g);

// Conventional name: "Z2xZ8", "Z2^4", "D4", "Q8", "Z4oD4", ... or nullopt
// when the group matches none of the built-in models.
std::optional<std::string> identify(const CayleyTable &g);

namespace models {

CayleyTable cyclic(std::size_t n);
// Dihedral group of order 2n (symmetries of an n-gon).
CayleyTable dihedral(std::size_t n);
// <a, b | a^m, b^k = a^t, b a b^-1 = a^s>.
CayleyTable metacyclic(std::size_t m, std::size_t k, std::size_t s,
                       std::size_t t);
CayleyTable direct_product(const CayleyTable &g, const CayleyTable &h);
// Pauli group <i, X, Z>, the central product Z4 o D4.
CayleyTable pauli();
// F_2^2 x| Z4 with the generator swapping coordinates.
CayleyTable z2sq_by_z4();

struct Named {
  std::string name;
  CayleyTable group;
};

// Every group of order 2, 4, 8 and 16 with its name.
const std::vector<Named> &small_two_groups();

} // namespace models

// ---------------------------------------------------------------------------

template <class T, class Mul>
CayleyTable CayleyTable::from_elements(const std::vector<T> &elements,
                                       const T &identity, Mul mul)
{
  std::vector<T> sorted;
  sorted.push_back(identity);
  for (const auto &e : elements)
    if (!(e == identity))
      sorted.push_back(e);
  std::sort(sorted.begin() + 1, sorted.end());
  auto index = [&](const T &e) -> std::uint16_t {
    if (e == identity)
      return 0;
    auto it = std::lower_bound(sorted.begin() + 1, sorted.end(), e);
    if (it == sorted.end() || !(*it == e))
      throw std::invalid_argument("CayleyTable: element set is not closed");
    return static_cast<std::uint16_t>(it - sorted.begin());
  };
  const std::size_t n = sorted.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = index(mul(sorted[i], sorted[j]));
  return CayleyTable(n, std::move(table));
}

} // namespace regsub
