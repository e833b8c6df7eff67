#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "regsub/gf2.hpp"

namespace regsub {

/**
 * An element (a, A) of GA(r,2) acting on F_2^r by v -> a + A v.
 *
 * The linear part is always invertible; constructing an element from a
 * singular matrix throws NotInvertible.
 */
class AffineElement {
 public:
  AffineElement(Gf2Vec translation, Gf2Mat linear);

  static AffineElement identity(int r);
  static AffineElement translation(Gf2Vec a);

  int dim() const { return a_.dim(); }
  const Gf2Vec &translation_part() const { return a_; }
  const Gf2Mat &linear_part() const { return A_; }

  bool is_identity() const;

  friend bool operator==(const AffineElement &, const AffineElement &) = default;
  // Canonical order: translation bits first, then linear rows.
  friend std::strong_ordering operator<=>(const AffineElement &lhs,
                                          const AffineElement &rhs)
  {
    if (auto c = lhs.a_ <=> rhs.a_; c != 0)
      return c;
    return lhs.A_ <=> rhs.A_;
  }

 private:
  struct Unchecked {};
  AffineElement(Gf2Vec translation, Gf2Mat linear, Unchecked)
    : a_(std::move(translation)), A_(std::move(linear))
  {}

  friend AffineElement compose(const AffineElement &, const AffineElement &);
  friend AffineElement inverse(const AffineElement &);

  Gf2Vec a_;
  Gf2Mat A_;
};

Gf2Vec act(const AffineElement &e, const Gf2Vec &v);

// compose(e2, e1) applies e1 first: (a2 + A2 a1, A2 A1).
AffineElement compose(const AffineElement &e2, const AffineElement &e1);
AffineElement inverse(const AffineElement &e);
AffineElement power(const AffineElement &e, std::uint64_t exponent);

std::uint64_t element_order(const AffineElement &e);

// e^(2^s) via the closed form ((I+A)^(2^s - 1) a, A^(2^s)).
AffineElement power_pow2(const AffineElement &e, unsigned s);

// Largest possible order of an element of a regular subgroup of GA(r,2).
std::uint64_t regular_order_bound(int r);

// Largest 2-power element order in GL(r,2); requires r >= 2.
std::uint64_t gl_two_power_max_order(int r);

std::uint64_t affine_group_order(int r);

void for_each_gl(int r, const std::function<void(const Gf2Mat &)> &visit);
std::vector<Gf2Mat> enumerate_gl(int r);

/// Sorted, duplicate-free set of affine elements of one dimension.
class GroupElementSet {
 public:
  GroupElementSet() = default;
  explicit GroupElementSet(std::vector<AffineElement> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  int dim() const { return elements_.empty() ? 0 : elements_.front().dim(); }
  bool contains(const AffineElement &e) const;
  bool is_closed() const;

  const AffineElement &operator[](std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const AffineElement &e) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  std::span<const AffineElement> elements() const { return elements_; }

  friend bool operator==(const GroupElementSet &, const GroupElementSet &) = default;

 private:
  std::vector<AffineElement> elements_;
};

} // namespace regsub
