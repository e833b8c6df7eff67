#include "regsub/affine.hpp"

#include <algorithm>
#include <bit>

namespace regsub {

AffineElement::AffineElement(Gf2Vec translation, Gf2Mat linear)
  : a_(std::move(translation)), A_(std::move(linear))
{
  if (a_.dim() != A_.dim())
    throw DimensionError("affine element: translation and matrix dimensions differ");
  if (rank(A_) != A_.dim())
    throw NotInvertible("affine element: linear part is singular");
}

AffineElement AffineElement::identity(int r)
{
  return AffineElement(Gf2Vec::zero(r), Gf2Mat::identity(r), Unchecked{});
}

AffineElement AffineElement::translation(Gf2Vec a)
{
  int r = a.dim();
  return AffineElement(std::move(a), Gf2Mat::identity(r), Unchecked{});
}

bool AffineElement::is_identity() const
{
  return a_.is_zero() && A_ == Gf2Mat::identity(A_.dim());
}

Gf2Vec act(const AffineElement &e, const Gf2Vec &v)
{
  return e.translation_part() + mat_vec(e.linear_part(), v);
}

AffineElement compose(const AffineElement &e2, const AffineElement &e1)
{
  if (e2.dim() != e1.dim())
    throw DimensionError("compose: dimension mismatch");
  return AffineElement(e2.a_ + mat_vec(e2.A_, e1.a_), mat_mul(e2.A_, e1.A_),
                       AffineElement::Unchecked{});
}

AffineElement inverse(const AffineElement &e)
{
  Gf2Mat inv = *mat_inverse(e.A_);
  Gf2Vec a = mat_vec(inv, e.a_);
  return AffineElement(std::move(a), std::move(inv), AffineElement::Unchecked{});
}

AffineElement power(const AffineElement &e, std::uint64_t exponent)
{
  AffineElement result = AffineElement::identity(e.dim());
  AffineElement base = e;
  while (exponent) {
    if (exponent & 1u)
      result = compose(result, base);
    exponent >>= 1;
    if (exponent)
      base = compose(base, base);
  }
  return result;
}

std::uint64_t element_order(const AffineElement &e)
{
  const std::uint64_t cap =
      2 * regular_order_bound(e.dim()) * gl_order(e.dim());
  AffineElement p = e;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (p.is_identity())
      return k;
    p = compose(p, e);
  }
  throw std::logic_error("element_order: exceeded group order");
}

AffineElement power_pow2(const AffineElement &e, unsigned s)
{
  if (s >= 64)
    throw std::invalid_argument("power_pow2: exponent too large");
  const int r = e.dim();
  const std::uint64_t k = std::uint64_t{1} << s;
  Gf2Mat shifted = mat_add(Gf2Mat::identity(r), e.linear_part());
  Gf2Vec a = mat_vec(mat_pow(shifted, k - 1), e.translation_part());
  return AffineElement(std::move(a), mat_pow(e.linear_part(), k));
}

std::uint64_t regular_order_bound(int r)
{
  if (r < 1)
    throw std::invalid_argument("regular_order_bound: r must be positive");
  int floor_log = std::bit_width(static_cast<unsigned>(r)) - 1;
  return std::uint64_t{1} << (floor_log + 1);
}

std::uint64_t gl_two_power_max_order(int r)
{
  if (r < 2)
    throw std::invalid_argument("gl_two_power_max_order: r must be at least 2");
  int floor_log = std::bit_width(static_cast<unsigned>(r - 1)) - 1;
  return std::uint64_t{1} << (1 + floor_log);
}

std::uint64_t affine_group_order(int r)
{
  std::uint64_t gl = gl_order(r);
  if (r >= 64 || gl > (~std::uint64_t{0} >> r))
    return ~std::uint64_t{0};
  return gl << r;
}

void for_each_gl(int r, const std::function<void(const Gf2Mat &)> &visit)
{
  if (r < 1 || r > 5)
    throw std::invalid_argument("for_each_gl: exhaustive enumeration needs 1 <= r <= 5");
  const std::uint64_t total = std::uint64_t{1} << (r * r);
  const std::uint64_t row_mask = (std::uint64_t{1} << r) - 1;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(r));
  for (std::uint64_t code = 0; code < total; ++code) {
    for (int i = 0; i < r; ++i)
      rows[i] = (code >> (r * i)) & row_mask;
    if (rank(rows) == r)
      visit(Gf2Mat(r, rows));
  }
}

std::vector<Gf2Mat> enumerate_gl(int r)
{
  std::vector<Gf2Mat> out;
  for_each_gl(r, [&](const Gf2Mat &m) { out.push_back(m); });
  return out;
}

GroupElementSet::GroupElementSet(std::vector<AffineElement> elements)
  : elements_(std::move(elements))
{
  std::ranges::sort(elements_);
  auto dup = std::ranges::unique(elements_);
  elements_.erase(dup.begin(), dup.end());
  for (const auto &e : elements_)
    if (e.dim() != elements_.front().dim())
      throw DimensionError("group element set mixes dimensions");
}

bool GroupElementSet::contains(const AffineElement &e) const
{
  return std::ranges::binary_search(elements_, e);
}

std::size_t GroupElementSet::index_of(const AffineElement &e) const
{
  auto it = std::ranges::lower_bound(elements_, e);
  if (it == elements_.end() || !(*it == e))
    throw std::out_of_range("element not in set");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool GroupElementSet::is_closed() const
{
  if (elements_.empty() || !contains(AffineElement::identity(dim())))
    return false;
  for (const auto &x : elements_) {
    if (!contains(inverse(x)))
      return false;
    for (const auto &y : elements_)
      if (!contains(compose(x, y)))
        return false;
  }
  return true;
}

} // namespace regsub
