#include "regsub/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <mutex>

namespace regsub {

namespace {

std::uint64_t low_mask(int dim)
{
  return dim >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
}

void check_dim(int dim)
{
  if (dim < 0 || dim > kMaxDim)
    throw DimensionError("dimension out of range: " + std::to_string(dim));
}

int hex_value(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  throw std::invalid_argument(std::string("bad hex digit: ") + c);
}

} // namespace

Gf2Vec::Gf2Vec(int dim, std::uint64_t bits) : dim_(dim), bits_(bits)
{
  check_dim(dim);
  if (bits & ~low_mask(dim))
    throw DimensionError("vector has bits beyond its dimension");
}

Gf2Vec Gf2Vec::unit(int dim, int index)
{
  if (index < 0 || index >= dim)
    throw DimensionError("unit vector index out of range");
  return Gf2Vec(dim, std::uint64_t{1} << index);
}

Gf2Vec Gf2Vec::from_bitstring(std::string_view text)
{
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw std::invalid_argument("bitstring may only contain 0 and 1");
  }
  return Gf2Vec(static_cast<int>(text.size()), bits);
}

int Gf2Vec::weight() const { return std::popcount(bits_); }

std::string Gf2Vec::to_bitstring() const
{
  std::string out(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i)
    if (get(i))
      out[i] = '1';
  return out;
}

Gf2Vec vec_add(const Gf2Vec &u, const Gf2Vec &v)
{
  if (u.dim() != v.dim())
    throw DimensionError("vec_add: dimension mismatch");
  return Gf2Vec(u.dim(), u.bits() ^ v.bits());
}

Gf2Mat::Gf2Mat(int dim) : dim_(dim), rows_(static_cast<std::size_t>(dim), 0)
{
  check_dim(dim);
}

Gf2Mat::Gf2Mat(int dim, std::vector<std::uint64_t> rows)
  : dim_(dim), rows_(std::move(rows))
{
  check_dim(dim);
  if (rows_.size() != static_cast<std::size_t>(dim))
    throw DimensionError("matrix must be square");
  for (auto r : rows_)
    if (r & ~low_mask(dim))
      throw DimensionError("matrix row has bits beyond its dimension");
}

Gf2Mat Gf2Mat::identity(int dim)
{
  Gf2Mat m(dim);
  for (int i = 0; i < dim; ++i)
    m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

Gf2Mat Gf2Mat::from_rows(std::initializer_list<std::string_view> rows)
{
  int dim = static_cast<int>(rows.size());
  std::vector<std::uint64_t> masks;
  for (auto r : rows) {
    auto v = Gf2Vec::from_bitstring(r);
    if (v.dim() != dim)
      throw DimensionError("from_rows: matrix must be square");
    masks.push_back(v.bits());
  }
  return Gf2Mat(dim, std::move(masks));
}

Gf2Mat Gf2Mat::from_hex(std::string_view hex, int dim)
{
  check_dim(dim);
  std::size_t width = static_cast<std::size_t>((dim + 3) / 4);
  if (dim == 0 || hex.size() != width * static_cast<std::size_t>(dim))
    throw DimensionError("from_hex: wrong length for dimension");
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < dim; ++i) {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < width; ++k)
      r = (r << 4) | static_cast<std::uint64_t>(hex_value(hex[i * width + k]));
    rows.push_back(r);
  }
  return Gf2Mat(dim, std::move(rows));
}

void Gf2Mat::set(int i, int j, bool value)
{
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw DimensionError("matrix index out of range");
  if (value)
    rows_[i] |= std::uint64_t{1} << j;
  else
    rows_[i] &= ~(std::uint64_t{1} << j);
}

bool Gf2Mat::is_zero() const
{
  for (auto r : rows_)
    if (r)
      return false;
  return true;
}

std::string Gf2Mat::to_hex() const
{
  static constexpr char digits[] = "0123456789abcdef";
  int width = (dim_ + 3) / 4;
  std::string out;
  for (auto r : rows_)
    for (int k = width - 1; k >= 0; --k)
      out.push_back(digits[(r >> (4 * k)) & 0xFu]);
  return out;
}

Gf2Vec mat_vec(const Gf2Mat &a, const Gf2Vec &v)
{
  if (a.dim() != v.dim())
    throw DimensionError("mat_vec: dimension mismatch");
  std::uint64_t out = 0;
  for (int i = 0; i < a.dim(); ++i)
    out |= static_cast<std::uint64_t>(std::popcount(a.row(i) & v.bits()) & 1)
           << i;
  return Gf2Vec(a.dim(), out);
}

Gf2Mat mat_mul(const Gf2Mat &a, const Gf2Mat &b)
{
  if (a.dim() != b.dim())
    throw DimensionError("mat_mul: dimension mismatch");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(a.dim()), 0);
  for (int i = 0; i < a.dim(); ++i) {
    std::uint64_t sel = a.row(i);
    std::uint64_t acc = 0;
    while (sel) {
      int j = std::countr_zero(sel);
      acc ^= b.row(j);
      sel &= sel - 1;
    }
    rows[i] = acc;
  }
  return Gf2Mat(a.dim(), std::move(rows));
}

Gf2Mat mat_add(const Gf2Mat &a, const Gf2Mat &b)
{
  if (a.dim() != b.dim())
    throw DimensionError("mat_add: dimension mismatch");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    rows[i] = a.row(i) ^ b.row(i);
  return Gf2Mat(a.dim(), std::move(rows));
}

Gf2Mat mat_pow(const Gf2Mat &a, std::uint64_t exponent)
{
  Gf2Mat result = Gf2Mat::identity(a.dim());
  Gf2Mat base = a;
  while (exponent) {
    if (exponent & 1u)
      result = mat_mul(result, base);
    exponent >>= 1;
    if (exponent)
      base = mat_mul(base, base);
  }
  return result;
}

Gf2Mat transpose(const Gf2Mat &a)
{
  Gf2Mat t(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a.get(i, j))
        t.set(j, i, true);
  return t;
}

std::optional<Gf2Mat> mat_inverse(const Gf2Mat &a)
{
  int n = a.dim();
  std::vector<std::uint64_t> left(a.rows().begin(), a.rows().end());
  std::vector<std::uint64_t> right(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    right[i] = std::uint64_t{1} << i;

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if ((left[i] >> col) & 1u) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      return std::nullopt;
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (int i = 0; i < n; ++i)
      if (i != col && ((left[i] >> col) & 1u)) {
        left[i] ^= left[col];
        right[i] ^= right[col];
      }
  }
  return Gf2Mat(n, std::move(right));
}

int rank(std::span<const std::uint64_t> rows)
{
  std::vector<std::uint64_t> work(rows.begin(), rows.end());
  int r = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::uint64_t v = work[i];
    if (!v)
      continue;
    ++r;
    std::uint64_t low = v & (~v + 1);
    for (std::size_t k = i + 1; k < work.size(); ++k)
      if (work[k] & low)
        work[k] ^= v;
  }
  return r;
}

std::uint64_t gl_order(int r)
{
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (r >= 64)
    return kMax;
  std::uint64_t order = 1;
  for (int i = 0; i < r; ++i) {
    std::uint64_t factor = (std::uint64_t{1} << r) - (std::uint64_t{1} << i);
    if (order > kMax / factor)
      return kMax;
    order *= factor;
  }
  return order;
}

std::uint64_t mat_order(const Gf2Mat &a)
{
  if (rank(a) != a.dim())
    throw NotInvertible("mat_order: matrix is singular");
  const Gf2Mat id = Gf2Mat::identity(a.dim());
  const std::uint64_t cap = gl_order(a.dim());
  Gf2Mat power = a;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power == id)
      return k;
    power = mat_mul(power, a);
  }
  throw NotInvertible("mat_order: order exceeds |GL(r,2)|");
}

bool unipotent_nilpotency(const Gf2Mat &a)
{
  Gf2Mat shifted = mat_add(a, Gf2Mat::identity(a.dim()));
  return mat_pow(shifted, static_cast<std::uint64_t>(a.dim())).is_zero();
}

namespace packed {

Mat from_mat(const Gf2Mat &m)
{
  if (m.dim() > kMaxDim)
    throw DimensionError("packed matrices hold r <= 4");
  Mat out = 0;
  for (int i = 0; i < m.dim(); ++i)
    out |= static_cast<Mat>(m.row(i) << (4 * i));
  return out;
}

Gf2Mat to_mat(Mat m, int r)
{
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < r; ++i)
    rows.push_back(row(m, i));
  return Gf2Mat(r, std::move(rows));
}

namespace {

struct Tables {
  std::vector<Mat> group;
  std::vector<Mat> inverse; // indexed by packed code; 0 for singular
};

const Tables &tables(int r)
{
  if (r < 1 || r > kMaxDim)
    throw DimensionError("packed tables exist for 1 <= r <= 4");
  static std::array<Tables, kMaxDim + 1> cache;
  static std::array<std::once_flag, kMaxDim + 1> once;
  std::call_once(once[r], [r] {
    Tables &t = cache[r];
    t.inverse.assign(1u << 16, 0);
    const unsigned rows = 1u << r;
    std::array<unsigned, kMaxDim> digits{};
    // Iterate all r x r matrices by their r row masks.
    std::uint64_t total = std::uint64_t{1} << (r * r);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      Mat m = 0;
      for (int i = 0; i < r; ++i) {
        digits[i] = static_cast<unsigned>(c % rows);
        c /= rows;
        m |= static_cast<Mat>(digits[i] << (4 * i));
      }
      auto inv = mat_inverse(to_mat(m, r));
      if (inv) {
        t.group.push_back(m);
        t.inverse[m] = from_mat(*inv);
      }
    }
    std::ranges::sort(t.group);
  });
  return cache[r];
}

} // namespace

Mat inverse(Mat m, int r)
{
  Mat inv = tables(r).inverse[m];
  if (!inv)
    throw NotInvertible("packed::inverse: singular matrix");
  return inv;
}

bool invertible(Mat m, int r) { return tables(r).inverse[m] != 0; }

const std::vector<Mat> &general_linear(int r) { return tables(r).group; }

} // namespace packed

} // namespace regsub
