#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file gf2.hpp
 * @brief Bit-packed vectors and square matrices over GF(2).
 *
 * Coordinate i (1-based in text formats) is stored in bit i-1. A matrix is
 * a list of row masks; bit j of row i is the entry in column j+1.
 */

namespace regsub {

inline constexpr int kMaxDim = 64;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(int dim, std::uint64_t bits = 0);

  static Gf2Vec zero(int dim) { return Gf2Vec(dim); }
  static Gf2Vec unit(int dim, int index);
  // "101" means coordinates 1 and 3 are set.
  static Gf2Vec from_bitstring(std::string_view text);

  int dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool get(int index) const { return (bits_ >> index) & 1u; }
  bool is_zero() const { return bits_ == 0; }
  int weight() const;

  std::string to_bitstring() const;

  friend bool operator==(const Gf2Vec &, const Gf2Vec &) = default;
  friend std::strong_ordering operator<=>(const Gf2Vec &lhs, const Gf2Vec &rhs)
  {
    if (auto c = lhs.dim_ <=> rhs.dim_; c != 0)
      return c;
    return lhs.bits_ <=> rhs.bits_;
  }

 private:
  int dim_ = 0;
  std::uint64_t bits_ = 0;
};

Gf2Vec vec_add(const Gf2Vec &u, const Gf2Vec &v);
inline Gf2Vec operator+(const Gf2Vec &u, const Gf2Vec &v) { return vec_add(u, v); }

class Gf2Mat {
 public:
  Gf2Mat() = default;
  explicit Gf2Mat(int dim);
  Gf2Mat(int dim, std::vector<std::uint64_t> rows);

  static Gf2Mat identity(int dim);
  // Each string is one row, written as a bitstring over columns 1..dim.
  static Gf2Mat from_rows(std::initializer_list<std::string_view> rows);
  // Row-major hex: ceil(dim/4) hex digits per row, low bit = column 1.
  static Gf2Mat from_hex(std::string_view hex, int dim);

  int dim() const { return dim_; }
  std::uint64_t row(int i) const { return rows_[i]; }
  std::span<const std::uint64_t> rows() const { return rows_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool value);

  bool is_zero() const;
  std::string to_hex() const;

  friend bool operator==(const Gf2Mat &, const Gf2Mat &) = default;
  friend std::strong_ordering operator<=>(const Gf2Mat &lhs, const Gf2Mat &rhs)
  {
    if (auto c = lhs.dim_ <=> rhs.dim_; c != 0)
      return c;
    return lhs.rows_ <=> rhs.rows_;
  }

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> rows_;
};

Gf2Vec mat_vec(const Gf2Mat &a, const Gf2Vec &v);
Gf2Mat mat_mul(const Gf2Mat &a, const Gf2Mat &b);
Gf2Mat mat_add(const Gf2Mat &a, const Gf2Mat &b);
Gf2Mat mat_pow(const Gf2Mat &a, std::uint64_t exponent);
Gf2Mat transpose(const Gf2Mat &a);
std::optional<Gf2Mat> mat_inverse(const Gf2Mat &a);
int rank(std::span<const std::uint64_t> rows);
inline int rank(const Gf2Mat &a) { return rank(a.rows()); }

// |GL(r,2)|, saturating at UINT64_MAX.
std::uint64_t gl_order(int r);

// Least k >= 1 with A^k = I; throws NotInvertible.
std::uint64_t mat_order(const Gf2Mat &a);

// True iff (I + A)^r is zero.
bool unipotent_nilpotency(const Gf2Mat &a);

/**
 * Compact matrices for r <= 4: row i lives in bits [4i, 4i+4) of a 16-bit
 * word, vectors in the low 4 bits of a byte. Rows beyond r are zero, so the
 * same routines serve every r <= 4.
 */
namespace packed {

using Mat = std::uint16_t;
using Vec = std::uint8_t;

inline constexpr int kMaxDim = 4;

constexpr Mat identity(int r)
{
  Mat m = 0;
  for (int i = 0; i < r; ++i)
    m |= static_cast<Mat>(1u << (4 * i + i));
  return m;
}

constexpr unsigned row(Mat m, int i) { return (m >> (4 * i)) & 0xFu; }

constexpr Vec apply(Mat m, Vec v)
{
  Vec out = 0;
  for (int i = 0; i < kMaxDim; ++i)
    out |= static_cast<Vec>((__builtin_parity(row(m, i) & v)) << i);
  return out;
}

constexpr Mat mul(Mat a, Mat b)
{
  Mat out = 0;
  for (int i = 0; i < kMaxDim; ++i) {
    unsigned r = 0;
    unsigned sel = row(a, i);
    for (int j = 0; j < kMaxDim; ++j)
      if ((sel >> j) & 1u)
        r ^= row(b, j);
    out |= static_cast<Mat>(r << (4 * i));
  }
  return out;
}

constexpr Mat transpose(Mat m)
{
  Mat out = 0;
  for (int i = 0; i < kMaxDim; ++i)
    for (int j = 0; j < kMaxDim; ++j)
      if ((row(m, i) >> j) & 1u)
        out |= static_cast<Mat>(1u << (4 * j + i));
  return out;
}

Mat from_mat(const Gf2Mat &m);
Gf2Mat to_mat(Mat m, int r);

// Inverse of an invertible r x r matrix (r <= 4); table-driven.
Mat inverse(Mat m, int r);
bool invertible(Mat m, int r);

// All invertible r x r matrices in increasing packed order.
const std::vector<Mat> &general_linear(int r);

} // namespace packed

} // namespace regsub
