#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "regsub/affine.hpp"
#include "regsub/gf2.hpp"

using namespace regsub;

namespace {

std::vector<std::uint32_t> rows_of(const Gf2Mat &a)
{
  std::vector<std::uint32_t> out;
  for (int i = 0; i < a.dim(); ++i)
    out.push_back(static_cast<std::uint32_t>(a.row(i)));
  return out;
}

Gf2Mat random_mat(std::mt19937_64 &rng, int dim)
{
  std::vector<std::uint64_t> rows(dim);
  for (auto &r : rows)
    r = rng() & ((std::uint64_t{1} << dim) - 1);
  return Gf2Mat(dim, rows);
}

Gf2Mat jordan4() { return Gf2Mat::from_rows({"1100", "0110", "0011", "0001"}); }
Gf2Mat dihedral_a3() { return Gf2Mat::from_rows({"101", "010", "001"}); }

} // namespace

TEST(Gf2Vec, AddExamples)
{
  auto u = Gf2Vec::from_bitstring("101");
  auto v = Gf2Vec::from_bitstring("011");
  EXPECT_EQ((u + v).to_bitstring(), "110");
  EXPECT_TRUE((v + v).is_zero());
  EXPECT_EQ(v + Gf2Vec::zero(3), v);
  EXPECT_THROW(vec_add(u, Gf2Vec::zero(4)), DimensionError);
}

TEST(Gf2Vec, BitstringRoundTrip)
{
  for (const char *s : {"0", "1", "1010", "0001", "111000111"})
    EXPECT_EQ(Gf2Vec::from_bitstring(s).to_bitstring(), s);
  EXPECT_EQ(Gf2Vec::from_bitstring("101").bits(), 0b101u);
  EXPECT_EQ(Gf2Vec::from_bitstring("100").bits(), 0b001u);
  EXPECT_THROW(Gf2Vec::from_bitstring("10x"), std::invalid_argument);
}

TEST(Gf2Mat, MatVecExamples)
{
  auto a = Gf2Vec::from_bitstring("101");
  EXPECT_EQ(mat_vec(dihedral_a3(), a).to_bitstring(), "001");
  EXPECT_EQ(mat_vec(Gf2Mat::identity(3), a), a);
  EXPECT_TRUE(mat_vec(dihedral_a3(), Gf2Vec::zero(3)).is_zero());
}

TEST(Gf2Mat, MulMatchesNaiveOracle)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int dim = 1 + static_cast<int>(rng() % 20);
    Gf2Mat a = random_mat(rng, dim);
    Gf2Mat b = random_mat(rng, dim);
    EXPECT_EQ(rows_of(mat_mul(a, b)), oracle::naive_mul(rows_of(a), rows_of(b)));
  }
  Gf2Mat j = jordan4();
  EXPECT_EQ(rows_of(mat_mul(j, j)), oracle::naive_mul(rows_of(j), rows_of(j)));
  EXPECT_EQ(mat_mul(Gf2Mat::identity(4), j), j);
}

TEST(Gf2Mat, MulIsAssociative)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Gf2Mat a = random_mat(rng, 6), b = random_mat(rng, 6), c = random_mat(rng, 6);
    EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
  }
}

TEST(Gf2Mat, InverseExamples)
{
  EXPECT_EQ(mat_inverse(Gf2Mat::identity(5)), Gf2Mat::identity(5));
  Gf2Mat a = dihedral_a3();
  EXPECT_EQ(mat_mul(a, a), Gf2Mat::identity(3));
  EXPECT_EQ(mat_inverse(a), a);
  EXPECT_FALSE(mat_inverse(Gf2Mat(4)).has_value());
}

TEST(Gf2Mat, InverseProperty)
{
  std::mt19937_64 rng(3);
  int invertible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Gf2Mat a = random_mat(rng, 1 + static_cast<int>(rng() % 12));
    auto inv = mat_inverse(a);
    EXPECT_EQ(inv.has_value(), rank(a) == a.dim());
    if (inv) {
      ++invertible;
      EXPECT_EQ(mat_mul(a, *inv), Gf2Mat::identity(a.dim()));
      EXPECT_EQ(mat_mul(*inv, a), Gf2Mat::identity(a.dim()));
    }
  }
  EXPECT_GT(invertible, 100);
}

TEST(Gf2Mat, OrderExamples)
{
  EXPECT_EQ(mat_order(Gf2Mat::identity(4)), 1u);
  EXPECT_EQ(mat_order(dihedral_a3()), 2u);
  Gf2Mat j = jordan4();
  EXPECT_EQ(mat_order(j), 4u);
  Gf2Mat sq = mat_mul(j, j);
  EXPECT_NE(sq, Gf2Mat::identity(4));
  EXPECT_EQ(mat_mul(sq, sq), Gf2Mat::identity(4));
}

TEST(Gf2Mat, UnipotentNilpotency)
{
  EXPECT_TRUE(unipotent_nilpotency(Gf2Mat::identity(5)));
  Gf2Mat j = jordan4();
  Gf2Mat n = mat_add(j, Gf2Mat::identity(4));
  EXPECT_TRUE(mat_pow(n, 4).is_zero());
  EXPECT_FALSE(mat_pow(n, 3).is_zero());
  EXPECT_TRUE(unipotent_nilpotency(j));
  int checked = 0;
  for_each_gl(3, [&](const Gf2Mat &a) {
    std::uint64_t o = mat_order(a);
    if (o == 1 || o == 2 || o == 4) {
      EXPECT_TRUE(unipotent_nilpotency(a));
      ++checked;
    } else {
      EXPECT_FALSE(unipotent_nilpotency(a));
    }
  });
  EXPECT_EQ(checked, 1 + 21 + 42);
}

TEST(Gf2Mat, RankExamples)
{
  EXPECT_EQ(rank(Gf2Mat::identity(4)), 4);
  EXPECT_EQ(rank(Gf2Mat(4)), 0);
  // Rows of the 4 x 15 parity-check matrix whose columns are 1..15.
  std::vector<std::uint64_t> check(4, 0);
  for (int x = 1; x < 16; ++x)
    for (int i = 0; i < 4; ++i)
      if ((x >> i) & 1)
        check[i] |= std::uint64_t{1} << (x - 1);
  EXPECT_EQ(rank(check), 4);
  check.push_back(check[0] ^ check[2]);
  EXPECT_EQ(rank(check), 4);
}

TEST(Gf2Mat, HexRoundTrip)
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Gf2Mat a = random_mat(rng, 1 + static_cast<int>(rng() % 10));
    EXPECT_EQ(Gf2Mat::from_hex(a.to_hex(), a.dim()), a);
  }
  EXPECT_EQ(Gf2Mat::identity(4).to_hex(), "1248");
}

TEST(Gf2Mat, GlOrder)
{
  EXPECT_EQ(gl_order(2), 6u);
  EXPECT_EQ(gl_order(3), 168u);
  EXPECT_EQ(gl_order(4), 20160u);
}

TEST(Packed, AgreesWithGf2Mat)
{
  std::mt19937_64 rng(9);
  for (int r = 1; r <= 4; ++r) {
    for (int trial = 0; trial < 300; ++trial) {
      Gf2Mat a = random_mat(rng, r), b = random_mat(rng, r);
      packed::Mat pa = packed::from_mat(a), pb = packed::from_mat(b);
      EXPECT_EQ(packed::to_mat(pa, r), a);
      EXPECT_EQ(packed::from_mat(mat_mul(a, b)), packed::mul(pa, pb));
      EXPECT_EQ(packed::from_mat(transpose(a)), packed::transpose(pa));
      Gf2Vec v(r, rng() & ((1u << r) - 1));
      EXPECT_EQ(packed::apply(pa, static_cast<packed::Vec>(v.bits())), mat_vec(a, v).bits());
      auto inv = mat_inverse(a);
      EXPECT_EQ(packed::invertible(pa, r), inv.has_value());
      if (inv)
        EXPECT_EQ(packed::inverse(pa, r), packed::from_mat(*inv));
    }
    EXPECT_EQ(packed::general_linear(r).size(), gl_order(r));
  }
}
