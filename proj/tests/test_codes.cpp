#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "regsub/codes.hpp"
#include "regsub/embedding.hpp"
#include "regsub/regular.hpp"

using namespace regsub;

namespace {

std::set<std::string> as_text(const BinaryCode &c)
{
  std::set<std::string> out;
  for (Word w : c.words())
    out.insert(word_to_bitstring(w, c.length()));
  return out;
}

AffineElement random_affine(std::mt19937_64 &rng, const std::vector<Gf2Mat> &gl, int r)
{
  return AffineElement(Gf2Vec(r, rng() & ((1u << r) - 1)), gl[rng() % gl.size()]);
}

} // namespace

TEST(Codes, WordText)
{
  EXPECT_EQ(word_to_bitstring(0b001, 3), "100");
  EXPECT_EQ(word_from_bitstring("011"), 0b110u);
  EXPECT_THROW(word_from_bitstring("01a"), std::invalid_argument);
}

TEST(Codes, PermutationBasics)
{
  std::vector<int> one{2, 3, 1};
  Permutation p = Permutation::from_one_line(one);
  EXPECT_EQ(p.one_line(), one);
  EXPECT_EQ(p.apply(0b001), 0b010u);
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(3));
  EXPECT_EQ(compose(p, compose(p, p)), Permutation::identity(3));
  EXPECT_THROW(Permutation(std::vector<int>{0, 0, 1}), std::invalid_argument);
  Permutation q = Permutation::from_one_line(std::vector<int>{2, 1, 3});
  for (Word w = 0; w < 8; ++w)
    EXPECT_EQ(compose(p, q).apply(w), p.apply(q.apply(w)));
}

TEST(Codes, HadamardExamples)
{
  // c_a evaluated directly at the three nonzero x.
  std::set<std::string> direct;
  for (unsigned a = 0; a < 4; ++a) {
    std::string s;
    for (unsigned x = 1; x < 4; ++x)
      s += std::popcount(a & x) % 2 ? '1' : '0';
    direct.insert(s);
  }
  EXPECT_EQ(as_text(build_hadamard(2)), direct);
  EXPECT_EQ(direct, (std::set<std::string>{"000", "011", "101", "110"}));

  auto a4 = build_hadamard(4);
  EXPECT_EQ(a4.size(), 16u);
  EXPECT_EQ(a4.length(), 15);
  for (Word w : a4.words())
    EXPECT_TRUE(w == 0 || std::popcount(w) == 8);
  EXPECT_EQ(hadamard_word(4, 0), 0u);
  EXPECT_EQ(weight_distribution(a4), (std::map<int, std::size_t>{{0, 1}, {8, 15}}));
}

TEST(Codes, HammingExamples)
{
  auto h = build_hamming(4);
  EXPECT_EQ(h.size(), 2048u);
  EXPECT_EQ(h.dimension(), 11);
  EXPECT_TRUE(h.contains(0));
  int best = 99;
  for (Word a : h.words())
    for (Word b : h.words())
      if (a != b)
        best = std::min(best, std::popcount(a ^ b));
  EXPECT_EQ(best, 3);
  EXPECT_EQ(min_distance(h), 3);
  EXPECT_EQ(dual(h), build_hadamard(4));
  EXPECT_EQ(dual(build_hadamard(4)), h);
}

TEST(Codes, SmallHammingMatchesOracle)
{
  auto h = oracle::hamming7();
  auto mine = build_hamming(3);
  EXPECT_TRUE(std::ranges::equal(mine.words(), h.words));
  EXPECT_TRUE(std::ranges::equal(build_hadamard(3).words(), h.simplex));
  std::set<std::vector<int>> sym;
  for_each_gl(3, [&](const Gf2Mat &a) {
    auto p = induced_permutation(a);
    std::vector<int> img;
    for (int i = 0; i < 7; ++i)
      img.push_back(p(i));
    sym.insert(img);
  });
  std::set<std::vector<int>> theirs;
  for (const auto &s : h.symmetries)
    theirs.insert(std::vector<int>(s.begin(), s.end()));
  EXPECT_EQ(sym, theirs);
}

TEST(Codes, DualAndWeights)
{
  std::vector<Word> all;
  for (Word w = 0; w < 32; ++w)
    all.push_back(w);
  BinaryCode full(5, all);
  EXPECT_EQ(dual(full).size(), 1u);
  BinaryCode zero(5, {0});
  EXPECT_EQ(weight_distribution(zero), (std::map<int, std::size_t>{{0, 1}}));
  EXPECT_EQ(dual(zero), full);
}

TEST(Codes, Kernel)
{
  BinaryCode c(4, {0, 0b0001});
  EXPECT_EQ(kernel(c), c);
  BinaryCode nonlinear(3, {0b000, 0b011, 0b101});
  EXPECT_FALSE(nonlinear.is_linear());
  EXPECT_EQ(kernel(nonlinear).size(), 1u);
  EXPECT_EQ(kernel(build_hamming(3)), build_hamming(3));
}

TEST(Codes, InducedPermutation)
{
  EXPECT_TRUE(induced_permutation(Gf2Mat::identity(4)).is_identity());
  std::mt19937_64 rng(17);
  auto gl = enumerate_gl(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const Gf2Mat &a = gl[rng() % gl.size()];
    const Gf2Mat &b = gl[rng() % gl.size()];
    EXPECT_EQ(induced_permutation(mat_mul(a, b)),
              compose(induced_permutation(a), induced_permutation(b)));
    unsigned v = rng() % 16;
    EXPECT_EQ(induced_permutation(a).apply(hadamard_word(4, v)),
              hadamard_word(4, mat_vec(a, Gf2Vec(4, v)).bits()));
  }
  auto a4 = build_hadamard(4);
  auto h4 = build_hamming(4);
  for (const auto &a : gl) {
    auto p = induced_permutation(a);
    ASSERT_TRUE(stabilizes(p, a4));
    ASSERT_TRUE(stabilizes(p, h4));
  }
}

TEST(Codes, ApplyAutomorphism)
{
  auto a4 = build_hadamard(4);
  auto h4 = build_hamming(4);
  EXPECT_TRUE(std::ranges::equal(apply_automorphism(CodeAutomorphism::identity(15), a4),
                                 a4.words()));
  std::mt19937_64 rng(23);
  auto gl = enumerate_gl(4);
  for (int trial = 0; trial < 50; ++trial) {
    CodeAutomorphism t{a4.words()[rng() % 16], induced_permutation(gl[rng() % gl.size()])};
    EXPECT_TRUE(std::ranges::equal(apply_automorphism(t, a4), a4.words()));
  }
  CodeAutomorphism shift{0b1, Permutation::identity(15)};
  ASSERT_FALSE(h4.contains(0b1));
  auto image = apply_automorphism(shift, h4);
  EXPECT_EQ(image.size(), h4.size());
  EXPECT_FALSE(std::ranges::equal(image, h4.words()));
  for (Word w : image)
    EXPECT_FALSE(h4.contains(w));
}

TEST(Codes, AutomorphismGroupLaws)
{
  std::mt19937_64 rng(29);
  auto gl = enumerate_gl(4);
  for (int trial = 0; trial < 300; ++trial) {
    CodeAutomorphism t1{static_cast<Word>(rng() & 0x7FFF), induced_permutation(gl[rng() % gl.size()])};
    CodeAutomorphism t2{static_cast<Word>(rng() & 0x7FFF), induced_permutation(gl[rng() % gl.size()])};
    Word y = static_cast<Word>(rng() & 0x7FFF);
    EXPECT_EQ(apply(compose(t2, t1), y), apply(t2, apply(t1, y)));
    EXPECT_EQ(compose(inverse(t1), t1), CodeAutomorphism::identity(15));
  }
}

TEST(Codes, AffineIsomorphism)
{
  EXPECT_EQ(automorphism_from_affine(AffineElement::identity(4)), CodeAutomorphism::identity(15));
  EXPECT_TRUE(affine_from_automorphism(CodeAutomorphism::identity(15), 4).is_identity());
  std::mt19937_64 rng(31);
  auto gl = enumerate_gl(4);
  for (int trial = 0; trial < 1000; ++trial) {
    auto e1 = random_affine(rng, gl, 4);
    auto e2 = random_affine(rng, gl, 4);
    auto t1 = automorphism_from_affine(e1);
    auto t2 = automorphism_from_affine(e2);
    EXPECT_EQ(affine_from_automorphism(t1, 4), e1);
    EXPECT_EQ(automorphism_from_affine(compose(e1, e2)), compose(t1, t2));
    EXPECT_EQ(affine_from_automorphism(compose(t1, t2), 4), compose(e1, e2));
    Gf2Vec b(4, rng() % 16);
    EXPECT_EQ(apply(t1, hadamard_word(4, b.bits())), hadamard_word(4, act(e1, b).bits()));
  }
  CodeAutomorphism bad{0b1, Permutation::identity(15)};
  EXPECT_THROW(affine_from_automorphism(bad, 4), std::invalid_argument);
}

TEST(Codes, RemarkGroupTransportsToRegularSubgroup)
{
  auto g = remark_fixtures();
  std::vector<CodeAutomorphism> image;
  for (const auto &e : g.remark2.elements)
    image.push_back(automorphism_from_affine(e));
  EXPECT_TRUE(is_regular(image, build_hadamard(4)));
  std::vector<CodeAutomorphism> remark1;
  for (const auto &e : g.remark1.elements)
    remark1.push_back(automorphism_from_affine(e));
  EXPECT_FALSE(is_regular(remark1, build_hadamard(4)));
}

TEST(Codes, BasisHelpers)
{
  std::vector<Word> v{0b1100, 0b0110, 0b1010};
  auto b = reduced_basis(v);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(span_of(b).size(), 4u);
  EXPECT_EQ(reduce(0b1010, b), 0u);
  auto orth = orthogonal_basis(b, 4);
  EXPECT_EQ(orth.size(), 2u);
  for (Word o : orth)
    for (Word w : b)
      EXPECT_EQ(std::popcount(o & w) % 2, 0);
}
