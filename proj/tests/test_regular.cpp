#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "regsub/regular.hpp"

using namespace regsub;

namespace {

oracle::Perm16 as_perm(const AffineElement &e, int r)
{
  oracle::Perm16 p = 0;
  for (unsigned x = 0; x < (1u << r); ++x)
    p |= static_cast<oracle::Perm16>(act(e, Gf2Vec(r, x)).bits()) << (4 * x);
  for (unsigned x = 1u << r; x < 16; ++x)
    p |= static_cast<oracle::Perm16>(x) << (4 * x);
  return p;
}

std::vector<oracle::Perm16> as_perms(const TransversalMap &m, int r)
{
  std::vector<oracle::Perm16> out;
  for (const auto &e : from_transversal(m, r))
    out.push_back(as_perm(e, r));
  std::ranges::sort(out);
  return out;
}

std::set<std::string> iso_names(const Classification &c)
{
  std::set<std::string> out;
  for (const auto &k : c.classes)
    out.insert(k.iso_name.value_or("?"));
  return out;
}

// Conjugacy classes of explicit permutation groups under `ambient`.
std::vector<std::size_t> oracle_orbit_sizes(const std::vector<std::vector<oracle::Perm16>> &subs,
                                            const std::vector<oracle::Perm16> &ambient)
{
  std::map<std::vector<oracle::Perm16>, std::size_t> orbit;
  for (const auto &s : subs) {
    std::vector<oracle::Perm16> best;
    for (auto g : ambient) {
      auto gi = oracle::inverse(g);
      std::vector<oracle::Perm16> c;
      for (auto x : s)
        c.push_back(oracle::compose(g, oracle::compose(x, gi)));
      std::ranges::sort(c);
      if (best.empty() || c < best)
        best = c;
    }
    ++orbit[best];
  }
  std::vector<std::size_t> out;
  for (const auto &[k, n] : orbit)
    out.push_back(n);
  std::ranges::sort(out);
  return out;
}

} // namespace

TEST(Regular, CloseExamples)
{
  FixtureInputs f;
  std::vector<AffineElement> gens{AffineElement(f.dihedral_a, f.dihedral_A),
                                  AffineElement::translation(f.dihedral_b)};
  EXPECT_EQ(close(gens).size(), 8u);
  auto groups = remark_fixtures();
  std::vector<AffineElement> g2(groups.remark2_generators.begin(), groups.remark2_generators.end());
  EXPECT_EQ(close(g2).size(), 16u);
}

TEST(Regular, IsRegularExamples)
{
  for (int r = 1; r <= 4; ++r) {
    std::vector<AffineElement> t;
    for (int i = 0; i < r; ++i)
      t.push_back(AffineElement::translation(Gf2Vec::unit(r, i)));
    EXPECT_TRUE(is_regular(close(t), r));
  }
  EXPECT_TRUE(is_regular(dihedral_witness_r3().elements, 3));
  auto groups = remark_fixtures();
  EXPECT_EQ(groups.remark1.order, 16u);
  EXPECT_FALSE(is_regular(groups.remark1.elements, 4));
  EXPECT_TRUE(is_regular(groups.remark2.elements, 4));
}

TEST(Regular, TransversalRoundTrip)
{
  auto w = dihedral_witness_r3();
  auto m = to_transversal(w.elements, 3);
  EXPECT_EQ(from_transversal(m, 3), w.elements);
}

TEST(Regular, EnumerationMatchesOracle)
{
  for (int r = 2; r <= 3; ++r) {
    std::vector<std::vector<oracle::Perm16>> mine;
    for (const auto &m : enumerate_regular_maps(r))
      mine.push_back(as_perms(m, r));
    std::ranges::sort(mine);
    auto theirs = oracle::regular_subgroups(oracle::affine_group(r), 1 << r);
    std::ranges::sort(theirs);
    EXPECT_EQ(mine, theirs) << "r=" << r;
  }
  EXPECT_EQ(enumerate_regular_maps(2).size(), 4u);
  EXPECT_EQ(enumerate_regular_maps(3).size(), 232u);
}

TEST(Regular, ThreadCountDoesNotChangeEnumeration)
{
  EXPECT_EQ(enumerate_regular_maps(3, 1), enumerate_regular_maps(3, 4));
}

TEST(Regular, ClassifyR2)
{
  auto c = classify_regular(2);
  EXPECT_EQ(c.subgroups.size(), 4u);
  auto names = iso_names(c);
  EXPECT_TRUE(names.contains("Z4"));
  EXPECT_TRUE(names.contains("Z2^2"));
}

TEST(Regular, ClassifyR3AgainstOracleConjugacy)
{
  auto c = classify_regular(3);
  EXPECT_TRUE(iso_names(c).contains("D4"));
  std::size_t sum = 0;
  std::vector<std::size_t> sizes;
  for (const auto &k : c.classes) {
    sum += k.orbit_size;
    sizes.push_back(k.orbit_size);
  }
  EXPECT_EQ(sum, c.subgroups.size());
  std::ranges::sort(sizes);
  auto ga = oracle::affine_group(3);
  auto subs = oracle::regular_subgroups(ga, 8);
  EXPECT_EQ(sizes, oracle_orbit_sizes(subs, ga));
  EXPECT_EQ(c.classes.size(), 8u);
}

TEST(Regular, TranslationGroupIsAloneInItsClass)
{
  for (int r = 2; r <= 3; ++r) {
    TransversalMap t{};
    std::fill_n(t.begin(), 1 << r, packed::identity(r));
    auto c = classify_regular(r);
    bool found = false;
    for (const auto &k : c.classes)
      if (k.representative == t) {
        found = true;
        EXPECT_EQ(k.orbit_size, 1u);
      }
    EXPECT_TRUE(found);
  }
}

TEST(Regular, ConjugationPreservesRegularity)
{
  auto maps = enumerate_regular_maps(3);
  const auto &gl = packed::general_linear(3);
  for (std::size_t i = 0; i < maps.size(); i += 7)
    for (std::size_t j = 0; j < gl.size(); j += 13) {
      auto c = conjugate(maps[i], 3, static_cast<packed::Vec>(j % 8), gl[j]);
      EXPECT_TRUE(std::ranges::binary_search(maps, c));
    }
}

TEST(Regular, IsomorphismClassesOfCopies)
{
  auto t = dihedral_witness_r3();
  std::vector<SubgroupRecord> recs{t, t};
  auto ids = isomorphism_classes(recs);
  EXPECT_EQ(ids[0], ids[1]);
}

TEST(Regular, DirectProducts)
{
  auto c2 = classify_regular(2);
  const SubgroupRecord *z4 = nullptr, *klein = nullptr;
  for (const auto &k : c2.classes)
    (k.iso_name == "Z4" ? z4 : klein) = &k.record;
  ASSERT_TRUE(z4 && klein);
  auto p = direct_product(*z4, *z4);
  EXPECT_TRUE(is_regular(p.elements, 4));
  EXPECT_EQ(identify(cayley_table(p.elements)), "Z4^2");
  p = direct_product(*klein, *z4);
  EXPECT_TRUE(is_regular(p.elements, 4));
  EXPECT_EQ(identify(cayley_table(p.elements)), "Z2^2xZ4");
  p = direct_product(*klein, *klein);
  EXPECT_TRUE(is_regular(p.elements, 4));
  for (const auto &e : p.elements)
    EXPECT_EQ(e.linear_part(), Gf2Mat::identity(4));
}

TEST(Regular, DihedralWitness)
{
  auto w = dihedral_witness_r3();
  FixtureInputs f;
  std::vector<AffineElement> gen{AffineElement(f.dihedral_a, f.dihedral_A)};
  std::set<std::string> orbit_text;
  for (const auto &v : orbit(close(gen), Gf2Vec::zero(3)))
    orbit_text.insert(v.to_bitstring());
  EXPECT_EQ(orbit_text, (std::set<std::string>{"101", "100", "001", "000"}));
  EXPECT_TRUE(is_regular(w.elements, 3));
  EXPECT_TRUE(isomorphic(cayley_table(w.elements), models::dihedral(4)));
}

TEST(Regular, QuarticSolutionsAgainstBruteForce)
{
  std::set<std::string> brute;
  for (unsigned x = 0; x < 16; ++x) {
    int c[4];
    for (int i = 0; i < 4; ++i)
      c[i] = (x >> i) & 1;
    int form = c[0] * c[3] + c[0] * c[1] + c[1] * c[2] + c[2] * c[3] + c[1] + c[2];
    if (form % 2 == 0)
      brute.insert(Gf2Vec(4, x).to_bitstring());
  }
  std::set<std::string> got;
  for (const auto &v : quartic_solutions())
    got.insert(v.to_bitstring());
  EXPECT_EQ(got, brute);
  EXPECT_EQ(got.size(), 8u);
  EXPECT_TRUE(got.contains("0000"));
  EXPECT_TRUE(got.contains("1100"));
  EXPECT_FALSE(got.contains("0100"));
  EXPECT_EQ(got, (std::set<std::string>{"0000", "1000", "1100", "1110", "1111", "0111",
                                        "0011", "0001"}));
}

TEST(Regular, DihedralExistenceSmallAndLarge)
{
  auto v3 = dihedral_regular_exists(3);
  EXPECT_TRUE(v3.exists);
  ASSERT_TRUE(v3.witness.has_value());
  EXPECT_TRUE(is_regular(v3.witness->elements, 3));
  EXPECT_FALSE(dihedral_regular_exists(5).exists);
  EXPECT_FALSE(dihedral_regular_exists(6).exists);
  EXPECT_LT(regular_order_bound(6), 32u);
  auto v2 = dihedral_regular_exists(2);
  EXPECT_TRUE(v2.exists);
}

TEST(Regular, RemarkGroups)
{
  auto g = remark_fixtures();
  const auto &[x, y] = g.remark2_generators;
  EXPECT_EQ(compose(x, y), compose(y, x));
  EXPECT_EQ(element_order(x), 8u);
  EXPECT_EQ(element_order(y), 2u);
  EXPECT_TRUE(isomorphic(cayley_table(g.remark1.elements), models::dihedral(8)));
  EXPECT_EQ(identify(cayley_table(g.remark2.elements)), "Z2xZ8");
}

TEST(Regular, ElementOrdersRespectBound)
{
  for (int r = 2; r <= 3; ++r)
    for (const auto &m : enumerate_regular_maps(r))
      for (const auto &e : from_transversal(m, r))
        EXPECT_LE(element_order(e), regular_order_bound(r));
}
