#include <gtest/gtest.h>

#include <map>
#include <set>

#include "regsub/finite_group.hpp"
#include "regsub/regular.hpp"

using namespace regsub;

namespace {

std::map<std::pair<std::uint64_t, std::uint64_t>, int> multiset(const IsoFingerprint &f)
{
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> out;
  for (const auto &p : f.pairs)
    ++out[p];
  return out;
}

} // namespace

TEST(FiniteGroup, ModelOrders)
{
  EXPECT_EQ(models::cyclic(8).order(), 8u);
  EXPECT_EQ(models::dihedral(4).order(), 8u);
  EXPECT_EQ(models::pauli().order(), 16u);
  EXPECT_TRUE(models::cyclic(8).is_abelian());
  EXPECT_FALSE(models::dihedral(4).is_abelian());
}

TEST(FiniteGroup, SmallTwoGroupsAreDistinct)
{
  const auto &groups = models::small_two_groups();
  std::map<std::size_t, int> per_order;
  for (const auto &g : groups)
    ++per_order[g.group.order()];
  EXPECT_EQ(per_order[2], 1);
  EXPECT_EQ(per_order[4], 2);
  EXPECT_EQ(per_order[8], 5);
  EXPECT_EQ(per_order[16], 14);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EXPECT_EQ(identify(groups[i].group), groups[i].name);
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (groups[i].group.order() == groups[j].group.order())
        EXPECT_FALSE(isomorphic(groups[i].group, groups[j].group))
            << groups[i].name << " vs " << groups[j].name;
  }
}

TEST(FiniteGroup, IsomorphismOfProducts)
{
  auto z2 = models::cyclic(2), z4 = models::cyclic(4);
  EXPECT_TRUE(isomorphic(models::direct_product(z2, z4), models::direct_product(z4, z2)));
  EXPECT_FALSE(isomorphic(models::direct_product(z2, z4), models::cyclic(8)));
  EXPECT_EQ(identify(models::direct_product(z2, models::cyclic(8))), "Z2xZ8");
  EXPECT_EQ(abelian_invariants(models::direct_product(z4, models::direct_product(z2, z4))),
            (std::vector<std::uint64_t>{2, 4, 4}));
}

TEST(FiniteGroup, FingerprintExamples)
{
  auto z2 = models::cyclic(2);
  auto z2_4 = models::direct_product(models::direct_product(z2, z2), models::direct_product(z2, z2));
  auto fp = multiset(fingerprint(z2_4));
  EXPECT_EQ(fp, (decltype(fp){{{1, 16}, 1}, {{2, 16}, 15}}));

  auto d4 = multiset(fingerprint(models::dihedral(4)));
  EXPECT_EQ(d4, (decltype(d4){{{1, 8}, 1}, {{2, 8}, 1}, {{2, 4}, 4}, {{4, 4}, 2}}));

  auto groups = remark_fixtures();
  auto z28 = multiset(fingerprint(groups.remark2.elements));
  EXPECT_EQ(z28, (decltype(z28){{{1, 16}, 1}, {{2, 16}, 3}, {{4, 16}, 4}, {{8, 16}, 8}}));

  auto w = multiset(fingerprint(dihedral_witness_r3().elements));
  EXPECT_EQ(w, d4);
}

TEST(FiniteGroup, FingerprintHashIsStable)
{
  auto f = fingerprint(models::dihedral(4));
  EXPECT_EQ(f.hash().size(), 16u);
  EXPECT_EQ(f.hash(), fingerprint(models::dihedral(4)).hash());
  EXPECT_NE(f.hash(), fingerprint(models::cyclic(8)).hash());
}

TEST(FiniteGroup, RejectsNonGroupTable)
{
  std::vector<std::uint16_t> bad{0, 1, 1, 1};
  EXPECT_THROW(CayleyTable(2, bad), std::invalid_argument);
}

TEST(FiniteGroup, GeneratingSet)
{
  for (const auto &g : models::small_two_groups()) {
    auto gens = generating_set(g.group);
    std::set<std::size_t> reached{0};
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::size_t x = frontier.back();
      frontier.pop_back();
      for (std::size_t s : gens)
        if (reached.insert(g.group.mul(x, s)).second)
          frontier.push_back(g.group.mul(x, s));
    }
    EXPECT_EQ(reached.size(), g.group.order()) << g.name;
  }
}
