#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Reference implementations used only by the tests. They share no code with
// the library: groups are plain permutations of at most 16 points.
namespace oracle {

// Nibble i holds the image of point i.
using Perm16 = std::uint64_t;

Perm16 identity16();
int image(Perm16 p, int i);
Perm16 compose(Perm16 p, Perm16 q);  // p after q
Perm16 inverse(Perm16 p);
bool fixed_point_free(Perm16 p, int points);
bool has_two_power_order(Perm16 p);

// Every regular subgroup of `group` on `points` (a power of two) points,
// grown through chains of semiregular subgroups of doubling order. Each
// subgroup is a sorted element list.
std::vector<std::vector<Perm16>> regular_subgroups(const std::vector<Perm16> &group,
                                                   int points);

// x -> a + A x on F_2^r, points numbered by their bits.
std::vector<Perm16> affine_group(int r);

// Naive matrix product over GF(2), rows as bitmasks (bit j = column j).
std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t> &a,
                                     const std::vector<std::uint32_t> &b);

// The [7,4] Hamming code and its automorphisms, built from scratch.
struct Hamming7 {
  std::vector<std::uint32_t> words;          // 16 codewords, sorted
  std::vector<std::uint32_t> simplex;        // the 8 words of its dual
  std::vector<std::array<int, 7>> symmetries;  // position images, 168 of them
};
Hamming7 hamming7();

struct CodeElement {
  std::uint32_t x;
  std::array<int, 7> perm;  // position i moves to perm[i]
  auto operator<=>(const CodeElement &) const = default;
};

std::uint32_t act(const CodeElement &e, std::uint32_t y);

// Pairs (H, K): H regular on the simplex words with x in the simplex code,
// K regular on the Hamming words, H <= K and equal permutation parts.
struct LiftPair {
  std::vector<CodeElement> parent;
  std::vector<CodeElement> lift;
  auto operator<=>(const LiftPair &) const = default;
};
std::vector<LiftPair> brute_force_lifts_r3();

// Number of Aut(H_7)-conjugacy classes among the distinct lifts.
std::size_t lift_conjugacy_classes_r3(const std::vector<LiftPair> &pairs);

} // namespace oracle
