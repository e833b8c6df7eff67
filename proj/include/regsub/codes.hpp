#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "regsub/affine.hpp"
#include "regsub/gf2.hpp"

/**
 * @file codes.hpp
 * @brief Linear Hadamard (simplex) and Hamming codes of length 2^r - 1 and
 * their automorphisms (x, pi): y -> x + pi(y).
 *
 * Coordinate i (1-based) of a codeword is bit i-1 of a Word and is indexed
 * by the nonzero vector of F_2^r whose packed value is i.
 */

namespace regsub {

using Word = std::uint32_t;

inline constexpr int kMaxCodeLength = 31;

std::string word_to_bitstring(Word w, int n);
Word word_from_bitstring(std::string_view text);

/// Coordinate permutation; moves the entry at position i to position p(i).
class Permutation {
 public:
  Permutation() = default;
  // 0-based images; must be a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  // 1-based one-line notation [p(1), ..., p(n)].
  static Permutation from_one_line(std::span<const int> one_line);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  std::vector<int> one_line() const;
  bool is_identity() const;

  Word apply(Word w) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

 private:
  std::vector<int> image_;
};

// p2 after p1.
Permutation compose(const Permutation &p2, const Permutation &p1);

class BinaryCode {
 public:
  BinaryCode() = default;
  // Words must include the zero word; linearity is detected.
  BinaryCode(int length, std::vector<Word> words, std::string name = {});

  int length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  bool contains(Word w) const;
  bool is_linear() const { return linear_; }
  // Row-reduced basis of the linear span.
  std::span<const Word> basis() const { return basis_; }
  int dimension() const;
  const std::string &name() const { return name_; }

  friend bool operator==(const BinaryCode &a, const BinaryCode &b)
  {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  int length_ = 0;
  std::vector<Word> words_;
  std::vector<Word> basis_;
  bool linear_ = false;
  std::string name_;
};

// Row-reduced basis (pivot = lowest set bit, pivots cleared elsewhere).
std::vector<Word> reduced_basis(std::span<const Word> vectors);
// Reduces w against a reduced basis; equal results mean equal cosets.
Word reduce(Word w, std::span<const Word> basis);
std::vector<Word> span_of(std::span<const Word> basis);
// Basis of {y : <y, b> = 0 for all b} in F_2^n.
std::vector<Word> orthogonal_basis(std::span<const Word> basis, int n);

// c_a: coordinate x (a nonzero vector of F_2^r) carries <x, a>.
Word hadamard_word(int r, std::uint64_t a);

BinaryCode build_hadamard(int r);
BinaryCode build_hamming(int r);
BinaryCode dual(const BinaryCode &c);
std::map<int, std::size_t> weight_distribution(const BinaryCode &c);
int min_distance(const BinaryCode &c);
BinaryCode kernel(const BinaryCode &c);

// pi_A: the position of nonzero x moves to the position of A^{-T} x, so
// that pi_A(c_b) = c_{A b} and pi_{AB} = pi_A pi_B.
Permutation induced_permutation(const Gf2Mat &a);

bool stabilizes(const Permutation &p, const BinaryCode &c);

struct CodeAutomorphism {
  Word x = 0;
  Permutation perm;

  static CodeAutomorphism identity(int n) { return {0, Permutation::identity(n)}; }

  friend bool operator==(const CodeAutomorphism &, const CodeAutomorphism &) = default;
  friend auto operator<=>(const CodeAutomorphism &, const CodeAutomorphism &) = default;
};

Word apply(const CodeAutomorphism &t, Word y);
// t2 after t1: (x2 + pi2(x1), pi2 pi1).
CodeAutomorphism compose(const CodeAutomorphism &t2, const CodeAutomorphism &t1);
CodeAutomorphism inverse(const CodeAutomorphism &t);

// Sorted image {x + pi(y) : y in C}; equals C.words() iff t stabilizes C.
std::vector<Word> apply_automorphism(const CodeAutomorphism &t, const BinaryCode &c);

// (a, A) -> (c_a, pi_A) and back; the reverse direction throws
// std::invalid_argument when t is not of that form.
CodeAutomorphism automorphism_from_affine(const AffineElement &e);
AffineElement affine_from_automorphism(const CodeAutomorphism &t, int r);

} // namespace regsub
