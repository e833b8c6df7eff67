#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regsub/codes.hpp"
#include "regsub/finite_group.hpp"
#include "regsub/gf2.hpp"
#include "regsub/regular.hpp"

/**
 * @file embedding.hpp
 * @brief Regular subgroups of Aut(H_n) that contain a regular subgroup of
 * Aut(A_n) with the same permutation part ("narrow-sense" lifts).
 *
 * A regular subgroup K of Aut(H_n) with permutation part L is determined by
 * its pure translations T, an L-invariant subcode of H_n, and one coset
 * x_sigma + T per sigma in L. When K contains a regular H <= Aut(A_n) with
 * the same permutation part, every coset is forced by H and T only has to
 * satisfy T cap A_n = (pure translations of H). Those subcodes are found as
 * the orthogonal complements of the L-invariant U with A_n <= U.
 */

namespace regsub {

// Permutation parts, sorted and without repetition.
std::vector<Permutation> pi_group(std::span<const CodeAutomorphism> g);

/// A subgroup of Aut(F_2^n): either an explicit element list or the full
/// automorphism group of a linear Hadamard or Hamming code.
class AutSubgroup {
 public:
  static AutSubgroup from_elements(std::vector<CodeAutomorphism> elements);
  static AutSubgroup full(const BinaryCode &linear_code);

  int length() const { return length_; }
  bool is_full() const { return full_.has_value(); }
  bool contains(const CodeAutomorphism &t) const;
  const std::vector<Permutation> &pi() const { return pi_; }
  std::size_t order() const;
  // Only for explicit groups.
  std::span<const CodeAutomorphism> elements() const { return elements_; }

  bool is_subgroup_of(const AutSubgroup &g) const;

 private:
  int length_ = 0;
  std::vector<CodeAutomorphism> elements_;  // sorted
  std::optional<BinaryCode> full_;
  std::vector<Permutation> pi_;
};

bool is_narrow_sense_embedded(const AutSubgroup &h, const AutSubgroup &g);

// Closed, of order |C|, and sending 0 onto every codeword.
bool is_regular(std::span<const CodeAutomorphism> g, const BinaryCode &c);

// (c_v, pi_{A_v}) for a regular subgroup v -> A_v of GA(r,2).
std::vector<CodeAutomorphism> transport(const TransversalMap &h, int r);

/// Shared tables for lifting at one r (3 or 4).
class LiftContext {
 public:
  explicit LiftContext(int r);

  int r() const { return r_; }
  int n() const { return n_; }
  const BinaryCode &hadamard() const { return hadamard_; }
  const BinaryCode &hamming() const { return hamming_; }
  std::span<const packed::Mat> general_linear() const { return gl_; }

  // pi_A applied to a word.
  Word act(packed::Mat a, Word w) const
  {
    const auto &t = tables_[index_[a]];
    return t.lo[w & 0xFFu] | t.hi[(w >> 8) & 0x7Fu];
  }

 private:
  struct ActTable {
    std::array<std::uint16_t, 256> lo;
    std::array<std::uint16_t, 128> hi;
  };

  int r_ = 0;
  int n_ = 0;
  BinaryCode hadamard_;
  BinaryCode hamming_;
  std::vector<packed::Mat> gl_;
  std::vector<std::int32_t> index_;
  std::vector<ActTable> tables_;
};

/// K = union over sigma of (coset_reps[i] + T, pi[i]).
struct Lift {
  std::vector<packed::Mat> pi;          // sorted
  std::vector<Word> translations;       // reduced basis of T
  std::vector<Word> coset_reps;         // per pi entry, reduced modulo T

  std::size_t order() const { return pi.size() << translations.size(); }

  friend bool operator==(const Lift &, const Lift &) = default;
  friend auto operator<=>(const Lift &, const Lift &) = default;
};

std::vector<Lift> lift_regular(const LiftContext &ctx, const TransversalMap &h);

// Dense view: for each codeword y, the index in lift.pi of the element
// (y, sigma) of K, or -1 for words outside H_n.
std::vector<std::int8_t> lift_table(const LiftContext &ctx, const Lift &lift);

std::vector<CodeAutomorphism> lift_elements(const LiftContext &ctx, const Lift &lift);

// Fast self-check: K is a group, regular on H_n, contains h and has the
// same permutation part.
bool verify_lift(const LiftContext &ctx, const TransversalMap &h, const Lift &lift);

// K as a transversal map over the coordinates of a basis of H_n (r = 3 only,
// where dim H_7 = 4): entry v is the matrix of pi_sigma in that basis.
struct HammingCoordinates {
  std::vector<Word> basis;
  std::vector<Word> words;                // words[v] = sum of v-selected basis
  std::vector<std::int32_t> coords;       // inverse of words, -1 off the code
};
HammingCoordinates hamming_coordinates(const LiftContext &ctx);
packed::Mat coordinate_matrix(const LiftContext &ctx, const HammingCoordinates &hc,
                              packed::Mat a);
TransversalMap lift_transversal(const LiftContext &ctx, const HammingCoordinates &hc,
                                const Lift &lift);

IsoFingerprint lift_fingerprint(const LiftContext &ctx, const Lift &lift);

/// Conjugation-invariant normal form under Aut(H_n) = H_n x| Sym(H_n).
struct LiftKey {
  std::vector<packed::Mat> pi;
  std::vector<Word> translations;
  std::vector<Word> cocycle;

  friend bool operator==(const LiftKey &, const LiftKey &) = default;
  friend auto operator<=>(const LiftKey &, const LiftKey &) = default;
};

class LiftCanonicalizer {
 public:
  explicit LiftCanonicalizer(const LiftContext &ctx) : ctx_(ctx) {}
  LiftKey canonical(const Lift &lift);

 private:
  struct Normalizer {
    std::vector<packed::Mat> least;        // least conjugate of pi
    std::vector<packed::Mat> conjugators;  // G with G pi G^-1 = least
  };
  const Normalizer &normalizer(const std::vector<packed::Mat> &pi);

  const LiftContext &ctx_;
  std::vector<std::pair<std::vector<packed::Mat>, Normalizer>> cache_;
};

// g K g^-1 for g = (t, pi_G).
Lift conjugate(const LiftContext &ctx, const Lift &lift, Word t, packed::Mat g);

struct LiftRecord {
  int parent_class_id = 0;
  Lift lift;
  std::optional<int> conj_class_id;
  IsoFingerprint fingerprint;
};

struct LiftClassification {
  std::vector<int> class_of;           // per record
  std::vector<std::size_t> representatives;  // first record of each class
  std::vector<LiftKey> keys;           // per class
  std::size_t fingerprint_count = 0;   // distinct fingerprints over classes
};

// Sets conj_class_id (classes ordered by normal form) and fills missing
// fingerprints.
LiftClassification classify_lifts_conjugacy(const LiftContext &ctx,
                                            std::span<LiftRecord> lifts,
                                            int threads = 1);

struct FingerprintPartition {
  std::vector<int> group_of;  // per conjugacy class
  std::size_t count = 0;      // a lower bound on isomorphism classes
};
FingerprintPartition classify_lifts_fingerprint(std::span<const LiftRecord> lifts,
                                                const LiftClassification &conj);

// Called once per finished parent (index into `parents`), serialized.
using LiftProgress = std::function<void(std::size_t parent, const std::vector<Lift> &lifts,
                                        std::size_t done, std::size_t total)>;

// Lifts of each parent; parents are processed concurrently.
std::vector<std::vector<Lift>> lift_all(const LiftContext &ctx,
                                        std::span<const TransversalMap> parents,
                                        int threads = 1,
                                        const LiftProgress &progress = {});

} // namespace regsub
