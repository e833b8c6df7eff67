#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "regsub/affine.hpp"
#include "regsub/finite_group.hpp"
#include "regsub/gf2.hpp"

/**
 * @file regular.hpp
 * @brief Regular subgroups of GA(r,2): enumeration, conjugacy and
 * isomorphism classification, and the dihedral and abelian fixtures.
 *
 * A regular subgroup S of GA(r,2) contains exactly one element sending 0 to
 * each v; writing that element (v, A_v) turns S into a TransversalMap
 * v -> A_v. Subgroups are closed under composition exactly when
 * A_{v + A_v w} = A_v A_w for all v, w.
 */

namespace regsub {

// map[v] = packed linear part of the element sending 0 to v (r <= 4; only
// the first 2^r entries are meaningful, the rest are zero).
using TransversalMap = std::array<packed::Mat, 16>;

struct TransversalMapHash {
  std::size_t operator()(const TransversalMap &m) const noexcept;
};

class ClosureCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubgroupRecord {
  GroupElementSet elements;
  std::vector<AffineElement> generators;
  std::size_t order = 0;
  std::optional<int> conj_class_id;
  IsoFingerprint fingerprint;
};

inline constexpr std::size_t kDefaultCloseCap = 1u << 16;

GroupElementSet close(std::span<const AffineElement> generators,
                      std::size_t cap = kDefaultCloseCap);
GroupElementSet close(int r, std::span<const AffineElement> generators,
                      std::size_t cap = kDefaultCloseCap);

// Orbit of `v` under the group.
std::vector<Gf2Vec> orbit(const GroupElementSet &s, const Gf2Vec &v);

bool is_regular(const GroupElementSet &s, int r);

CayleyTable cayley_table(const GroupElementSet &s);
IsoFingerprint fingerprint(const GroupElementSet &s);

// Fills generators (a small generating set), order and fingerprint.
SubgroupRecord make_record(GroupElementSet elements);

TransversalMap to_transversal(const GroupElementSet &s, int r);
GroupElementSet from_transversal(const TransversalMap &m, int r);

// Elements of 2-power order in GL(r,2), r <= 4 (the candidate linear parts
// of a regular subgroup, which is a 2-group).
std::vector<packed::Mat> two_power_linear_parts(int r);

/**
 * Depth-first completion of transversal maps on F_2^m (m <= 4) whose linear
 * parts are drawn from `candidates`. Each regular subgroup is produced
 * exactly once: at every node the smallest unassigned point is branched on
 * and the group generated so far is closed immediately. Partial groups
 * containing an element of order above `order_bound` are cut off.
 * The result is sorted.
 */
std::vector<TransversalMap>
enumerate_transversal_maps(int m, std::span<const packed::Mat> candidates,
                           std::uint64_t order_bound, int threads = 1);

std::vector<TransversalMap> enumerate_regular_maps(int r, int threads = 1);
std::vector<SubgroupRecord> enumerate_regular(int r, int threads = 1);

// g S g^-1 for g = (t, G).
TransversalMap conjugate(const TransversalMap &s, int r, packed::Vec t,
                         packed::Mat g);

struct ConjugacyPartition {
  std::vector<int> class_of;                    // per input subgroup
  std::vector<TransversalMap> representatives;  // per class, orbit minimum
  std::vector<std::size_t> orbit_sizes;         // per class, in GA(r,2)
};

// Orbits under conjugation by all of GA(r,2). Class ids follow the order
// of the representatives.
ConjugacyPartition conjugacy_classes(std::span<const TransversalMap> subgroups,
                                     int r, int threads = 1);
ConjugacyPartition conjugacy_classes(std::span<SubgroupRecord> subgroups, int r,
                                     int threads = 1);

// Exact isomorphism partition; ids in order of first appearance.
std::vector<int> isomorphism_classes(std::span<const SubgroupRecord> records);

// Regular subgroup of GA(r+r',2) made of ((a|b), diag(A, B)).
SubgroupRecord direct_product(const SubgroupRecord &g, const SubgroupRecord &h);

struct RegularClass {
  int class_id = 0;
  TransversalMap representative{};
  SubgroupRecord record;
  std::size_t orbit_size = 0;
  int iso_class = 0;
  std::optional<std::string> iso_name;
  bool abelian = false;
};

struct Classification {
  int r = 0;
  std::vector<TransversalMap> subgroups;  // every regular subgroup, sorted
  std::vector<RegularClass> classes;      // sorted by representative
  int iso_class_count = 0;
};

Classification classify_regular(int r, int threads = 1);

/// Matrices and vectors printed for the dihedral and Remark constructions.
struct FixtureInputs {
  // r = 3 dihedral witness: generators (a, A) and (b, I).
  Gf2Vec dihedral_a = Gf2Vec::from_bitstring("101");
  Gf2Vec dihedral_b = Gf2Vec::from_bitstring("011");
  Gf2Mat dihedral_A = Gf2Mat::from_rows({"101", "010", "001"});
  // Remarks: the 4x4 Jordan block shared by both groups.
  Gf2Mat jordan = Gf2Mat::from_rows({"1100", "0110", "0011", "0001"});
  Gf2Vec remark1_a = Gf2Vec::from_bitstring("0001");
  Gf2Vec remark1_b = Gf2Vec::from_bitstring("0000");
  Gf2Mat remark1_B = Gf2Mat::from_rows({"1111", "0101", "0011", "0001"});
  Gf2Vec remark2_a = Gf2Vec::from_bitstring("0001");
  Gf2Vec remark2_b = Gf2Vec::from_bitstring("0100");
  Gf2Mat remark2_B = Gf2Mat::from_rows({"1001", "0100", "0010", "0001"});
};

SubgroupRecord dihedral_witness_r3(const FixtureInputs &f = {});

struct RemarkGroups {
  std::array<AffineElement, 2> remark1_generators;
  std::array<AffineElement, 2> remark2_generators;
  SubgroupRecord remark1;
  SubgroupRecord remark2;
};

RemarkGroups remark_fixtures(const FixtureInputs &f = {});

// (c0, c1, c2, c3) as bitstrings "c0c1c2c3" solving
// c0c3 + c0c1 + c1c2 + c2c3 + c1 + c2 = 0, in increasing bit order.
std::vector<Gf2Vec> quartic_solutions();

// Coefficients of the partial sums a + Aa + ... + A^i a (i = 0..7) in the
// basis a, Aa, A^2 a, A^3 a; A must be a single 4x4 Jordan block and
// (I+A)^3 a nonzero.
std::vector<Gf2Vec> partial_sum_coefficients(const Gf2Mat &jordan, const Gf2Vec &a);

struct DihedralVerdict {
  bool exists = false;
  std::string certificate;
  std::optional<SubgroupRecord> witness;
};

/**
 * Whether D_{2^(r-1)} (order 2^r) is a regular subgroup of GA(r,2).
 * For r = 4 the enumeration-based certificate needs the r = 4
 * classification; it is computed when not supplied.
 */
DihedralVerdict dihedral_regular_exists(int r, const Classification *r4 = nullptr);

} // namespace regsub
