#include "regsub/regular.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace regsub {

std::size_t TransversalMapHash::operator()(const TransversalMap &m) const noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto x : m) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

GroupElementSet close(std::span<const AffineElement> generators, std::size_t cap)
{
  if (generators.empty())
    throw std::invalid_argument("close: need at least one generator (or pass r)");
  return close(generators.front().dim(), generators, cap);
}

GroupElementSet close(int r, std::span<const AffineElement> generators,
                      std::size_t cap)
{
  for (const auto &g : generators)
    if (g.dim() != r)
      throw DimensionError("close: generators have mixed dimensions");
  std::set<AffineElement> seen;
  std::vector<AffineElement> queue;
  auto identity = AffineElement::identity(r);
  seen.insert(identity);
  queue.push_back(identity);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto &g : generators) {
      auto p = compose(queue[q], g);
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw ClosureCapExceeded("close: group exceeds cap of " +
                                   std::to_string(cap) + " elements");
        queue.push_back(std::move(p));
      }
    }
  return GroupElementSet(std::move(queue));
}

std::vector<Gf2Vec> orbit(const GroupElementSet &s, const Gf2Vec &v)
{
  std::set<Gf2Vec> points;
  for (const auto &e : s)
    points.insert(act(e, v));
  return {points.begin(), points.end()};
}

bool is_regular(const GroupElementSet &s, int r)
{
  if (r < 1 || r > 20 || s.empty() || s.dim() != r)
    return false;
  if (s.size() != (std::size_t{1} << r))
    return false;
  return orbit(s, Gf2Vec::zero(r)).size() == s.size();
}

namespace {

// Cayley table with the identity at index 0 and the other elements in set
// order; `order_out` receives the element behind each index.
CayleyTable indexed_table(const GroupElementSet &s,
                          std::vector<AffineElement> *order_out = nullptr)
{
  if (s.size() > CayleyTable::kMaxOrder)
    throw std::invalid_argument("group too large for an explicit Cayley table");
  const auto id = AffineElement::identity(s.dim());
  std::vector<AffineElement> elems{id};
  for (const auto &e : s)
    if (!(e == id))
      elems.push_back(e);
  auto table = CayleyTable::from_elements(elems, id, [](const auto &x, const auto &y) {
    return compose(x, y);
  });
  if (order_out)
    *order_out = std::move(elems);
  return table;
}

} // namespace

CayleyTable cayley_table(const GroupElementSet &s) { return indexed_table(s); }

IsoFingerprint fingerprint(const GroupElementSet &s)
{
  return fingerprint(cayley_table(s));
}

SubgroupRecord make_record(GroupElementSet elements)
{
  SubgroupRecord rec;
  std::vector<AffineElement> order;
  auto table = indexed_table(elements, &order);
  for (auto i : generating_set(table))
    rec.generators.push_back(order[i]);
  std::ranges::sort(rec.generators);
  rec.order = elements.size();
  rec.fingerprint = fingerprint(table);
  rec.elements = std::move(elements);
  return rec;
}

TransversalMap to_transversal(const GroupElementSet &s, int r)
{
  if (r > packed::kMaxDim)
    throw DimensionError("transversal maps are limited to r <= 4");
  if (!is_regular(s, r))
    throw std::invalid_argument("to_transversal: subgroup is not regular");
  TransversalMap m{};
  for (const auto &e : s)
    m[e.translation_part().bits()] = packed::from_mat(e.linear_part());
  return m;
}

GroupElementSet from_transversal(const TransversalMap &m, int r)
{
  std::vector<AffineElement> elems;
  for (unsigned v = 0; v < (1u << r); ++v)
    elems.emplace_back(Gf2Vec(r, v), packed::to_mat(m[v], r));
  return GroupElementSet(std::move(elems));
}

namespace {

struct PElem {
  packed::Vec a;
  packed::Mat A;
};

inline PElem pcompose(PElem x, PElem y)
{
  return {static_cast<packed::Vec>(x.a ^ packed::apply(x.A, y.a)),
          packed::mul(x.A, y.A)};
}

std::uint64_t packed_order(PElem e, packed::Mat id, std::uint64_t cap)
{
  PElem p = e;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (p.a == 0 && p.A == id)
      return k;
    p = pcompose(p, e);
  }
  return cap + 1;
}

std::uint64_t packed_mat_order(packed::Mat a, packed::Mat id)
{
  std::uint64_t k = 1;
  for (packed::Mat p = a; p != id; p = packed::mul(p, a))
    ++k;
  return k;
}

class TransversalSearch {
 public:
  TransversalSearch(int m, std::span<const packed::Mat> candidates,
                    std::uint64_t order_bound)
    : m_(m), points_(1u << m), candidates_(candidates.begin(), candidates.end())
  {
    const packed::Mat id = packed::identity(m);
    allowed_.assign(points_ * candidates_.size(), 0);
    for (unsigned v = 1; v < points_; ++v)
      for (std::size_t c = 0; c < candidates_.size(); ++c)
        allowed_[v * candidates_.size() + c] =
            packed_order({static_cast<packed::Vec>(v), candidates_[c]}, id,
                         order_bound) <= order_bound;
  }

  // Explores the subtree below the root whose first choice is candidate
  // `c` with `c % stride == offset`.
  void run(unsigned offset, unsigned stride, std::vector<TransversalMap> &out) const
  {
    State root;
    root.map.fill(0);
    root.map[0] = packed::identity(m_);
    root.assigned = 1;
    dfs(root, offset, stride, out);
  }

 private:
  struct State {
    TransversalMap map;
    std::uint32_t assigned = 0;
    std::array<PElem, 4> gens{};
    unsigned ngens = 0;
  };

  bool extend(State &s, PElem g) const
  {
    std::array<packed::Vec, 16> queue{};
    unsigned head = 0, tail = 0;
    std::array<packed::Vec, 16> existing{};
    unsigned nexisting = 0;
    for (unsigned p = 0; p < points_; ++p)
      if ((s.assigned >> p) & 1u)
        existing[nexisting++] = static_cast<packed::Vec>(p);
    s.gens[s.ngens++] = g;

    auto visit = [&](PElem y) {
      const std::uint32_t bit = 1u << y.a;
      if (s.assigned & bit)
        return s.map[y.a] == y.A;
      s.assigned |= bit;
      s.map[y.a] = y.A;
      queue[tail++] = y.a;
      return true;
    };

    for (unsigned i = 0; i < nexisting; ++i) {
      auto p = existing[i];
      if (!visit(pcompose({p, s.map[p]}, g)))
        return false;
    }
    while (head < tail) {
      auto p = queue[head++];
      for (unsigned k = 0; k < s.ngens; ++k)
        if (!visit(pcompose({p, s.map[p]}, s.gens[k])))
          return false;
    }
    return true;
  }

  void dfs(const State &s, unsigned offset, unsigned stride,
           std::vector<TransversalMap> &out) const
  {
    const std::uint32_t full = (points_ == 32 ? ~0u : (1u << points_) - 1);
    if (s.assigned == full) {
      out.push_back(s.map);
      return;
    }
    const auto v = static_cast<packed::Vec>(std::countr_zero(~s.assigned & full));
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if (stride > 1 && c % stride != offset)
        continue;
      if (!allowed_[v * candidates_.size() + c])
        continue;
      State child = s;
      if (extend(child, {v, candidates_[c]}))
        dfs(child, 0, 1, out);
    }
  }

  int m_;
  unsigned points_;
  std::vector<packed::Mat> candidates_;
  std::vector<char> allowed_;
};

} // namespace

std::vector<packed::Mat> two_power_linear_parts(int r)
{
  const packed::Mat id = packed::identity(r);
  std::vector<packed::Mat> out;
  for (auto a : packed::general_linear(r))
    if (std::has_single_bit(packed_mat_order(a, id)))
      out.push_back(a);
  return out;
}

std::vector<TransversalMap>
enumerate_transversal_maps(int m, std::span<const packed::Mat> candidates,
                           std::uint64_t order_bound, int threads)
{
  if (m < 1 || m > packed::kMaxDim)
    throw DimensionError("enumerate_transversal_maps: need 1 <= m <= 4");
  TransversalSearch search(m, candidates, order_bound);
  const unsigned n = static_cast<unsigned>(std::max(1, threads));
  std::vector<std::vector<TransversalMap>> parts(n);
  if (n == 1) {
    search.run(0, 1, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned i = 0; i < n; ++i)
      workers.emplace_back([&, i] { search.run(i, n, parts[i]); });
    for (auto &w : workers)
      w.join();
  }
  std::vector<TransversalMap> out;
  for (auto &p : parts)
    out.insert(out.end(), p.begin(), p.end());
  std::ranges::sort(out);
  return out;
}

std::vector<TransversalMap> enumerate_regular_maps(int r, int threads)
{
  if (r < 1 || r > 4)
    throw std::invalid_argument("enumerate_regular: r must be in 1..4");
  auto candidates = two_power_linear_parts(r);
  return enumerate_transversal_maps(r, candidates, regular_order_bound(r), threads);
}

std::vector<SubgroupRecord> enumerate_regular(int r, int threads)
{
  std::vector<SubgroupRecord> out;
  for (const auto &m : enumerate_regular_maps(r, threads))
    out.push_back(make_record(from_transversal(m, r)));
  return out;
}

TransversalMap conjugate(const TransversalMap &s, int r, packed::Vec t, packed::Mat g)
{
  const packed::Mat ginv = packed::inverse(g, r);
  TransversalMap out{};
  for (unsigned v = 0; v < (1u << r); ++v) {
    const packed::Mat a = packed::mul(g, packed::mul(s[v], ginv));
    const auto p = static_cast<packed::Vec>(
        t ^ packed::apply(g, static_cast<packed::Vec>(v)) ^ packed::apply(a, t));
    out[p] = a;
  }
  return out;
}

ConjugacyPartition conjugacy_classes(std::span<const TransversalMap> subgroups,
                                     int r, int threads)
{
  using MapSet = std::unordered_set<TransversalMap, TransversalMapHash>;
  std::unordered_map<TransversalMap, std::size_t, TransversalMapHash> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    index.emplace(subgroups[i], i);

  const auto &gl = packed::general_linear(r);
  const unsigned points = 1u << r;
  const unsigned nthreads = static_cast<unsigned>(std::max(1, threads));

  auto orbit_of = [&](const TransversalMap &s) {
    std::vector<MapSet> parts(nthreads);
    auto work = [&](unsigned part) {
      for (std::size_t gi = part; gi < gl.size(); gi += nthreads)
        for (unsigned t = 0; t < points; ++t)
          parts[part].insert(conjugate(s, r, static_cast<packed::Vec>(t), gl[gi]));
    };
    if (nthreads == 1) {
      work(0);
    } else {
      std::vector<std::thread> workers;
      for (unsigned i = 0; i < nthreads; ++i)
        workers.emplace_back(work, i);
      for (auto &w : workers)
        w.join();
    }
    for (unsigned i = 1; i < nthreads; ++i)
      parts[0].merge(parts[i]);
    return std::move(parts[0]);
  };

  std::vector<int> provisional(subgroups.size(), -1);
  std::vector<TransversalMap> reps;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (provisional[i] >= 0)
      continue;
    MapSet orb = orbit_of(subgroups[i]);
    const int id = static_cast<int>(reps.size());
    reps.push_back(*std::ranges::min_element(orb));
    sizes.push_back(orb.size());
    for (const auto &c : orb)
      if (auto it = index.find(c); it != index.end())
        provisional[it->second] = id;
  }

  std::vector<int> by_rep(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    by_rep[i] = static_cast<int>(i);
  std::ranges::sort(by_rep, [&](int a, int b) { return reps[a] < reps[b]; });
  std::vector<int> renumber(reps.size());
  ConjugacyPartition out;
  for (std::size_t k = 0; k < by_rep.size(); ++k) {
    renumber[by_rep[k]] = static_cast<int>(k);
    out.representatives.push_back(reps[by_rep[k]]);
    out.orbit_sizes.push_back(sizes[by_rep[k]]);
  }
  for (auto c : provisional)
    out.class_of.push_back(renumber[c]);
  return out;
}

ConjugacyPartition conjugacy_classes(std::span<SubgroupRecord> subgroups, int r,
                                     int threads)
{
  std::vector<TransversalMap> maps;
  for (const auto &s : subgroups)
    maps.push_back(to_transversal(s.elements, r));
  auto part = conjugacy_classes(maps, r, threads);
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    subgroups[i].conj_class_id = part.class_of[i];
  return part;
}

std::vector<int> isomorphism_classes(std::span<const SubgroupRecord> records)
{
  std::vector<CayleyTable> tables;
  for (const auto &r : records)
    tables.push_back(cayley_table(r.elements));
  std::vector<int> ids(records.size(), -1);
  std::vector<std::size_t> class_reps;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t k = 0; k < class_reps.size(); ++k) {
      const auto j = class_reps[k];
      if (records[i].fingerprint == records[j].fingerprint &&
          isomorphic(tables[i], tables[j])) {
        ids[i] = static_cast<int>(k);
        break;
      }
    }
    if (ids[i] < 0) {
      ids[i] = static_cast<int>(class_reps.size());
      class_reps.push_back(i);
    }
  }
  return ids;
}

SubgroupRecord direct_product(const SubgroupRecord &g, const SubgroupRecord &h)
{
  const int r1 = g.elements.dim(), r2 = h.elements.dim();
  const int r = r1 + r2;
  std::vector<AffineElement> elems;
  for (const auto &x : g.elements)
    for (const auto &y : h.elements) {
      Gf2Vec a(r, x.translation_part().bits() |
                      (y.translation_part().bits() << r1));
      std::vector<std::uint64_t> rows;
      for (auto row : x.linear_part().rows())
        rows.push_back(row);
      for (auto row : y.linear_part().rows())
        rows.push_back(row << r1);
      elems.emplace_back(a, Gf2Mat(r, std::move(rows)));
    }
  return make_record(GroupElementSet(std::move(elems)));
}

Classification classify_regular(int r, int threads)
{
  Classification out;
  out.r = r;
  out.subgroups = enumerate_regular_maps(r, threads);
  auto part = conjugacy_classes(out.subgroups, r, threads);

  std::vector<SubgroupRecord> records;
  for (std::size_t k = 0; k < part.representatives.size(); ++k) {
    auto rec = make_record(from_transversal(part.representatives[k], r));
    rec.conj_class_id = static_cast<int>(k);
    records.push_back(std::move(rec));
  }
  auto iso = isomorphism_classes(records);
  for (std::size_t k = 0; k < records.size(); ++k) {
    RegularClass c;
    c.class_id = static_cast<int>(k);
    c.representative = part.representatives[k];
    c.orbit_size = part.orbit_sizes[k];
    c.iso_class = iso[k];
    auto table = cayley_table(records[k].elements);
    c.abelian = table.is_abelian();
    c.iso_name = identify(table);
    c.record = std::move(records[k]);
    out.classes.push_back(std::move(c));
  }
  out.iso_class_count =
      iso.empty() ? 0 : *std::ranges::max_element(iso) + 1;
  return out;
}

SubgroupRecord dihedral_witness_r3(const FixtureInputs &f)
{
  std::vector<AffineElement> gens{
      AffineElement(f.dihedral_a, f.dihedral_A),
      AffineElement::translation(f.dihedral_b)};
  return make_record(close(gens));
}

RemarkGroups remark_fixtures(const FixtureInputs &f)
{
  std::array<AffineElement, 2> g1{AffineElement(f.remark1_a, f.jordan),
                                  AffineElement(f.remark1_b, f.remark1_B)};
  std::array<AffineElement, 2> g2{AffineElement(f.remark2_a, f.jordan),
                                  AffineElement(f.remark2_b, f.remark2_B)};
  auto rec1 = make_record(close(g1));
  auto rec2 = make_record(close(g2));
  return RemarkGroups{g1, g2, std::move(rec1), std::move(rec2)};
}

std::vector<Gf2Vec> quartic_solutions()
{
  std::vector<Gf2Vec> out;
  for (unsigned bits = 0; bits < 16; ++bits) {
    const unsigned c0 = bits & 1, c1 = (bits >> 1) & 1, c2 = (bits >> 2) & 1,
                   c3 = (bits >> 3) & 1;
    const unsigned value = (c0 & c3) ^ (c0 & c1) ^ (c1 & c2) ^ (c2 & c3) ^ c1 ^ c2;
    if (value == 0)
      out.emplace_back(4, bits);
  }
  return out;
}

std::vector<Gf2Vec> partial_sum_coefficients(const Gf2Mat &jordan, const Gf2Vec &a)
{
  if (jordan.dim() != 4 || a.dim() != 4)
    throw DimensionError("partial_sum_coefficients: expects r = 4");
  std::array<Gf2Vec, 4> basis{a, a, a, a};
  for (int i = 1; i < 4; ++i)
    basis[i] = mat_vec(jordan, basis[i - 1]);
  auto combine = [&](unsigned c) {
    Gf2Vec s = Gf2Vec::zero(4);
    for (int i = 0; i < 4; ++i)
      if ((c >> i) & 1u)
        s = s + basis[i];
    return s;
  };
  std::vector<Gf2Vec> out;
  Gf2Vec term = a;
  Gf2Vec sum = Gf2Vec::zero(4);
  for (int i = 0; i < 8; ++i) {
    sum = sum + term;
    term = mat_vec(jordan, term);
    std::optional<unsigned> coeffs;
    for (unsigned c = 0; c < 16; ++c)
      if (combine(c) == sum) {
        if (coeffs)
          throw std::invalid_argument("partial_sum_coefficients: not a basis");
        coeffs = c;
      }
    if (!coeffs)
      throw std::invalid_argument("partial_sum_coefficients: not a basis");
    out.emplace_back(4, *coeffs);
  }
  return out;
}

DihedralVerdict dihedral_regular_exists(int r, const Classification *r4)
{
  if (r < 2)
    throw std::invalid_argument("dihedral_regular_exists: r must be at least 2");
  DihedralVerdict out;
  std::ostringstream cert;
  const std::uint64_t rotation_order = std::uint64_t{1} << (r - 1);

  if (r == 2) {
    // D_2 has order 4 and is the Klein four-group: the translations.
    std::vector<AffineElement> gens{AffineElement::translation(Gf2Vec(2, 1)),
                                    AffineElement::translation(Gf2Vec(2, 2))};
    auto rec = make_record(close(gens));
    out.exists = is_regular(rec.elements, 2) &&
                 isomorphic(cayley_table(rec.elements), models::dihedral(2));
    cert << "r=2: D_2 is the Klein four-group, realized by the translations of GA(2,2)";
    out.witness = std::move(rec);
  } else if (r == 3) {
    auto rec = dihedral_witness_r3();
    bool regular = is_regular(rec.elements, 3);
    bool dihedral = isomorphic(cayley_table(rec.elements), models::dihedral(4));
    out.exists = regular && dihedral;
    cert << "r=3: witness of order " << rec.order
         << (regular ? " is regular" : " is NOT regular")
         << (dihedral ? " and isomorphic to D_4" : " and NOT isomorphic to D_4");
    out.witness = std::move(rec);
  } else if (r == 4) {
    Classification local;
    if (!r4) {
      local = classify_regular(4);
      r4 = &local;
    }
    const auto d8 = models::dihedral(8);
    bool found = false;
    for (const auto &c : r4->classes)
      if (isomorphic(cayley_table(c.record.elements), d8))
        found = true;
    const std::vector<std::string> printed{"0000", "1000", "1100", "1110",
                                           "1111", "0111", "0011", "0001"};
    std::set<std::string> solutions, partial, expected(printed.begin(), printed.end());
    for (const auto &v : quartic_solutions())
      solutions.insert(v.to_bitstring());
    FixtureInputs f;
    for (const auto &v : partial_sum_coefficients(f.jordan, f.remark1_a))
      partial.insert(v.to_bitstring());
    const bool quartic_ok = solutions == expected && partial == expected;
    out.exists = found;
    cert << "r=4: " << r4->classes.size() << " conjugacy classes, "
         << (found ? "one is" : "none is") << " isomorphic to D_8; quartic solution set "
         << (quartic_ok ? "matches" : "does NOT match")
         << " the eight partial-sum coefficient vectors";
    if (!quartic_ok)
      throw std::logic_error("dihedral certificate: quartic obstruction failed");
  } else {
    const auto bound = regular_order_bound(r);
    out.exists = false;
    cert << "r=" << r << ": regular elements have order <= " << bound << " < "
         << rotation_order << ", the order of the rotation subgroup generator";
    if (bound >= rotation_order)
      throw std::logic_error("dihedral certificate: order bound does not exclude r");
  }
  out.certificate = cert.str();
  return out;
}

} // namespace regsub
