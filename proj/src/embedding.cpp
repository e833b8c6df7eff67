#include "regsub/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace regsub {

namespace {

using packed::Mat;

std::vector<Mat> subgroup_closure(std::vector<Mat> gens, int r)
{
  std::vector<Mat> elems{packed::identity(r)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Mat g : gens) {
      Mat p = packed::mul(g, elems[i]);
      if (std::ranges::find(elems, p) == elems.end())
        elems.push_back(p);
    }
  std::ranges::sort(elems);
  return elems;
}

std::vector<Mat> generators_of(std::span<const Mat> group, int r)
{
  std::vector<Mat> gens;
  std::vector<Mat> sub{packed::identity(r)};
  for (Mat s : group) {
    if (std::ranges::binary_search(sub, s))
      continue;
    gens.push_back(s);
    sub = subgroup_closure(gens, r);
  }
  return gens;
}

std::size_t index_in(std::span<const Mat> sorted, Mat m)
{
  auto it = std::ranges::lower_bound(sorted, m);
  if (it == sorted.end() || *it != m)
    throw std::logic_error("matrix outside the permutation part");
  return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<Word> concat(std::span<const Word> a, std::span<const Word> b)
{
  std::vector<Word> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

int rank_of(std::span<const Word> v) { return static_cast<int>(reduced_basis(v).size()); }

// Fully reduced row space of vectors of up to 16 words; the pivot of a row
// is its first nonzero word's lowest bit.
class WideBasis {
 public:
  using Row = std::array<Word, 16>;

  void insert(Row v)
  {
    reduce(v);
    auto p = pivot(v);
    if (!p)
      return;
    for (auto &[row, rp] : rows_)
      if (row[p->first] & p->second)
        xor_into(row, v);
    rows_.push_back({v, *p});
  }

  void reduce(Row &v) const
  {
    for (const auto &[row, p] : rows_)
      if (v[p.first] & p.second)
        xor_into(v, row);
  }

 private:
  using Pivot = std::pair<std::size_t, Word>;

  static std::optional<Pivot> pivot(const Row &v)
  {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i])
        return Pivot{i, v[i] & -v[i]};
    return std::nullopt;
  }
  static void xor_into(Row &a, const Row &b)
  {
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] ^= b[i];
  }

  std::vector<std::pair<Row, Pivot>> rows_;
};

} // namespace

std::vector<Permutation> pi_group(std::span<const CodeAutomorphism> g)
{
  std::vector<Permutation> out;
  out.reserve(g.size());
  for (const auto &t : g)
    out.push_back(t.perm);
  std::ranges::sort(out);
  auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

AutSubgroup AutSubgroup::from_elements(std::vector<CodeAutomorphism> elements)
{
  if (elements.empty())
    throw std::invalid_argument("AutSubgroup: empty element list");
  AutSubgroup g;
  g.length_ = elements.front().perm.size();
  std::ranges::sort(elements);
  auto dup = std::ranges::unique(elements);
  elements.erase(dup.begin(), dup.end());
  g.elements_ = std::move(elements);
  g.pi_ = pi_group(g.elements_);
  return g;
}

AutSubgroup AutSubgroup::full(const BinaryCode &linear_code)
{
  if (!linear_code.is_linear())
    throw std::invalid_argument("AutSubgroup::full: code must be linear");
  const int n = linear_code.length();
  const int r = std::bit_width(static_cast<unsigned>(n));
  if ((1 << r) - 1 != n)
    throw std::invalid_argument("AutSubgroup::full: length must be 2^r - 1");
  AutSubgroup g;
  g.length_ = n;
  g.full_ = linear_code;
  // Permutation automorphisms of these codes all come from GL(r,2).
  for_each_gl(r, [&](const Gf2Mat &a) {
    Permutation p = induced_permutation(a);
    if (stabilizes(p, linear_code))
      g.pi_.push_back(std::move(p));
  });
  std::ranges::sort(g.pi_);
  return g;
}

bool AutSubgroup::contains(const CodeAutomorphism &t) const
{
  if (t.perm.size() != length_)
    return false;
  if (full_)
    return full_->contains(t.x) && stabilizes(t.perm, *full_);
  return std::ranges::binary_search(elements_, t);
}

std::size_t AutSubgroup::order() const
{
  return full_ ? full_->size() * pi_.size() : elements_.size();
}

bool AutSubgroup::is_subgroup_of(const AutSubgroup &g) const
{
  if (length_ != g.length_ || order() > g.order())
    return false;
  if (!full_)
    return std::ranges::all_of(elements_, [&](const auto &t) { return g.contains(t); });
  if (g.full_) {
    return std::ranges::all_of(full_->words(), [&](Word w) { return g.full_->contains(w); }) &&
           std::ranges::includes(g.pi_, pi_);
  }
  for (Word w : full_->words())
    for (const auto &p : pi_)
      if (!g.contains({w, p}))
        return false;
  return true;
}

bool is_narrow_sense_embedded(const AutSubgroup &h, const AutSubgroup &g)
{
  return h.is_subgroup_of(g) && h.pi() == g.pi();
}

bool is_regular(std::span<const CodeAutomorphism> g, const BinaryCode &c)
{
  if (g.size() != c.size())
    return false;
  std::vector<CodeAutomorphism> elems(g.begin(), g.end());
  std::ranges::sort(elems);
  std::vector<Word> orbit;
  for (const auto &t : elems) {
    if (t.perm.size() != c.length())
      return false;
    orbit.push_back(t.x);
  }
  std::ranges::sort(orbit);
  if (!std::ranges::equal(orbit, c.words()))
    return false;

  auto find = [&](const CodeAutomorphism &t) -> std::optional<std::size_t> {
    auto it = std::ranges::lower_bound(elems, t);
    if (it == elems.end() || *it != t)
      return std::nullopt;
    return static_cast<std::size_t>(it - elems.begin());
  };
  auto id = find(CodeAutomorphism::identity(c.length()));
  if (!id)
    return false;

  // Greedy generators; the set is a group iff the subgroup they generate,
  // grown inside the set, never leaves it and ends up being all of it.
  std::vector<CodeAutomorphism> gens;
  std::vector<char> in_sub(elems.size(), 0);
  std::vector<std::size_t> sub;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (in_sub[i] && i != *id)
      continue;
    if (i != *id)
      gens.push_back(elems[i]);
    std::ranges::fill(in_sub, 0);
    sub.assign(1, *id);
    in_sub[*id] = 1;
    for (std::size_t k = 0; k < sub.size(); ++k)
      for (const auto &gen : gens) {
        auto j = find(compose(gen, elems[sub[k]]));
        if (!j)
          return false;
        if (!in_sub[*j]) {
          in_sub[*j] = 1;
          sub.push_back(*j);
        }
      }
    if (sub.size() == elems.size())
      return true;
  }
  return sub.size() == elems.size();
}

std::vector<CodeAutomorphism> transport(const TransversalMap &h, int r)
{
  std::vector<CodeAutomorphism> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v)
    out.push_back({hadamard_word(r, v), induced_permutation(packed::to_mat(h[v], r))});
  return out;
}

LiftContext::LiftContext(int r)
  : r_(r), n_((1 << r) - 1), hadamard_(build_hadamard(r)), hamming_(build_hamming(r)),
    gl_(packed::general_linear(r)), index_(1u << 16, -1)
{
  if (r < 3 || r > 4)
    throw std::invalid_argument("LiftContext: r must be 3 or 4");
  tables_.resize(gl_.size());
  for (std::size_t k = 0; k < gl_.size(); ++k) {
    index_[gl_[k]] = static_cast<std::int32_t>(k);
    const Mat m = packed::transpose(packed::inverse(gl_[k], r));
    auto image = [&](int pos) {  // 0-based position
      return static_cast<std::uint16_t>(1u << (packed::apply(m, static_cast<packed::Vec>(pos + 1)) - 1));
    };
    auto &t = tables_[k];
    for (unsigned b = 0; b < 256; ++b) {
      std::uint16_t lo = 0;
      std::uint16_t hi = 0;
      for (int i = 0; i < 8; ++i)
        if ((b >> i) & 1u) {
          if (i < n_)
            lo |= image(i);
          if (i < 7 && 8 + i < n_)
            hi |= image(8 + i);
        }
      t.lo[b] = lo;
      if (b < 128)
        t.hi[b] = hi;
    }
  }
}

std::vector<Lift> lift_regular(const LiftContext &ctx, const TransversalMap &h)
{
  const int r = ctx.r();
  const int n = ctx.n();
  const std::size_t m = std::size_t{1} << r;
  const Mat id = packed::identity(r);

  std::vector<Mat> pi(h.begin(), h.begin() + m);
  std::ranges::sort(pi);
  pi.erase(std::ranges::unique(pi).begin(), pi.end());
  std::vector<Word> t0;
  for (std::size_t v = 0; v < m; ++v)
    if (h[v] == id)
      t0.push_back(hadamard_word(r, v));
  if (t0.size() * pi.size() != m)
    throw std::invalid_argument("lift_regular: parent is not regular");
  const int target = r + std::countr_zero(pi.size());
  const std::vector<Mat> gens = generators_of(pi, r);
  const std::vector<Word> t0_perp = orthogonal_basis(t0, n);
  const auto hamming_basis = ctx.hamming().basis();

  std::set<std::vector<Word>> level{reduced_basis(ctx.hadamard().basis())};
  for (int d = r; d < target; ++d) {
    std::set<std::vector<Word>> next;
    for (const auto &u : level) {
      const auto u_plus_h = reduced_basis(concat(u, hamming_basis));
      // Kernel of w -> ((sigma + 1) w mod U) over T_0^perp.
      std::vector<std::pair<std::uint64_t, Word>> rows;  // (image, vector)
      std::vector<Word> s;
      for (Word b : t0_perp) {
        std::uint64_t img = 0;
        for (std::size_t k = 0; k < gens.size(); ++k)
          img |= std::uint64_t{reduce(ctx.act(gens[k], b) ^ b, u)} << (16 * k);
        Word vec = b;
        for (const auto &[ri, rv] : rows)
          if (img & ri & -ri) {
            img ^= ri;
            vec ^= rv;
          }
        if (img)
          rows.emplace_back(img, vec);
        else
          s.push_back(vec);
      }
      std::vector<Word> q;
      for (Word w : s)
        q.push_back(reduce(w, u));
      q = reduced_basis(q);
      for (std::uint32_t mask = 1; mask < (1u << q.size()); ++mask) {
        Word c = 0;
        for (std::size_t k = 0; k < q.size(); ++k)
          if ((mask >> k) & 1u)
            c ^= q[k];
        if (!reduce(c, u_plus_h))
          continue;  // U + <c> would meet H_n beyond A_n
        auto child = u;
        child.push_back(c);
        next.insert(reduced_basis(child));
      }
    }
    level = std::move(next);
  }

  std::vector<Lift> out;
  for (const auto &u : level) {
    Lift lift;
    lift.pi = pi;
    lift.translations = reduced_basis(orthogonal_basis(u, n));
    const auto ta = concat(lift.translations, ctx.hadamard().basis());
    // T cap A_n must be exactly T_0.
    const int inter = static_cast<int>(lift.translations.size()) + r - rank_of(ta);
    if ((std::size_t{1} << inter) != t0.size())
      continue;
    for (Mat sigma : pi) {
      std::size_t v = 0;
      while (h[v] != sigma)
        ++v;
      lift.coset_reps.push_back(reduce(hadamard_word(r, v), lift.translations));
    }
    out.push_back(std::move(lift));
  }
  std::ranges::sort(out);
  return out;
}

std::vector<std::int8_t> lift_table(const LiftContext &ctx, const Lift &lift)
{
  std::vector<std::int8_t> table(std::size_t{1} << ctx.n(), -1);
  const auto span = span_of(lift.translations);
  for (std::size_t i = 0; i < lift.pi.size(); ++i)
    for (Word s : span) {
      auto &slot = table[lift.coset_reps[i] ^ s];
      if (slot != -1)
        throw std::logic_error("lift_table: cosets overlap");
      slot = static_cast<std::int8_t>(i);
    }
  return table;
}

std::vector<CodeAutomorphism> lift_elements(const LiftContext &ctx, const Lift &lift)
{
  std::vector<Permutation> perms;
  for (Mat s : lift.pi)
    perms.push_back(induced_permutation(packed::to_mat(s, ctx.r())));
  const auto span = span_of(lift.translations);
  std::vector<CodeAutomorphism> out;
  out.reserve(lift.order());
  for (std::size_t i = 0; i < lift.pi.size(); ++i)
    for (Word s : span)
      out.push_back({lift.coset_reps[i] ^ s, perms[i]});
  std::ranges::sort(out);
  return out;
}

bool verify_lift(const LiftContext &ctx, const TransversalMap &h, const Lift &lift)
{
  const int r = ctx.r();
  const std::size_t m = std::size_t{1} << r;
  std::vector<Mat> pi(h.begin(), h.begin() + m);
  std::ranges::sort(pi);
  pi.erase(std::ranges::unique(pi).begin(), pi.end());
  if (pi != lift.pi || lift.coset_reps.size() != pi.size() ||
      lift.order() != ctx.hamming().size())
    return false;
  std::vector<std::int8_t> table;
  try {
    table = lift_table(ctx, lift);
  } catch (const std::logic_error &) {
    return false;
  }
  for (Word y = 0; y < table.size(); ++y)
    if ((table[y] >= 0) != ctx.hamming().contains(y))
      return false;
  for (std::size_t v = 0; v < m; ++v)
    if (table[hadamard_word(r, v)] != static_cast<std::int8_t>(index_in(pi, h[v])))
      return false;

  const std::size_t id = index_in(pi, packed::identity(r));
  if (table[0] != static_cast<std::int8_t>(id))
    return false;
  std::vector<std::pair<Word, Mat>> gens;
  for (Word t : lift.translations)
    gens.emplace_back(t, pi[id]);
  for (std::size_t i = 0; i < pi.size(); ++i)
    gens.emplace_back(lift.coset_reps[i], pi[i]);
  // Closed under the generators, and the generated group is everything.
  for (Word y : ctx.hamming().words()) {
    Mat sy = pi[table[y]];
    for (const auto &[x, s] : gens) {
      auto k = std::ranges::lower_bound(pi, packed::mul(s, sy));
      if (k == pi.end() || table[x ^ ctx.act(s, y)] != k - pi.begin())
        return false;
    }
  }
  std::vector<char> seen(table.size(), 0);
  std::vector<Word> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto &[x, s] : gens) {
      Word z = x ^ ctx.act(s, queue[k]);
      if (!seen[z]) {
        seen[z] = 1;
        queue.push_back(z);
      }
    }
  return queue.size() == ctx.hamming().size();
}

HammingCoordinates hamming_coordinates(const LiftContext &ctx)
{
  HammingCoordinates hc;
  hc.basis.assign(ctx.hamming().basis().begin(), ctx.hamming().basis().end());
  if (hc.basis.size() > 4)
    throw std::invalid_argument("hamming_coordinates: needs dim H_n <= 4");
  hc.words.resize(std::size_t{1} << hc.basis.size());
  hc.coords.assign(std::size_t{1} << ctx.n(), -1);
  for (std::size_t v = 0; v < hc.words.size(); ++v) {
    Word w = 0;
    for (std::size_t j = 0; j < hc.basis.size(); ++j)
      if ((v >> j) & 1u)
        w ^= hc.basis[j];
    hc.words[v] = w;
    hc.coords[w] = static_cast<std::int32_t>(v);
  }
  return hc;
}

packed::Mat coordinate_matrix(const LiftContext &ctx, const HammingCoordinates &hc,
                              packed::Mat a)
{
  Mat out = 0;
  for (std::size_t j = 0; j < hc.basis.size(); ++j) {
    auto col = static_cast<unsigned>(hc.coords[ctx.act(a, hc.basis[j])]);
    for (std::size_t i = 0; i < hc.basis.size(); ++i)
      if ((col >> i) & 1u)
        out |= static_cast<Mat>(1u << (4 * i + j));
  }
  return out;
}

TransversalMap lift_transversal(const LiftContext &ctx, const HammingCoordinates &hc,
                                const Lift &lift)
{
  const auto table = lift_table(ctx, lift);
  TransversalMap out{};
  for (std::size_t v = 0; v < hc.words.size(); ++v)
    out[v] = coordinate_matrix(ctx, hc, lift.pi[table[hc.words[v]]]);
  return out;
}

IsoFingerprint lift_fingerprint(const LiftContext &ctx, const Lift &lift)
{
  const auto table = lift_table(ctx, lift);
  const int r = ctx.r();
  std::vector<std::int8_t> inv_index(lift.pi.size());
  for (std::size_t i = 0; i < lift.pi.size(); ++i)
    inv_index[i] = static_cast<std::int8_t>(index_in(lift.pi, packed::inverse(lift.pi[i], r)));

  auto mul = [&](Word y, Word z) { return y ^ ctx.act(lift.pi[table[y]], z); };
  auto inv = [&](Word y) { return ctx.act(lift.pi[inv_index[table[y]]], y); };

  std::vector<Word> gens(lift.translations.begin(), lift.translations.end());
  gens.insert(gens.end(), lift.coset_reps.begin(), lift.coset_reps.end());

  const std::size_t order = lift.order();
  std::vector<std::uint32_t> class_size(table.size(), 0);
  std::vector<Word> orbit;
  for (Word y : ctx.hamming().words()) {
    if (class_size[y])
      continue;
    orbit.assign(1, y);
    std::vector<char> seen(table.size(), 0);
    seen[y] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (Word g : gens) {
        Word z = mul(mul(g, orbit[k]), inv(g));
        if (!seen[z]) {
          seen[z] = 1;
          orbit.push_back(z);
        }
      }
    for (Word z : orbit)
      class_size[z] = static_cast<std::uint32_t>(orbit.size());
  }

  IsoFingerprint fp;
  fp.pairs.reserve(order);
  for (Word y : ctx.hamming().words()) {
    std::uint64_t k = 1;
    for (Word p = y; p != 0; p = mul(p, y))
      ++k;
    fp.pairs.emplace_back(k, order / class_size[y]);
  }
  std::ranges::sort(fp.pairs);
  return fp;
}

Lift conjugate(const LiftContext &ctx, const Lift &lift, Word t, packed::Mat g)
{
  const int r = ctx.r();
  const Mat g_inv = packed::inverse(g, r);
  Lift out;
  for (Word w : lift.translations)
    out.translations.push_back(ctx.act(g, w));
  out.translations = reduced_basis(out.translations);
  std::vector<std::pair<Mat, Word>> parts;
  for (std::size_t i = 0; i < lift.pi.size(); ++i) {
    Mat s = packed::mul(packed::mul(g, lift.pi[i]), g_inv);
    Word x = t ^ ctx.act(g, lift.coset_reps[i]) ^ ctx.act(s, t);
    parts.emplace_back(s, reduce(x, out.translations));
  }
  std::ranges::sort(parts);
  for (const auto &[s, x] : parts) {
    out.pi.push_back(s);
    out.coset_reps.push_back(x);
  }
  return out;
}

const LiftCanonicalizer::Normalizer &
LiftCanonicalizer::normalizer(const std::vector<packed::Mat> &pi)
{
  for (const auto &[key, norm] : cache_)
    if (key == pi)
      return norm;
  const int r = ctx_.r();
  Normalizer norm;
  norm.least = pi;
  std::vector<Mat> conj(pi.size());
  for (Mat g : ctx_.general_linear()) {
    const Mat g_inv = packed::inverse(g, r);
    for (std::size_t i = 0; i < pi.size(); ++i)
      conj[i] = packed::mul(packed::mul(g, pi[i]), g_inv);
    std::ranges::sort(conj);
    if (conj < norm.least) {
      norm.least = conj;
      norm.conjugators.clear();
    }
    if (conj == norm.least)
      norm.conjugators.push_back(g);
  }
  cache_.emplace_back(pi, std::move(norm));
  return cache_.back().second;
}

LiftKey LiftCanonicalizer::canonical(const Lift &lift)
{
  const Normalizer &norm = normalizer(lift.pi);
  const int r = ctx_.r();
  const std::size_t k = lift.pi.size();
  const auto hamming_basis = ctx_.hamming().basis();

  std::optional<LiftKey> best;
  std::vector<Word> t;
  WideBasis::Row cocycle{};
  for (Mat g : norm.conjugators) {
    t.clear();
    for (Word w : lift.translations)
      t.push_back(ctx_.act(g, w));
    t = reduced_basis(t);
    if (best && t > best->translations)
      continue;
    const Mat g_inv = packed::inverse(g, r);
    cocycle.fill(0);
    for (std::size_t i = 0; i < k; ++i) {
      Mat s = packed::mul(packed::mul(g, lift.pi[i]), g_inv);
      cocycle[index_in(norm.least, s)] = reduce(ctx_.act(g, lift.coset_reps[i]), t);
    }
    WideBasis coboundaries;
    for (Word b : hamming_basis) {
      WideBasis::Row row{};
      for (std::size_t j = 0; j < k; ++j)
        row[j] = reduce(ctx_.act(norm.least[j], b) ^ b, t);
      coboundaries.insert(row);
    }
    coboundaries.reduce(cocycle);
    std::vector<Word> co(cocycle.begin(), cocycle.begin() + static_cast<std::ptrdiff_t>(k));
    if (!best || t < best->translations || co < best->cocycle)
      best = LiftKey{norm.least, t, std::move(co)};
  }
  return *best;
}

LiftClassification classify_lifts_conjugacy(const LiftContext &ctx,
                                            std::span<LiftRecord> lifts, int threads)
{
  std::vector<LiftKey> keys(lifts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    LiftCanonicalizer canon(ctx);
    for (std::size_t i = next++; i < lifts.size(); i = next++) {
      keys[i] = canon.canonical(lifts[i].lift);
      if (lifts[i].fingerprint.pairs.empty())
        lifts[i].fingerprint = lift_fingerprint(ctx, lifts[i].lift);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, threads); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &th : pool)
    th.join();

  LiftClassification out;
  out.keys = keys;
  std::ranges::sort(out.keys);
  out.keys.erase(std::ranges::unique(out.keys).begin(), out.keys.end());
  out.class_of.resize(lifts.size());
  out.representatives.assign(out.keys.size(), lifts.size());
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    auto c = static_cast<int>(std::ranges::lower_bound(out.keys, keys[i]) - out.keys.begin());
    out.class_of[i] = c;
    lifts[i].conj_class_id = c;
    out.representatives[c] = std::min(out.representatives[c], i);
  }
  std::set<IsoFingerprint> fps;
  for (std::size_t rep : out.representatives)
    fps.insert(lifts[rep].fingerprint);
  out.fingerprint_count = fps.size();
  return out;
}

FingerprintPartition classify_lifts_fingerprint(std::span<const LiftRecord> lifts,
                                                const LiftClassification &conj)
{
  std::vector<IsoFingerprint> distinct;
  for (std::size_t rep : conj.representatives)
    distinct.push_back(lifts[rep].fingerprint);
  std::ranges::sort(distinct);
  distinct.erase(std::ranges::unique(distinct).begin(), distinct.end());
  FingerprintPartition out;
  out.count = distinct.size();
  for (std::size_t rep : conj.representatives)
    out.group_of.push_back(static_cast<int>(
        std::ranges::lower_bound(distinct, lifts[rep].fingerprint) - distinct.begin()));
  return out;
}

std::vector<std::vector<Lift>> lift_all(const LiftContext &ctx,
                                        std::span<const TransversalMap> parents,
                                        int threads, const LiftProgress &progress)
{
  std::vector<std::vector<Lift>> out(parents.size());
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < parents.size(); i = next++) {
      out[i] = lift_regular(ctx, parents[i]);
      std::lock_guard lock(mu);
      ++done;
      if (progress)
        progress(i, out[i], done, parents.size());
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, threads); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &th : pool)
    th.join();
  return out;
}

} // namespace regsub
