#include "regsub/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace regsub {

namespace {

int code_length(int r)
{
  if (r < 2 || r > 5)
    throw std::invalid_argument("code length 2^r - 1 needs 2 <= r <= 5");
  return (1 << r) - 1;
}

Word length_mask(int n) { return n >= 32 ? ~Word{0} : (Word{1} << n) - 1; }

} // namespace

std::string word_to_bitstring(Word w, int n)
{
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((w >> i) & 1u)
      s[i] = '1';
  return s;
}

Word word_from_bitstring(std::string_view text)
{
  if (text.size() > static_cast<std::size_t>(kMaxCodeLength))
    throw std::invalid_argument("codeword longer than 31 coordinates");
  Word w = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      w |= Word{1} << i;
    else if (text[i] != '0')
      throw std::invalid_argument("bitstring may only contain 0 and 1");
  }
  return w;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
  std::vector<char> seen(image_.size(), 0);
  for (int p : image_) {
    if (p < 0 || p >= static_cast<int>(image_.size()) || seen[p])
      throw std::invalid_argument("permutation: images must be a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::span<const int> one_line)
{
  std::vector<int> image;
  image.reserve(one_line.size());
  for (int p : one_line)
    image.push_back(p - 1);
  return Permutation(std::move(image));
}

std::vector<int> Permutation::one_line() const
{
  std::vector<int> out;
  out.reserve(image_.size());
  for (int p : image_)
    out.push_back(p + 1);
  return out;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i))
      return false;
  return true;
}

Word Permutation::apply(Word w) const
{
  Word out = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if ((w >> i) & 1u)
      out |= Word{1} << image_[i];
  return out;
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[image_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation &p2, const Permutation &p1)
{
  if (p2.size() != p1.size())
    throw DimensionError("compose: permutation sizes differ");
  std::vector<int> image(static_cast<std::size_t>(p1.size()));
  for (int i = 0; i < p1.size(); ++i)
    image[i] = p2(p1(i));
  return Permutation(std::move(image));
}

std::vector<Word> reduced_basis(std::span<const Word> vectors)
{
  std::vector<Word> basis;
  for (Word v : vectors) {
    v = reduce(v, basis);
    if (!v)
      continue;
    Word pivot = v & -v;
    for (Word &b : basis)
      if (b & pivot)
        b ^= v;
    basis.push_back(v);
  }
  std::ranges::sort(basis, [](Word a, Word b) { return (a & -a) < (b & -b); });
  return basis;
}

Word reduce(Word w, std::span<const Word> basis)
{
  for (Word b : basis)
    if (w & b & -b)
      w ^= b;
  return w;
}

std::vector<Word> span_of(std::span<const Word> basis)
{
  std::vector<Word> out{0};
  out.reserve(std::size_t{1} << basis.size());
  for (Word b : basis) {
    std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i)
      out.push_back(out[i] ^ b);
  }
  std::ranges::sort(out);
  return out;
}

std::vector<Word> orthogonal_basis(std::span<const Word> basis, int n)
{
  std::vector<Word> rb = reduced_basis(basis);
  Word pivots = 0;
  for (Word b : rb)
    pivots |= b & -b;
  // Free coordinate j gives the solution e_j + sum over rows containing j
  // of that row's pivot.
  std::vector<Word> out;
  for (int j = 0; j < n; ++j) {
    Word e = Word{1} << j;
    if (pivots & e)
      continue;
    Word y = e;
    for (Word b : rb)
      if (b & e)
        y |= b & -b;
    out.push_back(y);
  }
  return out;
}

BinaryCode::BinaryCode(int length, std::vector<Word> words, std::string name)
  : length_(length), words_(std::move(words)), name_(std::move(name))
{
  if (length < 1 || length > kMaxCodeLength)
    throw std::invalid_argument("code length must be between 1 and 31");
  std::ranges::sort(words_);
  auto dup = std::ranges::unique(words_);
  words_.erase(dup.begin(), dup.end());
  if (words_.empty() || words_.front() != 0)
    throw std::invalid_argument("code must contain the zero word");
  if (words_.back() & ~length_mask(length))
    throw std::invalid_argument("codeword exceeds the code length");
  basis_ = reduced_basis(words_);
  linear_ = basis_.size() < 32 && (std::size_t{1} << basis_.size()) == words_.size();
}

bool BinaryCode::contains(Word w) const { return std::ranges::binary_search(words_, w); }

int BinaryCode::dimension() const
{
  if (!linear_)
    throw std::logic_error("dimension: code is not linear");
  return static_cast<int>(basis_.size());
}

Word hadamard_word(int r, std::uint64_t a)
{
  const int n = code_length(r);
  Word w = 0;
  for (int x = 1; x <= n; ++x)
    if (std::popcount(static_cast<std::uint64_t>(x) & a) & 1)
      w |= Word{1} << (x - 1);
  return w;
}

BinaryCode build_hadamard(int r)
{
  const int n = code_length(r);
  std::vector<Word> basis;
  for (int j = 0; j < r; ++j)
    basis.push_back(hadamard_word(r, std::uint64_t{1} << j));
  return BinaryCode(n, span_of(basis), "A_" + std::to_string(n));
}

BinaryCode build_hamming(int r)
{
  const int n = code_length(r);
  std::vector<Word> rows;
  for (int j = 0; j < r; ++j)
    rows.push_back(hadamard_word(r, std::uint64_t{1} << j));
  return BinaryCode(n, span_of(orthogonal_basis(rows, n)), "H_" + std::to_string(n));
}

BinaryCode dual(const BinaryCode &c)
{
  return BinaryCode(c.length(), span_of(orthogonal_basis(c.basis(), c.length())));
}

std::map<int, std::size_t> weight_distribution(const BinaryCode &c)
{
  std::map<int, std::size_t> out;
  for (Word w : c.words())
    ++out[std::popcount(w)];
  return out;
}

int min_distance(const BinaryCode &c)
{
  if (c.size() < 2)
    throw std::invalid_argument("min_distance: code has a single word");
  int best = c.length() + 1;
  if (c.is_linear()) {
    for (Word w : c.words())
      if (w)
        best = std::min(best, std::popcount(w));
    return best;
  }
  auto words = c.words();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, std::popcount(words[i] ^ words[j]));
  return best;
}

BinaryCode kernel(const BinaryCode &c)
{
  if (c.is_linear())
    return BinaryCode(c.length(), std::vector<Word>(c.words().begin(), c.words().end()));
  std::vector<Word> out;
  for (Word x : c.words()) {
    bool keeps = std::ranges::all_of(c.words(), [&](Word y) { return c.contains(x ^ y); });
    if (keeps)
      out.push_back(x);
  }
  return BinaryCode(c.length(), std::move(out));
}

Permutation induced_permutation(const Gf2Mat &a)
{
  const int r = a.dim();
  const int n = code_length(r);
  auto inv = mat_inverse(a);
  if (!inv)
    throw NotInvertible("induced_permutation: matrix is singular");
  const Gf2Mat m = transpose(*inv);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    image[x - 1] = static_cast<int>(mat_vec(m, Gf2Vec(r, static_cast<std::uint64_t>(x))).bits()) - 1;
  return Permutation(std::move(image));
}

bool stabilizes(const Permutation &p, const BinaryCode &c)
{
  if (p.size() != c.length())
    throw DimensionError("stabilizes: permutation and code lengths differ");
  if (c.is_linear())
    return std::ranges::all_of(c.basis(), [&](Word b) { return c.contains(p.apply(b)); });
  return std::ranges::all_of(c.words(), [&](Word w) { return c.contains(p.apply(w)); });
}

Word apply(const CodeAutomorphism &t, Word y) { return t.x ^ t.perm.apply(y); }

CodeAutomorphism compose(const CodeAutomorphism &t2, const CodeAutomorphism &t1)
{
  return {t2.x ^ t2.perm.apply(t1.x), compose(t2.perm, t1.perm)};
}

CodeAutomorphism inverse(const CodeAutomorphism &t)
{
  Permutation inv = t.perm.inverse();
  return {inv.apply(t.x), std::move(inv)};
}

std::vector<Word> apply_automorphism(const CodeAutomorphism &t, const BinaryCode &c)
{
  if (t.perm.size() != c.length())
    throw DimensionError("apply_automorphism: lengths differ");
  std::vector<Word> out;
  out.reserve(c.size());
  for (Word y : c.words())
    out.push_back(apply(t, y));
  std::ranges::sort(out);
  return out;
}

CodeAutomorphism automorphism_from_affine(const AffineElement &e)
{
  return {hadamard_word(e.dim(), e.translation_part().bits()),
          induced_permutation(e.linear_part())};
}

AffineElement affine_from_automorphism(const CodeAutomorphism &t, int r)
{
  const int n = code_length(r);
  if (t.perm.size() != n)
    throw DimensionError("affine_from_automorphism: wrong code length");
  // Columns of A^{-T} are the images of the unit positions.
  Gf2Mat m(r);
  std::uint64_t a = 0;
  for (int j = 0; j < r; ++j) {
    int pos = (1 << j) - 1;
    std::uint64_t col = static_cast<std::uint64_t>(t.perm(pos)) + 1;
    for (int i = 0; i < r; ++i)
      m.set(i, j, (col >> i) & 1u);
    if ((t.x >> pos) & 1u)
      a |= std::uint64_t{1} << j;
  }
  auto m_inv = mat_inverse(transpose(m));
  if (!m_inv)
    throw std::invalid_argument("affine_from_automorphism: not an affine automorphism");
  AffineElement e(Gf2Vec(r, a), *m_inv);
  if (automorphism_from_affine(e) != t)
    throw std::invalid_argument("affine_from_automorphism: not an affine automorphism");
  return e;
}

} // namespace regsub
