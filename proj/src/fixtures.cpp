#include "regsub/fixtures.hpp"

#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include "regsub/codes.hpp"
#include "regsub/embedding.hpp"

namespace regsub {

namespace {

using Body = std::function<bool(std::ostream &)>;

void run(std::vector<FixtureCheck> &out, std::string name, const Body &body)
{
  FixtureCheck check{std::move(name), false, {}};
  std::ostringstream detail;
  try {
    check.passed = body(detail);
  } catch (const std::exception &e) {
    detail << "error: " << e.what();
  }
  check.detail = detail.str();
  out.push_back(std::move(check));
}

std::set<std::string> bitstrings(const std::vector<Gf2Vec> &vs)
{
  std::set<std::string> out;
  for (const auto &v : vs)
    out.insert(v.to_bitstring());
  return out;
}

// Least conjugate of a regular subgroup; equals its class representative.
TransversalMap least_conjugate(const TransversalMap &m, int r)
{
  TransversalMap best = m;
  for (packed::Mat g : packed::general_linear(r))
    for (unsigned t = 0; t < (1u << r); ++t)
      best = std::min(best, conjugate(m, r, static_cast<packed::Vec>(t), g));
  return best;
}

const RegularClass *class_of(const Classification &c, const TransversalMap &m)
{
  const TransversalMap rep = least_conjugate(m, c.r);
  for (const auto &k : c.classes)
    if (k.representative == rep)
      return &k;
  return nullptr;
}

} // namespace

std::vector<FixtureCheck> verify_fixtures(const FixtureInputs &f, const Classification *r4)
{
  std::vector<FixtureCheck> out;
  Classification local;
  auto need_r4 = [&]() -> const Classification & {
    if (!r4) {
      local = classify_regular(4);
      r4 = &local;
    }
    return *r4;
  };

  run(out, "r=3 matrix action: Aa = 001, a + Aa = 100", [&](std::ostream &d) {
    Gf2Vec aa = mat_vec(f.dihedral_A, f.dihedral_a);
    d << "Aa=" << aa.to_bitstring() << " a+Aa=" << (f.dihedral_a + aa).to_bitstring();
    return aa.to_bitstring() == "001" && (f.dihedral_a + aa).to_bitstring() == "100";
  });

  run(out, "r=3 orbit of 000 under (a,A)", [&](std::ostream &d) {
    AffineElement e(f.dihedral_a, f.dihedral_A);
    std::vector<AffineElement> gens{e};
    std::vector<Gf2Vec> orb = orbit(close(gens), Gf2Vec::zero(3));
    auto got = bitstrings(orb);
    for (const auto &s : got)
      d << s << ' ';
    return got == std::set<std::string>{"101", "100", "001", "000"} &&
           act(e, Gf2Vec::zero(3)).to_bitstring() == "101";
  });

  run(out, "r=3 relation (b,I)(a,A)(b,I) = (001,A) = (a,A)^-1", [&](std::ostream &d) {
    AffineElement e(f.dihedral_a, f.dihedral_A);
    AffineElement b = AffineElement::translation(f.dihedral_b);
    AffineElement lhs = compose(compose(b, e), b);
    d << "translation " << lhs.translation_part().to_bitstring();
    return lhs == AffineElement(Gf2Vec::from_bitstring("001"), f.dihedral_A) &&
           lhs == inverse(e);
  });

  run(out, "Theorem 1 r=3 witness: regular D_4", [&](std::ostream &d) {
    SubgroupRecord rec = dihedral_witness_r3(f);
    bool regular = is_regular(rec.elements, 3);
    bool dihedral = isomorphic(cayley_table(rec.elements), models::dihedral(4));
    d << "order " << rec.order << (regular ? ", regular" : ", not regular")
      << (dihedral ? ", dihedral" : ", not dihedral");
    return rec.order == 8 && regular && dihedral;
  });

  run(out, "Theorem 1 r=4: quartic condition has the eight printed solutions",
      [&](std::ostream &d) {
        const std::set<std::string> printed{"0000", "1000", "1100", "1110",
                                            "1111", "0111", "0011", "0001"};
        auto solutions = bitstrings(quartic_solutions());
        auto partial = bitstrings(partial_sum_coefficients(f.jordan, f.remark1_a));
        d << solutions.size() << " solutions, " << partial.size() << " partial sums";
        return solutions == printed && partial == printed;
      });

  run(out, "Theorem 1 r=4: no regular D_8", [&](std::ostream &d) {
    auto verdict = dihedral_regular_exists(4, &need_r4());
    d << verdict.certificate;
    return !verdict.exists;
  });

  run(out, "Theorem 1 r=5,6: no regular dihedral group by the order bound",
      [&](std::ostream &d) {
        auto v5 = dihedral_regular_exists(5);
        auto v6 = dihedral_regular_exists(6);
        d << v5.certificate << "; " << v6.certificate;
        return !v5.exists && !v6.exists && regular_order_bound(6) == 8;
      });

  run(out, "Remark 1 group: order 16, D_8, not regular", [&](std::ostream &d) {
    auto groups = remark_fixtures(f);
    const auto &g = groups.remark1;
    bool regular = is_regular(g.elements, 4);
    bool d8 = g.order == 16 && isomorphic(cayley_table(g.elements), models::dihedral(8));
    d << "order " << g.order << (d8 ? ", D_8" : ", not D_8")
      << (regular ? ", regular" : ", not regular");
    return g.order == 16 && d8 && !regular;
  });

  run(out, "Remark 2 group: regular Z2xZ8 from commuting elements of orders 8 and 2",
      [&](std::ostream &d) {
        auto groups = remark_fixtures(f);
        const auto &g = groups.remark2;
        const auto &[x, y] = groups.remark2_generators;
        bool commute = compose(x, y) == compose(y, x);
        auto table = cayley_table(g.elements);
        auto name = identify(table);
        d << "order " << g.order << ", generator orders " << element_order(x) << " and "
          << element_order(y) << ", type " << name.value_or("?");
        return g.order == 16 && is_regular(g.elements, 4) && table.is_abelian() &&
               element_order(x) == 8 && element_order(y) == 2 && commute &&
               name == "Z2xZ8";
      });

  run(out, "Proposition 4: largest 2-power order in GL(r,2)", [&](std::ostream &d) {
    bool ok = gl_two_power_max_order(3) == 4 && gl_two_power_max_order(4) == 4 &&
              gl_two_power_max_order(5) == 8;
    for (int r = 3; r <= 4; ++r) {
      std::uint64_t best = 0;
      for_each_gl(r, [&](const Gf2Mat &a) {
        std::uint64_t o = mat_order(a);
        if (std::has_single_bit(o))
          best = std::max(best, o);
      });
      d << "r=" << r << ": " << best << ' ';
      ok = ok && best == gl_two_power_max_order(r);
    }
    return ok;
  });

  run(out, "Proposition 5: element orders in regular subgroups", [&](std::ostream &d) {
    d << "bounds " << regular_order_bound(3) << ", " << regular_order_bound(4) << ", "
      << regular_order_bound(5);
    return regular_order_bound(3) == 4 && regular_order_bound(4) == 8 &&
           regular_order_bound(5) == 8;
  });

  run(out, "Remark 3: GA(2,2) has regular Z4 and Z2^2", [&](std::ostream &d) {
    auto c2 = classify_regular(2);
    std::set<std::string> names;
    for (const auto &k : c2.classes)
      names.insert(k.iso_name.value_or("?"));
    for (const auto &n : names)
      d << n << ' ';
    return names.contains("Z4") && names.contains("Z2^2");
  });

  run(out, "Remark 3: Z4^2 and Z2^2xZ4 as direct products", [&](std::ostream &d) {
    auto c2 = classify_regular(2);
    const SubgroupRecord *z4 = nullptr;
    const SubgroupRecord *klein = nullptr;
    for (const auto &k : c2.classes)
      (k.iso_name == "Z4" ? z4 : klein) = &k.record;
    const auto &c4 = need_r4();
    bool ok = z4 && klein;
    for (auto [g, h, want] : {std::tuple{z4, z4, "Z4^2"}, std::tuple{klein, z4, "Z2^2xZ4"}}) {
      if (!ok)
        break;
      SubgroupRecord p = direct_product(*g, *h);
      auto name = identify(cayley_table(p.elements));
      const RegularClass *cls = class_of(c4, to_transversal(p.elements, 4));
      d << want << ": " << (cls ? "class " + std::to_string(cls->class_id) : "no class")
        << "; ";
      ok = is_regular(p.elements, 4) && name == want && cls && cls->iso_name == want;
    }
    return ok;
  });

  run(out, "Codes: A_15 weights {0:1, 8:15}, H_15 has 2048 words at distance 3",
      [&](std::ostream &d) {
        auto a = build_hadamard(4);
        auto h = build_hamming(4);
        auto wd = weight_distribution(a);
        d << "|A|=" << a.size() << " |H|=" << h.size() << " d(H)=" << min_distance(h);
        return wd == std::map<int, std::size_t>{{0, 1}, {8, 15}} && h.size() == 2048 &&
               min_distance(h) == 3 && dual(a) == h && dual(h) == a;
      });

  run(out, "Proposition 2: every GL(4,2) permutation fixes A_15 and H_15",
      [&](std::ostream &d) {
        auto a = build_hadamard(4);
        auto h = build_hamming(4);
        std::size_t both = 0;
        for_each_gl(4, [&](const Gf2Mat &m) {
          Permutation p = induced_permutation(m);
          both += stabilizes(p, a) && stabilizes(p, h);
        });
        d << both << " of 20160";
        return both == 20160;
      });

  run(out, "Aut(A_15) is narrow-sense embedded in Aut(H_15)", [&](std::ostream &d) {
    auto ga = AutSubgroup::full(build_hadamard(4));
    auto gh = AutSubgroup::full(build_hamming(4));
    d << "|Sym(A_15)|=" << ga.pi().size() << " |Sym(H_15)|=" << gh.pi().size();
    return is_narrow_sense_embedded(ga, gh);
  });

  run(out, "Proposition 3: Remark 2 group acts regularly on A_15", [&](std::ostream &d) {
    auto groups = remark_fixtures(f);
    auto image = transport(to_transversal(groups.remark2.elements, 4), 4);
    d << image.size() << " automorphisms";
    return is_regular(image, build_hadamard(4));
  });

  return out;
}

} // namespace regsub
