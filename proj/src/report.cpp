#include "regsub/report.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace regsub::report {

std::string mat_hex(packed::Mat m, int r) { return packed::to_mat(m, r).to_hex(); }

packed::Mat mat_from_hex(const std::string &hex, int r)
{
  return packed::from_mat(Gf2Mat::from_hex(hex, r));
}

namespace {

json generators_json(const SubgroupRecord &rec)
{
  json out = json::array();
  for (const auto &g : rec.generators)
    out.push_back({{"a", g.translation_part().to_bitstring()},
                   {"A", g.linear_part().to_hex()}});
  return out;
}

json transversal_json(const TransversalMap &m, int r)
{
  json out = json::array();
  for (std::size_t v = 0; v < (std::size_t{1} << r); ++v)
    out.push_back(mat_hex(m[v], r));
  return out;
}

Gf2Mat mat_from_rows(const json &rows)
{
  std::vector<std::string> text = rows.get<std::vector<std::string>>();
  const int dim = static_cast<int>(text.size());
  std::vector<std::uint64_t> masks;
  for (const auto &row : text) {
    Gf2Vec v = Gf2Vec::from_bitstring(row);
    if (v.dim() != dim)
      throw DimensionError("fixture matrix must be square");
    masks.push_back(v.bits());
  }
  return Gf2Mat(dim, std::move(masks));
}

} // namespace

json classification_json(const Classification &c)
{
  std::set<std::string> abelian;
  std::size_t orbit_sum = 0;
  json classes = json::array();
  for (const auto &k : c.classes) {
    orbit_sum += k.orbit_size;
    if (k.abelian)
      abelian.insert(k.iso_name.value_or("?"));
    classes.push_back({
        {"class_id", k.class_id},
        {"order", k.record.order},
        {"generators", generators_json(k.record)},
        {"transversal", transversal_json(k.representative, c.r)},
        {"orbit_size", k.orbit_size},
        {"fingerprint_hash", k.record.fingerprint.hash()},
        {"iso_class", k.iso_class},
        {"iso_type", k.iso_name ? json(*k.iso_name) : json(nullptr)},
        {"abelian", k.abelian},
    });
  }
  return {
      {"r", c.r},
      {"subgroup_count", c.subgroups.size()},
      {"orbit_size_sum", orbit_sum},
      {"class_count", c.classes.size()},
      {"iso_class_count", c.iso_class_count},
      {"abelian_types", abelian},
      {"classes", classes},
  };
}

std::string classification_csv(const Classification &c)
{
  std::ostringstream out;
  out << "class_id,order,orbit_size,iso_class,iso_type,abelian,fingerprint_hash,generators\n";
  for (const auto &k : c.classes) {
    out << k.class_id << ',' << k.record.order << ',' << k.orbit_size << ',' << k.iso_class
        << ',' << k.iso_name.value_or("") << ',' << (k.abelian ? "true" : "false") << ','
        << k.record.fingerprint.hash() << ',';
    for (std::size_t i = 0; i < k.record.generators.size(); ++i) {
      const auto &g = k.record.generators[i];
      out << (i ? " " : "") << g.translation_part().to_bitstring() << '/'
          << g.linear_part().to_hex();
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ParentClass> parents_from_json(const json &j, int &r)
{
  r = j.at("r").get<int>();
  if (r < 1 || r > 4)
    throw std::invalid_argument("parents file: r must be between 1 and 4");
  std::vector<ParentClass> out;
  for (const auto &c : j.at("classes")) {
    ParentClass p;
    p.class_id = c.at("class_id").get<int>();
    p.orbit_size = c.at("orbit_size").get<std::size_t>();
    if (!c.at("iso_type").is_null())
      p.iso_type = c.at("iso_type").get<std::string>();
    const auto &t = c.at("transversal");
    if (t.size() != (std::size_t{1} << r))
      throw std::invalid_argument("parents file: transversal has the wrong length");
    for (std::size_t v = 0; v < t.size(); ++v)
      p.map[v] = mat_from_hex(t[v].get<std::string>(), r);
    GroupElementSet g = from_transversal(p.map, r);
    if (!g.is_closed() || !is_regular(g, r))
      throw std::invalid_argument("parents file: class " + std::to_string(p.class_id) +
                                  " is not a regular subgroup");
    out.push_back(p);
  }
  return out;
}

void write_code_file(std::ostream &out, const BinaryCode &c)
{
  json header = {{"n", c.length()}, {"name", c.name()}};
  header["dim"] = c.is_linear() ? json(c.dimension()) : json(nullptr);
  out << header.dump() << '\n';
  for (Word w : c.words())
    out << word_to_bitstring(w, c.length()) << '\n';
}

BinaryCode read_code_file(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("code file: missing header");
  json header = json::parse(line);
  const int n = header.at("n").get<int>();
  std::vector<Word> words;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    if (static_cast<int>(line.size()) != n)
      throw std::invalid_argument("code file: codeword of the wrong length");
    words.push_back(word_from_bitstring(line));
  }
  std::string name = header.value("name", std::string{});
  return BinaryCode(n, std::move(words), std::move(name));
}

json lift_json(const Lift &lift, int r)
{
  const int n = (1 << r) - 1;
  json basis = json::array();
  for (Word w : lift.translations)
    basis.push_back(word_to_bitstring(w, n));
  json cosets = json::array();
  for (std::size_t i = 0; i < lift.pi.size(); ++i)
    cosets.push_back({{"pi", mat_hex(lift.pi[i], r)},
                      {"coset_rep", word_to_bitstring(lift.coset_reps[i], n)}});
  return {{"T_basis", basis}, {"coset_map", cosets}};
}

Lift lift_from_json(const json &j, int r)
{
  Lift lift;
  for (const auto &w : j.at("T_basis"))
    lift.translations.push_back(word_from_bitstring(w.get<std::string>()));
  for (const auto &c : j.at("coset_map")) {
    lift.pi.push_back(mat_from_hex(c.at("pi").get<std::string>(), r));
    lift.coset_reps.push_back(word_from_bitstring(c.at("coset_rep").get<std::string>()));
  }
  if (!std::ranges::is_sorted(lift.pi) || lift.translations != reduced_basis(lift.translations))
    throw std::invalid_argument("lift record is not in normal form");
  return lift;
}

json embed_json(const EmbedResult &e)
{
  json lifts = json::array();
  for (const auto &rec : e.lifts) {
    json l = lift_json(rec.lift, e.r);
    l["parent_class_id"] = rec.parent_class_id;
    l["pi_order"] = rec.lift.pi.size();
    l["fingerprint_hash"] = rec.fingerprint.hash();
    l["conj_class_id"] = rec.conj_class_id ? json(*rec.conj_class_id) : json(nullptr);
    lifts.push_back(std::move(l));
  }
  std::map<int, std::size_t> per_parent;
  for (const auto &rec : e.lifts)
    ++per_parent[rec.parent_class_id];
  json parents = json::array();
  for (const auto &p : e.parents)
    parents.push_back({{"class_id", p.class_id},
                       {"orbit_size", p.orbit_size},
                       {"iso_type", p.iso_type},
                       {"lift_count", per_parent[p.class_id]}});
  return {
      {"r", e.r},
      {"parents", parents},
      {"lift_count", e.lifts.size()},
      {"conjugacy_class_count", e.conjugacy.keys.size()},
      {"fingerprint_count", e.fingerprints.count},
      {"fingerprint_count_is_lower_bound", true},
      {"lifts", lifts},
  };
}

std::string embed_csv(const EmbedResult &e)
{
  std::vector<std::size_t> count(e.conjugacy.keys.size(), 0);
  std::vector<std::set<int>> parents(e.conjugacy.keys.size());
  for (std::size_t i = 0; i < e.lifts.size(); ++i) {
    ++count[e.conjugacy.class_of[i]];
    parents[e.conjugacy.class_of[i]].insert(e.lifts[i].parent_class_id);
  }
  std::ostringstream out;
  out << "conj_class_id,pi_order,t_dim,fingerprint_hash,fingerprint_group,lift_count,parent_class_ids\n";
  for (std::size_t c = 0; c < e.conjugacy.keys.size(); ++c) {
    const auto &rep = e.lifts[e.conjugacy.representatives[c]];
    out << c << ',' << rep.lift.pi.size() << ',' << rep.lift.translations.size() << ','
        << rep.fingerprint.hash() << ',' << e.fingerprints.group_of[c] << ',' << count[c]
        << ',';
    bool first = true;
    for (int p : parents[c]) {
      out << (first ? "" : " ") << p;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

json checkpoint_json(int r, const std::map<int, std::vector<Lift>> &done)
{
  json parents = json::array();
  for (const auto &[id, lifts] : done) {
    json ls = json::array();
    for (const auto &l : lifts)
      ls.push_back(lift_json(l, r));
    parents.push_back({{"class_id", id}, {"lifts", ls}});
  }
  return {{"r", r}, {"completed", parents}};
}

std::map<int, std::vector<Lift>> checkpoint_from_json(const json &j, int r)
{
  if (j.at("r").get<int>() != r)
    throw std::invalid_argument("checkpoint was written for a different r");
  std::map<int, std::vector<Lift>> out;
  for (const auto &p : j.at("completed")) {
    auto &lifts = out[p.at("class_id").get<int>()];
    for (const auto &l : p.at("lifts"))
      lifts.push_back(lift_from_json(l, r));
  }
  return out;
}

FixtureInputs fixtures_from_json(const json &j)
{
  FixtureInputs f;
  auto vec = [&](const char *key, Gf2Vec &v) {
    if (j.contains(key))
      v = Gf2Vec::from_bitstring(j.at(key).get<std::string>());
  };
  auto mat = [&](const char *key, Gf2Mat &m) {
    if (j.contains(key))
      m = mat_from_rows(j.at(key));
  };
  vec("dihedral_a", f.dihedral_a);
  vec("dihedral_b", f.dihedral_b);
  mat("dihedral_A", f.dihedral_A);
  mat("jordan", f.jordan);
  vec("remark1_a", f.remark1_a);
  vec("remark1_b", f.remark1_b);
  mat("remark1_B", f.remark1_B);
  vec("remark2_a", f.remark2_a);
  vec("remark2_b", f.remark2_b);
  mat("remark2_B", f.remark2_B);
  return f;
}

json fixtures_json(std::span<const FixtureCheck> checks)
{
  json out = json::array();
  for (const auto &c : checks)
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

void write_atomic(const std::filesystem::path &path, const std::string &content)
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out)
      throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

json read_json(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read " + path.string());
  return json::parse(in);
}

} // namespace regsub::report
