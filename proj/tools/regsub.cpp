#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "regsub/codes.hpp"
#include "regsub/embedding.hpp"
#include "regsub/fixtures.hpp"
#include "regsub/regular.hpp"
#include "regsub/report.hpp"

namespace fs = std::filesystem;
using namespace regsub;

namespace {

constexpr int kOk = 0;
constexpr int kOperational = 1;
constexpr int kMismatch = 2;

// Counts printed for the r = 4 classification and its lifts.
constexpr std::size_t kConjugacyClassesR4 = 39;
constexpr int kIsoClassesR4 = 11;
const std::set<std::string> kAbelianTypesR4{"Z2^4", "Z2xZ8", "Z2^2xZ4", "Z4^2"};
constexpr std::size_t kLiftClassesAtLeast = 1207;
constexpr std::size_t kLiftIsoClassesAtLeast = 48;

struct Common {
  int threads = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;
  bool csv = false;
  std::string out;

  bool want_json() const { return json || !csv; }
  bool want_csv() const { return csv || !json; }

  fs::path out_dir() const
  {
    fs::path dir = out;
    if (dir.empty()) {
      const char *env = std::getenv("REGSUB_OUT_DIR");
      dir = env && *env ? env : ".";
    }
    fs::create_directories(dir);
    return dir;
  }
};

void write_file(const fs::path &path, const std::string &content)
{
  report::write_atomic(path, content);
  std::cout << "wrote " << path.string() << '\n';
}

int cmd_verify_fixtures(const Common &common, const std::string &fixture_file)
{
  FixtureInputs f;
  if (!fixture_file.empty())
    f = report::fixtures_from_json(report::read_json(fixture_file));
  auto checks = verify_fixtures(f);
  std::size_t failed = 0;
  for (const auto &c : checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty())
      std::cout << "  (" << c.detail << ')';
    std::cout << '\n';
    failed += !c.passed;
  }
  std::cout << checks.size() - failed << '/' << checks.size() << " fixtures pass\n";
  if (!common.out.empty() || std::getenv("REGSUB_OUT_DIR"))
    write_file(common.out_dir() / "fixtures.json", report::fixtures_json(checks).dump(2) + "\n");
  return failed ? kMismatch : kOk;
}

int cmd_classify(const Common &common, int r)
{
  std::cerr << "classifying regular subgroups of GA(" << r << ",2)\n";
  Classification c = classify_regular(r, common.threads);
  const fs::path dir = common.out_dir();
  const std::string stem = "classify_r" + std::to_string(r);
  auto j = report::classification_json(c);
  if (common.want_json())
    write_file(dir / (stem + ".json"), j.dump(2) + "\n");
  if (common.want_csv())
    write_file(dir / (stem + ".csv"), report::classification_csv(c));

  std::set<std::string> names;
  std::set<std::string> abelian;
  for (const auto &k : c.classes) {
    names.insert(k.iso_name.value_or("?"));
    if (k.abelian)
      abelian.insert(k.iso_name.value_or("?"));
  }
  std::cout << "regular subgroups: " << c.subgroups.size() << '\n'
            << "conjugacy classes: " << c.classes.size() << '\n'
            << "isomorphism classes: " << c.iso_class_count << '\n'
            << "abelian types:";
  for (const auto &a : abelian)
    std::cout << ' ' << a;
  std::cout << '\n';

  bool agree = true;
  if (r == 2)
    agree = names.contains("Z4") && names.contains("Z2^2");
  if (r == 3)
    agree = names.contains("D4");
  if (r == 4) {
    auto check = [&](const std::string &what, auto got, auto want) {
      bool ok = got == want;
      std::cout << what << ": computed " << got << ", expected " << want
                << (ok ? "  [agree]" : "  [MISMATCH]") << '\n';
      agree = agree && ok;
    };
    check("conjugacy classes", c.classes.size(), kConjugacyClassesR4);
    check("isomorphism classes", c.iso_class_count, kIsoClassesR4);
    check("abelian types", abelian.size(), kAbelianTypesR4.size());
    agree = agree && abelian == kAbelianTypesR4;
  }
  return agree ? kOk : kMismatch;
}

int cmd_embed(const Common &common, const std::string &parents_file,
              const std::string &resume_file, const std::vector<int> &only)
{
  int r = 0;
  auto parents = report::parents_from_json(report::read_json(parents_file), r);
  if (r != 3 && r != 4)
    throw std::invalid_argument("embed: parents must come from classify --r 3 or 4");
  const bool full_run = only.empty() && parents.size() == kConjugacyClassesR4;
  if (!only.empty())
    std::erase_if(parents, [&](const auto &p) { return std::ranges::find(only, p.class_id) == only.end(); });
  if (parents.empty())
    throw std::invalid_argument("embed: no parent classes selected");
  const fs::path dir = common.out_dir();

  std::map<int, std::vector<Lift>> done;
  if (!resume_file.empty() && fs::exists(resume_file)) {
    done = report::checkpoint_from_json(report::read_json(resume_file), r);
    std::cerr << "resuming: " << done.size() << " parent classes already done\n";
  }
  std::vector<TransversalMap> pending;
  std::vector<int> pending_ids;
  for (const auto &p : parents)
    if (!done.contains(p.class_id)) {
      pending.push_back(p.map);
      pending_ids.push_back(p.class_id);
    }

  LiftContext ctx(r);
  const std::size_t already = parents.size() - pending.size();
  lift_all(ctx, pending, common.threads,
           [&](std::size_t i, const std::vector<Lift> &lifts, std::size_t k, std::size_t) {
             done[pending_ids[i]] = lifts;
             std::cerr << "parents " << already + k << '/' << parents.size() << " (class "
                       << pending_ids[i] << ": " << lifts.size() << " lifts)\n";
             if (!resume_file.empty())
               report::write_atomic(resume_file, report::checkpoint_json(r, done).dump() + "\n");
           });

  report::EmbedResult result;
  result.r = r;
  result.parents = parents;
  for (const auto &p : parents) {
    for (const auto &l : done.at(p.class_id)) {
      if (!verify_lift(ctx, p.map, l))
        throw std::runtime_error("embed: a lift of class " + std::to_string(p.class_id) +
                                 " failed verification");
      result.lifts.push_back({p.class_id, l, std::nullopt, {}});
    }
  }
  std::cerr << "classifying " << result.lifts.size() << " lifts up to conjugacy\n";
  result.conjugacy = classify_lifts_conjugacy(ctx, result.lifts, common.threads);
  result.fingerprints = classify_lifts_fingerprint(result.lifts, result.conjugacy);

  const std::string stem = "embed_r" + std::to_string(r);
  if (common.want_json())
    write_file(dir / (stem + ".json"), report::embed_json(result).dump(1) + "\n");
  if (common.want_csv())
    write_file(dir / (stem + ".csv"), report::embed_csv(result));

  const std::size_t conj = result.conjugacy.keys.size();
  const std::size_t fps = result.fingerprints.count;
  std::cout << "lifts: " << result.lifts.size() << '\n'
            << "conjugacy classes: " << conj << '\n'
            << "fingerprint classes (lower bound on isomorphism classes): " << fps << '\n';
  if (r != 4 || !full_run)
    return kOk;
  const bool conj_ok = conj >= kLiftClassesAtLeast;
  const bool fp_ok = fps >= kLiftIsoClassesAtLeast;
  std::cout << "conjugacy classes vs at least " << kLiftClassesAtLeast << ": "
            << (conj_ok ? (conj == kLiftClassesAtLeast ? "agree (exact)" : "agree (larger)")
                        : "MISMATCH")
            << '\n'
            << "fingerprint classes vs at least " << kLiftIsoClassesAtLeast << ": "
            << (fp_ok ? "agree" : "MISMATCH") << '\n';
  return conj_ok && fp_ok ? kOk : kMismatch;
}

int cmd_codes(int r, const std::string &which, const std::string &out)
{
  BinaryCode c = which == "hadamard" ? build_hadamard(r) : build_hamming(r);
  std::ostringstream text;
  report::write_code_file(text, c);
  fs::path path = out;
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  write_file(path, text.str());
  std::cout << c.name() << ": " << c.size() << " words, weights";
  for (auto [w, k] : weight_distribution(c))
    std::cout << ' ' << w << ':' << k;
  std::cout << '\n';
  return kOk;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Regular subgroups of GA(r,2) and of the automorphism groups of "
               "Hadamard and Hamming codes"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", common.json, "Write JSON reports (default: JSON and CSV)");
  app.add_flag("--csv", common.csv, "Write CSV reports (default: JSON and CSV)");

  auto *fixtures = app.add_subcommand("verify-fixtures", "Re-check the printed constructions");
  std::string fixture_file;
  fixtures->add_option("--fixtures", fixture_file, "JSON file overriding fixture matrices")
      ->check(CLI::ExistingFile);
  fixtures->add_option("--out", common.out, "Output directory (default $REGSUB_OUT_DIR)");

  auto *classify = app.add_subcommand("classify", "Classify regular subgroups of GA(r,2)");
  int r = 4;
  classify->add_option("--r", r, "Dimension")->required()->check(CLI::Range(2, 4));
  classify->add_option("--out", common.out, "Output directory (default $REGSUB_OUT_DIR)");

  auto *embed = app.add_subcommand("embed", "Lift regular subgroups of Aut(A_n) into Aut(H_n)");
  std::string parents_file;
  std::string resume_file;
  std::vector<int> only;
  embed->add_option("--parents", parents_file, "Classification report from classify")
      ->required()
      ->check(CLI::ExistingFile);
  embed->add_option("--out", common.out, "Output directory (default $REGSUB_OUT_DIR)");
  embed->add_option("--resume", resume_file, "Checkpoint file, created or resumed");
  embed->add_option("--only", only, "Restrict to these parent class ids");

  auto *codes = app.add_subcommand("codes", "Write a Hadamard or Hamming code");
  std::string which;
  std::string code_out;
  codes->add_option("--r", r, "Dimension")->required()->check(CLI::Range(2, 5));
  codes->add_option("--which", which, "hadamard or hamming")
      ->required()
      ->check(CLI::IsMember({"hadamard", "hamming"}));
  codes->add_option("--out", code_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kOperational;
  }

  try {
    if (*fixtures)
      return cmd_verify_fixtures(common, fixture_file);
    if (*classify)
      return cmd_classify(common, r);
    if (*embed)
      return cmd_embed(common, parents_file, resume_file, only);
    if (*codes)
      return cmd_codes(r, which, code_out);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOperational;
  }
  return kOperational;
}
