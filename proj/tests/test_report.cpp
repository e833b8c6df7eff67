#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "regsub/report.hpp"

using namespace regsub;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string &name)
{
  fs::path dir = fs::temp_directory_path() / ("regsub_report_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

} // namespace

TEST(Report, MatHexRoundTrip)
{
  for (int r = 2; r <= 4; ++r)
    for (packed::Mat m : packed::general_linear(r))
      ASSERT_EQ(report::mat_from_hex(report::mat_hex(m, r), r), m);
}

TEST(Report, ClassificationJsonFeedsParents)
{
  auto c = classify_regular(3);
  auto j = report::classification_json(c);
  EXPECT_EQ(j["subgroup_count"], 232);
  EXPECT_EQ(j["class_count"], c.classes.size());
  EXPECT_EQ(j["orbit_size_sum"], 232);
  auto reparsed = report::json::parse(j.dump());
  int r = 0;
  auto parents = report::parents_from_json(reparsed, r);
  EXPECT_EQ(r, 3);
  ASSERT_EQ(parents.size(), c.classes.size());
  for (std::size_t i = 0; i < parents.size(); ++i) {
    EXPECT_EQ(parents[i].class_id, c.classes[i].class_id);
    EXPECT_EQ(parents[i].map, c.classes[i].representative);
    EXPECT_EQ(parents[i].orbit_size, c.classes[i].orbit_size);
  }
  auto csv = report::classification_csv(c);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + static_cast<long>(c.classes.size()));
}

TEST(Report, ParentsRejectNonRegular)
{
  auto j = report::classification_json(classify_regular(2));
  j["classes"][0]["transversal"][0] = report::mat_hex(0x0012, 2);
  int r = 0;
  EXPECT_THROW(report::parents_from_json(j, r), std::invalid_argument);
}

TEST(Report, CodeFileRoundTrip)
{
  for (int r = 2; r <= 4; ++r)
    for (const auto &c : {build_hadamard(r), build_hamming(r)}) {
      std::stringstream s;
      report::write_code_file(s, c);
      auto back = report::read_code_file(s);
      EXPECT_EQ(back, c);
      EXPECT_EQ(back.name(), c.name());
    }
  std::stringstream bad("{\"n\":3}\n0110\n");
  EXPECT_THROW(report::read_code_file(bad), std::invalid_argument);
}

TEST(Report, LiftAndCheckpointRoundTrip)
{
  LiftContext ctx(3);
  std::map<int, std::vector<Lift>> done;
  int id = 0;
  for (const auto &h : enumerate_regular_maps(3))
    done[id++] = lift_regular(ctx, h);
  for (const auto &[k, lifts] : done)
    for (const auto &l : lifts)
      EXPECT_EQ(report::lift_from_json(report::lift_json(l, 3), 3), l);
  auto j = report::json::parse(report::checkpoint_json(3, done).dump());
  EXPECT_EQ(report::checkpoint_from_json(j, 3), done);
  EXPECT_THROW(report::checkpoint_from_json(j, 4), std::invalid_argument);
}

TEST(Report, FixtureOverrides)
{
  report::json j = {{"remark1_B", {"1111", "0101", "0011", "0000"}}, {"dihedral_a", "111"}};
  auto f = report::fixtures_from_json(j);
  EXPECT_EQ(f.remark1_B, Gf2Mat::from_rows({"1111", "0101", "0011", "0000"}));
  EXPECT_EQ(f.dihedral_a.to_bitstring(), "111");
  EXPECT_EQ(f.jordan, FixtureInputs{}.jordan);
  report::json bad = {{"jordan", {"110", "011"}}};
  EXPECT_THROW(report::fixtures_from_json(bad), std::exception);
}

TEST(Report, AtomicWriteAndRead)
{
  auto dir = scratch_dir("atomic");
  auto path = dir / "x.json";
  report::write_atomic(path, "{\"a\": 1}\n");
  EXPECT_FALSE(fs::exists(dir / "x.json.tmp"));
  EXPECT_EQ(report::read_json(path)["a"], 1);
  report::write_atomic(path, "{\"a\": 2}\n");
  EXPECT_EQ(report::read_json(path)["a"], 2);
  EXPECT_THROW(report::read_json(dir / "missing.json"), std::runtime_error);
}
