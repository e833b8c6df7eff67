#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "regsub/codes.hpp"
#include "regsub/embedding.hpp"
#include "regsub/fixtures.hpp"
#include "regsub/regular.hpp"

namespace regsub::report {

using nlohmann::json;

std::string mat_hex(packed::Mat m, int r);
packed::Mat mat_from_hex(const std::string &hex, int r);

json classification_json(const Classification &c);
// One row per conjugacy class.
std::string classification_csv(const Classification &c);

struct ParentClass {
  int class_id = 0;
  std::size_t orbit_size = 0;
  std::string iso_type;
  TransversalMap map{};
};

// Reads the classes of a classification report.
std::vector<ParentClass> parents_from_json(const json &j, int &r);

// A JSON header line {"n","dim","name"} followed by one sorted bitstring
// per codeword.
void write_code_file(std::ostream &out, const BinaryCode &c);
BinaryCode read_code_file(std::istream &in);

json lift_json(const Lift &lift, int r);
Lift lift_from_json(const json &j, int r);

struct EmbedResult {
  int r = 4;
  std::vector<ParentClass> parents;
  std::vector<LiftRecord> lifts;
  LiftClassification conjugacy;
  FingerprintPartition fingerprints;
};

json embed_json(const EmbedResult &e);
// One row per conjugacy class of lifts.
std::string embed_csv(const EmbedResult &e);

// Completed parents, keyed by class id.
json checkpoint_json(int r, const std::map<int, std::vector<Lift>> &done);
std::map<int, std::vector<Lift>> checkpoint_from_json(const json &j, int r);

// Overrides for the printed matrices and vectors; absent keys keep the
// defaults. Matrices are lists of row bitstrings.
FixtureInputs fixtures_from_json(const json &j);
json fixtures_json(std::span<const FixtureCheck> checks);

// Writes through a temporary file and a rename.
void write_atomic(const std::filesystem::path &path, const std::string &content);
json read_json(const std::filesystem::path &path);

} // namespace regsub::report
