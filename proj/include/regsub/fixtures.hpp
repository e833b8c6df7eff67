#pragma once

#include <string>
#include <vector>

#include "regsub/regular.hpp"

namespace regsub {

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/**
 * Re-derives every printed construction: the r = 3 dihedral witness and its
 * relations, both Remark groups, the element-order bounds, the quartic
 * obstruction at r = 4, the small direct products and the code facts.
 * The r = 4 classification is computed when not supplied.
 */
std::vector<FixtureCheck> verify_fixtures(const FixtureInputs &f = {},
                                          const Classification *r4 = nullptr);

} // namespace regsub
