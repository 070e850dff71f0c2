#pragma once
#include "lcw/report.hpp"

#include <string>
#include <vector>

namespace lcw {

// A scenario runs one of the worked examples end to end and compares every
// stage against values frozen in the source. `diffs` lists the labels of the
// comparisons that failed; an empty list means the run reproduced the pinned
// state exactly.
struct ScenarioResult {
  Report report;
  std::vector<std::string> diffs;
};

std::vector<std::string> scenario_names();

// Throws std::invalid_argument on an unknown name.
ScenarioResult run_scenario(const std::string& name);

}  // namespace lcw
