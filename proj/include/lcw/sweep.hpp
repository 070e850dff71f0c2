#pragma once
#include "lcw/rat.hpp"

#include <string>

namespace lcw {

// Closed rational range lo, lo+step, ..., up to hi (inclusive when hit
// exactly). step must be positive and lo <= hi.
struct SweepRange {
  Rat lo, hi, step = 1;
};

// What to scan for on the diagonal 3D grid.
enum class SweepPredicate {
  DetCyZero,            // det CY = 0 exactly
  EigenflagExists,      // some eigenflag direction certified
  EigenflagWithoutLcw,  // exact eigenflags exist, every one obstructed
};

std::string sweep_predicate_name(SweepPredicate p);
// Accepts the names "detcy-zero", "eigenflag-exists", "eigenflag-without-lcw".
SweepPredicate sweep_predicate_from(const std::string& name);

struct SweepSpec {
  SweepRange l1, l2, l3;
  SweepPredicate predicate = SweepPredicate::EigenflagWithoutLcw;
  // 0 means: LCWLAB_WORKERS environment variable if set, otherwise the
  // hardware thread count.
  int workers = 0;
};

// Findings serialized as JSON lines in grid order (l1 outer, l3 inner).
// The text is byte-identical for every worker count.
struct SweepOutcome {
  long long points = 0;
  long long findings = 0;
  std::string text;
};

SweepOutcome sweep(const SweepSpec& spec);

}  // namespace lcw
