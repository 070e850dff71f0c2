#pragma once
#include "lcw/input.hpp"
#include "lcw/report.hpp"

namespace lcw {

// Full pipeline for one input document. Lie algebras get curvature,
// obstruction tensors, eigenflag certificates, and distribution verdicts for
// every exact flag direction; conformal Killing tuples get the closedness
// conditions and the family/orbit reduction. Deterministic: identical input
// bytes produce identical report bytes.
Report analyze(const InputDoc& doc, bool skip_jacobi = false);

}  // namespace lcw
