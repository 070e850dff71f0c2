#pragma once
#include "lcw/ckfield.hpp"
#include "lcw/liealg.hpp"

#include <string>
#include <vector>

namespace lcw {

enum class InputKind { LieAlgebra, Ckf };

// A validated input document. Rationals in the JSON must be strings like
// "p/q" or "n"; decimal literals are rejected outright.
struct InputDoc {
  InputKind kind = InputKind::LieAlgebra;
  int dim = 0;
  std::vector<Bracket> brackets;  // lie_algebra payload
  CkField field;                  // ckf payload
};

// Parses and fully validates a document (structure, skewness, Jacobi).
// skip_jacobi bypasses only the Jacobi check, for deliberately broken test
// fixtures. Throws std::invalid_argument with the offending field named.
InputDoc parse_input_text(const std::string& text, bool skip_jacobi = false);
InputDoc parse_input(const std::string& path, bool skip_jacobi = false);

}  // namespace lcw
