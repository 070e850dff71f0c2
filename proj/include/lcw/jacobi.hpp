#pragma once
#include "lcw/rat.hpp"

#include <vector>

namespace lcw {

struct EigenResult {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[i] pairs with values[i]
};

// Cyclic Jacobi rotations on an exactly symmetric rational matrix.
// Sweeps until all off-diagonal magnitudes fall below tol.
EigenResult sym_eigen_numeric(const RMat& m, double tol = 1e-12);

EigenResult sym_eigen_numeric(const std::vector<std::vector<double>>& m, double tol = 1e-12);

}  // namespace lcw
