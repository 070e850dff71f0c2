#pragma once
#include "lcw/tensor.hpp"
#include "lcw/vec.hpp"

#include <string>
#include <vector>

namespace lcw {

// A direction certified (exactly or numerically) to satisfy the bivector
// invariance condition W(v ^ v-perp) inside v ^ v-perp, resp. its 3D
// Cotton-York analogue.
struct FlagCertificate {
  bool exact = false;
  RVec v;                     // primitive integer direction when exact
  std::vector<double> v_num;  // unit direction when numeric
  double defect = 0.0;        // residual; exactly zero for exact certificates
};

struct Eigenflags3 {
  bool all_directions = false;  // the tensor vanishes, every direction works
  std::vector<FlagCertificate> flags;
};

// True iff CY(v,v) = 0 and CY restricted to v-perp vanishes, both checked
// with a rational cross-product basis of v-perp.
bool eigenflag_check_3d(const RMat& cy, const RVec& v);

// Eigenflag directions of a symmetric trace-free 3x3 tensor. Exact early
// outs (zero tensor, nonzero determinant); otherwise numeric spectral
// candidates u_+ +- u_-, rationalized and re-checked exactly.
Eigenflags3 eigenflag_find_3d(const RMat& cy);

Rat det_cy(const RMat& cy);

// Exact invariance test of span{v ^ w : w in v-perp} under the bivector
// action of a Weyl table.
bool eigenflag_check_4d(const TensorTable& w, const RVec& v);

// Squared norm of the part of W(v ^ v-perp) sticking out of v ^ v-perp;
// smooth in v, zero exactly at eigenflags. v must be unit within 1e-9.
double flag_defect_4d(const TensorTable& w, const std::vector<double>& v);

enum class WeylTag { A, B, C, D, Inconclusive };
std::string weyl_tag_str(WeylTag t);

// A 2-plane of eigenflag directions, spanned by the orthogonal pair (u, w).
struct PlaneCertificate {
  bool exact = true;
  RVec u;
  RVec w;
};

struct WeylType {
  WeylTag tag = WeylTag::D;
  std::vector<double> eigenvalues;    // of the 6x6 bivector operator, ascending
  std::vector<int> multiplicities;    // eigenvalue cluster sizes, ascending
  bool exact_spectrum = false;
  std::vector<Rat> exact_eigenvalues;  // distinct values when exact
  std::vector<FlagCertificate> flags;
  std::vector<PlaneCertificate> planes;  // type C evidence
  int starts = 0;          // descent starts performed
  double min_defect = 0.0;  // smallest defect reached across starts
  double gap = 0.0;         // ambiguous eigenvalue gap when inconclusive
  std::string note;
};

// Classification of a Weyl table by eigenflag structure. "A" is a numeric
// verdict backed by the recorded descent statistics, never an exact fact.
WeylType weyl_type(const TensorTable& w);

}  // namespace lcw
