#pragma once
#include "lcw/liealg.hpp"
#include "lcw/poly.hpp"
#include "lcw/vec.hpp"

#include <vector>

namespace lcw {

// A left-invariant distribution: a constant-rational-coefficient subframe
// spanning D (rows of tangent) together with a basis of D-perp (rows of
// normal). Frames must be exactly orthogonal to each other and jointly
// spanning; neither needs to be orthonormal internally.
struct Distribution {
  RMat tangent;
  RMat normal;
};

// Fills the normal frame with the exact orthogonal complement of the rows.
Distribution distribution_from_tangent(const LieAlgebra& L, const RMat& tangent);

// One matrix per normal frame vector z: M_ab = g(nabla_{X_a} z, X_b).
// Integrable iff every M is symmetric; umbilical iff every M is a rational
// multiple of the tangent Gram matrix.
std::vector<RMat> second_fundamental_form(const LieAlgebra& L,
                                          const Distribution& D);

struct IntegrabilityReport {
  bool integrable = true;
  int a = -1, b = -1;  // failing tangent pair when not integrable
  RVec bracket;        // [X_a, X_b] in the frame basis
  RVec normal_coeffs;  // its inner products with the normal frame
};
IntegrabilityReport is_integrable(const LieAlgebra& L, const Distribution& D);

struct UmbilicReport {
  bool umbilical = true;
  RVec mean_curvature;  // frame-basis vector H, filled when umbilical
  int z = -1, a = -1, b = -1;  // violating entry M^(z)_ab otherwise
  Rat value = 0;               // the offending entry
  Rat required = 0;            // what a shape-operator multiple would need
};
UmbilicReport is_umbilical(const LieAlgebra& L, const Distribution& D);

// X(t) = c e_a + s e_b rotating through a coordinate plane with cos and sin
// rational in the half-angle parameter t; c^2 + s^2 = 1 identically. The
// chart misses (c, s) = (-1, 0), which gets a separate constant-frame check.
struct CircleFamily {
  int a = 0;
  int b = 1;
  RatFunc c, s;
  std::vector<int> rest;  // complementary frame indices, ascending
};
CircleFamily circle_family(int n, int a, int b);

// Second-fundamental-form entries of D(t) = X(t)-perp with tangent frame
// (Y, e_rest...) where Y = -s e_a + c e_b: F_ij = g(nabla_{T_i} X, T_j) as
// exact rational functions of t. Dimension 4 only.
std::vector<std::vector<RatFunc>> circle_obstruction(const LieAlgebra& L,
                                                     int a, int b);

// g(nabla_Y e_m, X) for a frame direction m outside the plane. Derivatives
// of the rotation angle never enter this entry, so a nonzero constant here
// obstructs unconditionally.
RatFunc circle_companion(const LieAlgebra& L, int a, int b, int m);

// The chart's missing point X = -e_a, Y = -e_b, computed with a constant
// frame; equals the t -> infinity limit of circle_obstruction entrywise.
RMat circle_excluded_point(const LieAlgebra& L, int a, int b);

}  // namespace lcw
