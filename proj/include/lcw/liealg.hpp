#pragma once
#include "lcw/tensor.hpp"
#include "lcw/vec.hpp"

#include <array>
#include <vector>

namespace lcw {

// One bracket relation [e_i, e_j] = v with i < j; unlisted pairs vanish.
struct Bracket {
  int i = 0;
  int j = 0;
  RVec v;
};

// Metric Lie algebra of dimension 3 or 4, frame e_0..e_{n-1} orthonormal.
// load() validates the Jacobi identity exactly; skip_jacobi exists so that
// deliberately broken inputs can still be pushed through the pipeline in
// tests and error-path demos.
class LieAlgebra {
 public:
  static LieAlgebra load(int n, const std::vector<Bracket>& brackets,
                         bool skip_jacobi = false);
  // [e0,e1] = l3 e2, [e1,e2] = l1 e0, [e2,e0] = l2 e1.
  static LieAlgebra diagonal_3d(const Rat& l1, const Rat& l2, const Rat& l3);

  int dim() const { return n_; }
  // <[e_i,e_j], e_k>
  const Rat& c(int i, int j, int k) const;
  RVec bracket_basis(int i, int j) const;
  RVec bracket(const RVec& x, const RVec& y) const;
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  RVec jacobi_defect(int i, int j, int k) const;

 private:
  int n_ = 0;
  std::vector<Rat> c_;
};

// Levi-Civita coefficients n_ijk = <nabla_{e_i} e_j, e_k> of the
// left-invariant metric. Antisymmetric in (j,k); the torsion identity
// n_ijk - n_jik = <[e_i,e_j],e_k> holds entrywise.
TensorTable connection(const LieAlgebra& L);

// Curvature table R_ijkl, antisymmetric in (i,j) and (k,l), symmetric under
// pair exchange, first Bianchi identity.
TensorTable riemann(const LieAlgebra& L);

RMat ricci(const LieAlgebra& L);
Rat scalar_curvature(const LieAlgebra& L);

// Closed forms for the diagonal 3D case: mu_i = (l1+l2+l3)/2 - l_i, principal
// Ricci curvatures ric = (2 mu2 mu3, 2 mu1 mu3, 2 mu1 mu2), and
// s = 2(mu1 mu2 + mu1 mu3 + mu2 mu3). Cross-validates the full pipeline.
struct DiagonalCurvature3 {
  std::array<Rat, 3> mu;
  std::array<Rat, 3> ric;
  Rat s = 0;
};
DiagonalCurvature3 ricci_closed_form_3d(const Rat& l1, const Rat& l2,
                                        const Rat& l3);

RMat schouten(const LieAlgebra& L);

// Dimension 3 only. cotton() is C_ijk, antisymmetric in (i,j) and totally
// trace-free; cotton_york() is its symmetric trace-free dual
// CY_ab = 1/2 sum_ij eps_aij C_ijb.
TensorTable cotton(const LieAlgebra& L);
RMat cotton_york(const LieAlgebra& L);

// Dimension 4 only. weyl() is the trace-free part of the curvature;
// weyl_bivector_operator() is its matrix on bivectors in the basis order
// (e0^e1, e0^e2, e0^e3, e1^e2, e1^e3, e2^e3).
TensorTable weyl(const LieAlgebra& L);
RMat weyl_bivector_operator(const LieAlgebra& L);

// All curvature data of one algebra computed in a single pass.
// cotton/cotton_york are filled when n = 3, weyl/weyl6 when n = 4.
struct CurvaturePack {
  int n = 3;
  TensorTable connection;
  TensorTable riemann;
  RMat ricci;
  Rat scalar = 0;
  RMat schouten;
  TensorTable cotton;
  RMat cotton_york;
  TensorTable weyl;
  RMat weyl6;
};
CurvaturePack curvature_pack(const LieAlgebra& L);

}  // namespace lcw
