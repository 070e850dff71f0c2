#pragma once
#include "lcw/tensor.hpp"
#include "lcw/vec.hpp"

#include <string>
#include <variant>
#include <vector>

namespace lcw {

// Quadratic conformal Killing field on R^n, n >= 3, written as a parameter
// tuple (alpha, c, B, gamma):
//
//   X(x) = (alpha.x) x - 1/2 alpha |x|^2 + c x + B x + gamma
//
// with B skew. The tuple of an actual limiting-weight field additionally
// satisfies the closedness conditions checked by lcw_conditions and friends.
struct CkField {
  int n = 3;
  RVec alpha;
  Rat c = 0;
  RMat B;
  RVec gamma;

  // Throws std::invalid_argument on dimension mismatch, non-skew B, n < 3,
  // or the all-zero tuple.
  void validate() const;

  bool operator==(const CkField& o) const = default;
};

std::string ckfield_str(const CkField& X);

// Elements of the conformal group acting on parameter tuples, plus scalar
// post-multiplication of the field.
struct Translation {
  RVec x0;  // F(x) = x - x0
};
struct Dilation {
  Rat r;  // F(x) = x / r, r != 0
};
struct Rotation {
  RMat R;  // F(x) = R x, R^T R = I exactly
};
struct Inversion {};  // F(x) = x / |x|^2
struct Scalar {
  Rat k;  // X -> k X, k != 0
};
using ConformalMove = std::variant<Translation, Dilation, Rotation, Inversion, Scalar>;

std::string move_str(const ConformalMove& m);

RVec evaluate(const CkField& X, const RVec& x);

// Symmetrized-Jacobian self-test. The symmetric part of DX must equal
// lambda(x) I with lambda(x) = 2 alpha.x + 2c; the check is carried out on
// the polynomial coefficients, so `passes` holds for every well-formed tuple.
struct KillingSelftest {
  bool passes = false;
  RVec lambda_linear;  // gradient of lambda, equals 2 alpha
  Rat lambda_const;    // lambda(0), equals 2c
};
KillingSelftest conformal_killing_selftest(const CkField& X);

// Parameter-level closedness conditions: the 3-form B ^ gamma and the 2-form
// cB - alpha ^ gamma, both of which vanish when the tuple comes from a
// limiting weight. They are necessary conditions; reduce_to_family re-checks
// them after every move and rejects tuples that only pass at the initial
// gauge.
struct LcwConditions {
  TensorTable b_wedge_gamma;               // 3-form
  TensorTable cB_minus_alpha_wedge_gamma;  // 2-form
  bool pass = false;
};
LcwConditions lcw_conditions(const CkField& X);

CkField act(const CkField& X, const ConformalMove& m);

// One of the six model families, with direction data kept rational:
//   1: psi = (gamma.x)/|gamma|^2                      X = (0,0,0,gamma)
//   2: psi = log|x|                                   X = (0,1,0,0)
//   3: psi = arctan(gh.x/sh.x)/(|gamma||sigma|)       X = (0,0,gamma^sigma,0)
//   4: psi = -2 (gamma.x)/(|gamma|^2 |x|^2)           X = (gamma,0,0,0)
//   5: psi = arctan(-2 gh.x/sqrt(s) / (|x|^2/s - 1))
//            / (sqrt(s)|gamma|)                       X = (gamma,0,0,+s/2 gamma)
//   6: psi = arctanh(-2 gh.x/sqrt(s) / (|x|^2/s + 1))
//            / (sqrt(s)|gamma|)                       X = (gamma,0,0,-s/2 gamma)
// where gh, sh are the unit vectors along gamma, sigma. The weight itself is
// a*psi + b; the tuple scales accordingly (X -> X/a).
struct LcwFamily {
  int id = 1;  // 1..6
  int n = 3;
  RVec gamma;
  RVec sigma;  // family 3 only
  Rat s = 0;   // families 5 and 6, s > 0
  Rat a = 1;   // affine postcomposition, a != 0
  Rat b = 0;

  Rat gamma_norm_sq() const;
  Rat sigma_norm_sq() const;
};

// Exact parameter tuple of a*psi + b, i.e. (1/a) times the table tuple.
CkField canonical_tuple(const LcwFamily& f);

struct Reduction {
  LcwFamily family;
  std::vector<ConformalMove> chain;  // applied left to right
};

// Runs the case analysis reducing X to a model tuple. Throws
// std::invalid_argument when X fails the condition gate (initially or after
// any move of the chain), or when a required exact factorization fails; both
// mean X is not the tuple of a limiting weight.
Reduction reduce_to_family(const CkField& X);

// 1 for families {1,4}, 2 for {2,6}, 3 for {3,5}.
int orbit_class(const CkField& X);
int orbit_of_family(int family_id);

// Floating-point a*psi(x) + b. Throws std::domain_error on the singular
// locus (origin for 2/4, plane sigma.x = 0 for 3, sphere |x|^2 = s for 5,
// points +-sqrt(s) gh for 6).
double psi_evaluate(const LcwFamily& f, const std::vector<double>& x);

// Checks X = |grad psi|^-2 grad psi against the canonical tuple at the given
// sample points. Families 1-4, and 5/6 with s a rational square, compare in
// exact arithmetic (residual 0); otherwise grad psi is formed by central
// finite differences with step 1e-5. Samples on the singular locus are
// skipped and counted.
struct CorrespondenceResult {
  double max_residual = 0.0;
  int skipped = 0;
  bool exact = false;
};
CorrespondenceResult verify_correspondence(const LcwFamily& f,
                                           const std::vector<RVec>& samples);

// Exact checks of the three closedness identities at rational samples:
//   (1) dX ^ X = 0
//   (2) dX ^ d(|X|^2) = 0
//   (3) |d(|X|^2) ^ X|^2 = |X|^4 |dX|^2
// dX is formed in closed form from the tuple. Throws std::invalid_argument
// when X vanishes at a sample.
struct ClosednessChecks {
  bool eq1 = false;
  bool eq2 = false;
  bool eq3 = false;
};
ClosednessChecks closedness_checks(const CkField& X, const std::vector<RVec>& samples);

}  // namespace lcw
