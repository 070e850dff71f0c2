#pragma once
// Shared test fixtures: the two 4D metric Lie algebras used throughout the
// suite (named by the Weyl type their curvature realizes), plus generators
// for random Jacobi-valid algebras and rational rotations.
#include "lcw/liealg.hpp"
#include "lcw/vec.hpp"

#include <random>
#include <vector>

namespace lcw::fixtures {

// 4D algebra whose Weyl operator is type B (four eigenflag directions).
inline LieAlgebra type_b_algebra() {
  Rat h(1, 2);
  std::vector<Bracket> b = {
      {0, 1, {Rat(0), Rat(0), -h, Rat(0)}},
      {0, 2, {Rat(0), Rat(-1), Rat(0), Rat(0)}},
      {1, 2, {Rat(1), Rat(0), Rat(0), Rat(0)}},
      {1, 3, {Rat(0), Rat(0), -h, Rat(0)}},
      {2, 3, {Rat(0), Rat(-1), Rat(0), Rat(0)}},
  };
  return LieAlgebra::load(4, b);
}

// 4D algebra whose Weyl operator is type C (eigenflags fill two orthogonal
// 2-planes).
inline LieAlgebra type_c_algebra() {
  std::vector<Bracket> b = {
      {0, 1, {Rat(0), Rat(0), Rat(-1), Rat(-1)}},
      {0, 2, {Rat(0), Rat(-1), Rat(0), Rat(1)}},
      {0, 3, {Rat(0), Rat(-1), Rat(-1), Rat(0)}},
      {1, 2, {Rat(1), Rat(0), Rat(0), Rat(3)}},
      {1, 3, {Rat(1), Rat(0), Rat(-3), Rat(0)}},
      {2, 3, {Rat(-1), Rat(-3), Rat(0), Rat(0)}},
  };
  return LieAlgebra::load(4, b);
}

// Same bracket pattern as type_c_algebra but with the (1,2) bracket's last
// component negated; fails the Jacobi identity at (0,1,2) and (0,1,3).
inline std::vector<Bracket> jacobi_broken_4d() {
  std::vector<Bracket> b = {
      {0, 1, {Rat(0), Rat(0), Rat(-1), Rat(-1)}},
      {0, 2, {Rat(0), Rat(-1), Rat(0), Rat(1)}},
      {0, 3, {Rat(0), Rat(-1), Rat(-1), Rat(0)}},
      {1, 2, {Rat(1), Rat(0), Rat(0), Rat(-3)}},
      {1, 3, {Rat(1), Rat(0), Rat(-3), Rat(0)}},
      {2, 3, {Rat(-1), Rat(-3), Rat(0), Rat(0)}},
  };
  return b;
}

inline Rat rand_rat(std::mt19937& rng, int lo = -4, int hi = 4,
                    int max_den = 3) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  return Rat(num(rng), den(rng));
}

// Random rational rotation via the Cayley transform of a random skew matrix.
inline RMat rand_rotation(int n, std::mt19937& rng) {
  RMat s = rmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s[i][j] = rand_rat(rng, -2, 2, 3);
      s[j][i] = -s[i][j];
    }
  RMat id = identity(n);
  return mat_mul(mat_sub(id, s), inverse(mat_add(id, s)));
}

// Pushes the structure constants through an orthogonal change of frame
// f_a = sum_i R[i][a] e_i; the result is again a valid algebra.
inline LieAlgebra rotate_algebra(const LieAlgebra& L, const RMat& R) {
  const int n = L.dim();
  std::vector<Bracket> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      RVec v = rvec(n);
      for (int c = 0; c < n; ++c) {
        Rat sum = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              sum += R[i][a] * R[j][b] * R[k][c] * L.c(i, j, k);
        v[c] = sum;
      }
      out.push_back({a, b, v});
    }
  return LieAlgebra::load(n, out);
}

// Scales every bracket; the Jacobi identity is quadratic in the constants,
// so validity is preserved.
inline LieAlgebra scale_algebra(const LieAlgebra& L, const Rat& t) {
  const int n = L.dim();
  std::vector<Bracket> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out.push_back({a, b, scale(t, L.bracket_basis(a, b))});
  return LieAlgebra::load(n, out);
}

// Embeds a 3D algebra in dimension 4 with e3 central.
inline LieAlgebra embed_3d_in_4d(const LieAlgebra& L3) {
  std::vector<Bracket> out;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      RVec v = L3.bracket_basis(a, b);
      v.push_back(Rat(0));
      out.push_back({a, b, v});
    }
  return LieAlgebra::load(4, out);
}

// Kulkarni-Nomizu product of two symmetric matrices.
inline TensorTable kn_product(const RMat& a, const RMat& b) {
  const int n = static_cast<int>(a.size());
  TensorTable r(4, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r.at({i, j, k, l}) = a[i][k] * b[j][l] + a[j][l] * b[i][k] -
                               a[i][l] * b[j][k] - a[j][k] * b[i][l];
  return r;
}

// Trace-free part of a curvature-symmetric table: subtracts the product of
// its own Schouten tensor with the metric.
inline TensorTable weyl_projection(const TensorTable& r) {
  const int n = r.dim();
  RMat ric = rmat(n, n);
  Rat s = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rat v = 0;
      for (int i = 0; i < n; ++i) v += r.at({i, j, i, k});
      ric[j][k] = v;
      if (j == k) s += v;
    }
  RMat sch = ric;
  for (int i = 0; i < n; ++i) sch[i][i] -= s / (2 * (n - 1));
  sch = mat_scale(Rat(1) / (n - 2), sch);
  TensorTable w(4, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rat kn = 0;
          if (j == l) kn += sch[i][k];
          if (i == k) kn += sch[j][l];
          if (j == k) kn -= sch[i][l];
          if (i == l) kn -= sch[j][k];
          w.at({i, j, k, l}) = r.at({i, j, k, l}) - kn;
        }
  return w;
}

// A Weyl table with no eigenflag directions at all (six simple eigenvalues
// on bivectors, every descent stalls far from zero).
inline TensorTable type_a_weyl() {
  RMat alpha = {{Rat(-1), Rat(2), Rat(0), Rat(1)},
                {Rat(2), Rat(-2), Rat(-2), Rat(0)},
                {Rat(0), Rat(-2), Rat(-1), Rat(1)},
                {Rat(1), Rat(0), Rat(1), Rat(2)}};
  RMat beta = {{Rat(2), Rat(-1), Rat(2), Rat(2)},
               {Rat(-1), Rat(2), Rat(1), Rat(2)},
               {Rat(2), Rat(1), Rat(-1), Rat(2)},
               {Rat(2), Rat(2), Rat(2), Rat(1)}};
  return weyl_projection(kn_product(alpha, beta));
}

// Random valid algebra: a known family, randomly scaled and rotated.
inline LieAlgebra rand_algebra(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  Rat t = rand_rat(rng, 1, 3, 2);
  switch (kind(rng)) {
    case 0:
      return LieAlgebra::diagonal_3d(rand_rat(rng), rand_rat(rng),
                                     rand_rat(rng));
    case 1:
      return rotate_algebra(
          LieAlgebra::diagonal_3d(rand_rat(rng), rand_rat(rng), rand_rat(rng)),
          rand_rotation(3, rng));
    case 2:
      return rotate_algebra(scale_algebra(type_b_algebra(), t),
                            rand_rotation(4, rng));
    case 3:
      return rotate_algebra(scale_algebra(type_c_algebra(), t),
                            rand_rotation(4, rng));
    case 4:
      return rotate_algebra(
          embed_3d_in_4d(LieAlgebra::diagonal_3d(rand_rat(rng), rand_rat(rng),
                                                 rand_rat(rng))),
          rand_rotation(4, rng));
    default:
      return LieAlgebra::load(3, {});
  }
}

}  // namespace lcw::fixtures
