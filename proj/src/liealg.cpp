#include "lcw/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace lcw {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string vec_str(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

RVec basis_vec(int n, int i) {
  RVec v = rvec(n);
  v[i] = 1;
  return v;
}

int eps3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // parity of the permutation (a,b,c) of (0,1,2)
  return ((b - a) * (c - b) * (c - a)) > 0 ? 1 : -1;
}

TensorTable riemann_from(const LieAlgebra& L, const TensorTable& nc) {
  const int n = L.dim();
  TensorTable R(4, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rat v = 0;
          for (int m = 0; m < n; ++m) {
            v += nc.at({i, k, m}) * nc.at({j, m, l});
            v -= nc.at({j, k, m}) * nc.at({i, m, l});
            v += L.c(i, j, m) * nc.at({m, k, l});
          }
          R.at({i, j, k, l}) = v;
        }
  R.tags = {SymTag{true, {0, 1}}, SymTag{true, {2, 3}}};
  return R;
}

RMat ricci_from(const TensorTable& R) {
  const int n = R.dim();
  RMat out = rmat(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rat v = 0;
      for (int i = 0; i < n; ++i) v += R.at({i, j, i, k});
      out[j][k] = v;
    }
  return out;
}

Rat trace(const RMat& m) {
  Rat t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

RMat schouten_from(const RMat& ric, const Rat& s, int n) {
  RMat out = ric;
  Rat diag_shift = s / (2 * (n - 1));
  for (int i = 0; i < n; ++i) out[i][i] -= diag_shift;
  return mat_scale(Rat(1) / (n - 2), out);
}

TensorTable cotton_from(const TensorTable& nc, const RMat& S) {
  const int n = nc.dim();
  auto cov_s = [&](int i, int j, int k) {
    Rat v = 0;
    for (int m = 0; m < n; ++m) {
      v -= nc.at({i, j, m}) * S[m][k];
      v -= nc.at({i, k, m}) * S[j][m];
    }
    return v;
  };
  TensorTable C(3, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        C.at({i, j, k}) = cov_s(i, j, k) - cov_s(j, i, k);
  C.tags = {SymTag{true, {0, 1}}};
  return C;
}

RMat cotton_york_from(const TensorTable& C) {
  const int n = C.dim();
  RMat cy = rmat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Rat v = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int e = eps3(a, i, j);
          if (e) v += e * C.at({i, j, b});
        }
      cy[a][b] = v / 2;
    }
  if (!is_symmetric(cy) || trace(cy) != 0)
    throw std::logic_error("cotton_york: result lost symmetry or trace");
  return cy;
}

TensorTable weyl_from(const TensorTable& R, const RMat& S) {
  const int n = R.dim();
  TensorTable W(4, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rat kn = 0;
          if (j == l) kn += S[i][k];
          if (i == k) kn += S[j][l];
          if (j == k) kn -= S[i][l];
          if (i == l) kn -= S[j][k];
          W.at({i, j, k, l}) = R.at({i, j, k, l}) - kn;
        }
  W.tags = R.tags;
  return W;
}

constexpr int kBivector[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

RMat weyl6_from(const TensorTable& W) {
  RMat out = rmat(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      out[a][b] =
          W.at({kBivector[a][0], kBivector[a][1], kBivector[b][0], kBivector[b][1]});
  return out;
}

}  // namespace

LieAlgebra LieAlgebra::load(int n, const std::vector<Bracket>& brackets,
                            bool skip_jacobi) {
  require(n == 3 || n == 4, "LieAlgebra: dimension must be 3 or 4");
  LieAlgebra L;
  L.n_ = n;
  L.c_.assign(static_cast<std::size_t>(n) * n * n, Rat(0));
  bool seen[4][4] = {};
  for (const auto& b : brackets) {
    require(0 <= b.i && b.i < b.j && b.j < n,
            "LieAlgebra: bracket pair must satisfy 0 <= i < j < dim");
    require(static_cast<int>(b.v.size()) == n,
            "LieAlgebra: bracket value has wrong length");
    require(!seen[b.i][b.j], "LieAlgebra: duplicate bracket pair");
    seen[b.i][b.j] = true;
    for (int k = 0; k < n; ++k) {
      L.c_[(static_cast<std::size_t>(b.i) * n + b.j) * n + k] = b.v[k];
      L.c_[(static_cast<std::size_t>(b.j) * n + b.i) * n + k] = -b.v[k];
    }
  }
  if (!skip_jacobi) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          RVec d = L.jacobi_defect(i, j, k);
          if (!is_zero(d)) {
            std::ostringstream os;
            os << "LieAlgebra: Jacobi identity fails at (" << i << ", " << j
               << ", " << k << "); defect " << vec_str(d);
            throw std::invalid_argument(os.str());
          }
        }
  }
  return L;
}

LieAlgebra LieAlgebra::diagonal_3d(const Rat& l1, const Rat& l2,
                                   const Rat& l3) {
  std::vector<Bracket> b;
  b.push_back({0, 1, {Rat(0), Rat(0), l3}});
  b.push_back({0, 2, {Rat(0), -l2, Rat(0)}});
  b.push_back({1, 2, {l1, Rat(0), Rat(0)}});
  return load(3, b);
}

const Rat& LieAlgebra::c(int i, int j, int k) const {
  return c_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
}

RVec LieAlgebra::bracket_basis(int i, int j) const {
  RVec v = rvec(n_);
  for (int k = 0; k < n_; ++k) v[k] = c(i, j, k);
  return v;
}

RVec LieAlgebra::bracket(const RVec& x, const RVec& y) const {
  require(static_cast<int>(x.size()) == n_ && static_cast<int>(y.size()) == n_,
          "LieAlgebra: bracket operand has wrong length");
  RVec out = rvec(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      for (int k = 0; k < n_; ++k) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

RVec LieAlgebra::jacobi_defect(int i, int j, int k) const {
  RVec d = bracket(bracket_basis(i, j), basis_vec(n_, k));
  d = add(d, bracket(bracket_basis(j, k), basis_vec(n_, i)));
  d = add(d, bracket(bracket_basis(k, i), basis_vec(n_, j)));
  return d;
}

TensorTable connection(const LieAlgebra& L) {
  const int n = L.dim();
  TensorTable t(3, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rat v = L.c(i, j, k) - L.c(j, k, i) + L.c(k, i, j);
        t.at({i, j, k}) = v / 2;
      }
  t.tags = {SymTag{true, {1, 2}}};
  return t;
}

TensorTable riemann(const LieAlgebra& L) {
  return riemann_from(L, connection(L));
}

RMat ricci(const LieAlgebra& L) { return ricci_from(riemann(L)); }

Rat scalar_curvature(const LieAlgebra& L) { return trace(ricci(L)); }

DiagonalCurvature3 ricci_closed_form_3d(const Rat& l1, const Rat& l2,
                                        const Rat& l3) {
  DiagonalCurvature3 out;
  Rat half_sum = (l1 + l2 + l3) / 2;
  out.mu = {half_sum - l1, half_sum - l2, half_sum - l3};
  out.ric = {2 * out.mu[1] * out.mu[2], 2 * out.mu[0] * out.mu[2],
             2 * out.mu[0] * out.mu[1]};
  out.s = 2 * (out.mu[0] * out.mu[1] + out.mu[0] * out.mu[2] +
               out.mu[1] * out.mu[2]);
  return out;
}

RMat schouten(const LieAlgebra& L) {
  RMat ric = ricci(L);
  return schouten_from(ric, trace(ric), L.dim());
}

TensorTable cotton(const LieAlgebra& L) {
  require(L.dim() == 3, "cotton: dimension 3 only");
  return cotton_from(connection(L), schouten(L));
}

RMat cotton_york(const LieAlgebra& L) {
  require(L.dim() == 3, "cotton_york: dimension 3 only");
  return cotton_york_from(cotton(L));
}

TensorTable weyl(const LieAlgebra& L) {
  require(L.dim() == 4, "weyl: dimension 4 only");
  return weyl_from(riemann(L), schouten(L));
}

RMat weyl_bivector_operator(const LieAlgebra& L) {
  require(L.dim() == 4, "weyl_bivector_operator: dimension 4 only");
  return weyl6_from(weyl(L));
}

CurvaturePack curvature_pack(const LieAlgebra& L) {
  CurvaturePack p;
  p.n = L.dim();
  p.connection = connection(L);
  p.riemann = riemann_from(L, p.connection);
  p.ricci = ricci_from(p.riemann);
  p.scalar = trace(p.ricci);
  p.schouten = schouten_from(p.ricci, p.scalar, p.n);
  if (p.n == 3) {
    p.cotton = cotton_from(p.connection, p.schouten);
    p.cotton_york = cotton_york_from(p.cotton);
  } else {
    p.weyl = weyl_from(p.riemann, p.schouten);
    p.weyl6 = weyl6_from(p.weyl);
  }
  return p;
}

}  // namespace lcw
