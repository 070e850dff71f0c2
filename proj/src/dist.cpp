#include "lcw/dist.hpp"

#include <stdexcept>
#include <string>

namespace lcw {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void validate(const LieAlgebra& L, const Distribution& D,
              const std::string& who) {
  const int n = L.dim();
  require(!D.tangent.empty() && !D.normal.empty(),
          who + ": both frames must be nonempty");
  require(static_cast<int>(D.tangent.size() + D.normal.size()) == n,
          who + ": frames must jointly span the algebra");
  for (const RVec& r : D.tangent)
    require(static_cast<int>(r.size()) == n, who + ": frame vector size mismatch");
  for (const RVec& r : D.normal)
    require(static_cast<int>(r.size()) == n, who + ": frame vector size mismatch");
  require(rank(D.tangent) == static_cast<int>(D.tangent.size()),
          who + ": tangent frame is linearly dependent");
  require(rank(D.normal) == static_cast<int>(D.normal.size()),
          who + ": normal frame is linearly dependent");
  for (const RVec& t : D.tangent)
    for (const RVec& z : D.normal)
      require(dot(t, z) == 0,
              who + ": tangent and normal frames must be exactly orthogonal");
}

// nabla_u v contracted against w, all constant coefficient vectors
Rat form(const TensorTable& nn, const RVec& u, const RVec& v, const RVec& w) {
  const int n = nn.dim();
  Rat out = 0;
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      for (int k = 0; k < n; ++k) {
        if (w[k] == 0) continue;
        out += u[i] * v[j] * w[k] * nn.at({i, j, k});
      }
    }
  }
  return out;
}

std::vector<RMat> sff(const TensorTable& nn, const Distribution& D) {
  const int m = static_cast<int>(D.tangent.size());
  std::vector<RMat> out;
  for (const RVec& z : D.normal) {
    RMat mat = rmat(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        mat[a][b] = form(nn, D.tangent[a], z, D.tangent[b]);
    out.push_back(mat);
  }
  return out;
}

RatFunc rf_zero() { return RatFunc::constant(Rat(0)); }

// coefficient vectors of X(t) and the tangent frame (Y, e_rest...)
struct CircleFrames {
  std::vector<RatFunc> x;
  std::vector<std::vector<RatFunc>> tangent;
};

CircleFrames circle_frames(const CircleFamily& fam, int n) {
  CircleFrames out;
  out.x.assign(n, rf_zero());
  out.x[fam.a] = fam.c;
  out.x[fam.b] = fam.s;
  std::vector<RatFunc> y(n, rf_zero());
  y[fam.a] = rf_zero() - fam.s;
  y[fam.b] = fam.c;
  out.tangent.push_back(y);
  for (int m : fam.rest) {
    std::vector<RatFunc> e(n, rf_zero());
    e[m] = RatFunc::constant(Rat(1));
    out.tangent.push_back(e);
  }
  return out;
}

RatFunc form_rf(const TensorTable& nn, const std::vector<RatFunc>& u,
                const std::vector<RatFunc>& v, const std::vector<RatFunc>& w) {
  const int n = nn.dim();
  RatFunc out = rf_zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rat& c = nn.at({i, j, k});
        if (c == 0) continue;
        out = out + u[i] * v[j] * w[k] * RatFunc::constant(c);
      }
  return out;
}

}  // namespace

Distribution distribution_from_tangent(const LieAlgebra& L,
                                       const RMat& tangent) {
  require(!tangent.empty(), "distribution_from_tangent: empty tangent frame");
  for (const RVec& r : tangent)
    require(static_cast<int>(r.size()) == L.dim(),
            "distribution_from_tangent: frame vector size mismatch");
  require(rank(tangent) == static_cast<int>(tangent.size()),
          "distribution_from_tangent: tangent frame is linearly dependent");
  require(static_cast<int>(tangent.size()) < L.dim(),
          "distribution_from_tangent: proper subframe expected");
  Distribution D;
  D.tangent = tangent;
  D.normal = kernel(tangent);
  return D;
}

std::vector<RMat> second_fundamental_form(const LieAlgebra& L,
                                          const Distribution& D) {
  validate(L, D, "second_fundamental_form");
  return sff(connection(L), D);
}

IntegrabilityReport is_integrable(const LieAlgebra& L, const Distribution& D) {
  validate(L, D, "is_integrable");
  std::vector<RMat> forms = sff(connection(L), D);
  const int m = static_cast<int>(D.tangent.size());
  IntegrabilityReport rep;
  for (std::size_t zi = 0; zi < forms.size(); ++zi)
    for (int a = 0; a < m && rep.integrable; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (forms[zi][a][b] == forms[zi][b][a]) continue;
        rep.integrable = false;
        rep.a = a;
        rep.b = b;
        rep.bracket = L.bracket(D.tangent[a], D.tangent[b]);
        for (const RVec& z : D.normal)
          rep.normal_coeffs.push_back(dot(rep.bracket, z));
        break;
      }
  return rep;
}

UmbilicReport is_umbilical(const LieAlgebra& L, const Distribution& D) {
  validate(L, D, "is_umbilical");
  std::vector<RMat> forms = sff(connection(L), D);
  const int m = static_cast<int>(D.tangent.size());
  RMat gram = rmat(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) gram[a][b] = dot(D.tangent[a], D.tangent[b]);

  UmbilicReport rep;
  RVec h;  // per-normal factor with M^(z) = h_z * gram
  for (std::size_t zi = 0; zi < forms.size(); ++zi) {
    Rat hz = forms[zi][0][0] / gram[0][0];
    for (int a = 0; a < m && rep.umbilical; ++a)
      for (int b = 0; b < m; ++b) {
        Rat want = hz * gram[a][b];
        if (forms[zi][a][b] == want) continue;
        rep.umbilical = false;
        rep.z = static_cast<int>(zi);
        rep.a = a;
        rep.b = b;
        rep.value = forms[zi][a][b];
        rep.required = want;
        break;
      }
    if (!rep.umbilical) return rep;
    h.push_back(hz);
  }

  // H solves g(z_i, H) = -h_i over the normal frame
  const int k = static_cast<int>(D.normal.size());
  RMat ngram = rmat(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) ngram[i][j] = dot(D.normal[i], D.normal[j]);
  RVec coeffs = mat_vec(inverse(ngram), scale(Rat(-1), h));
  rep.mean_curvature = rvec(L.dim());
  for (int j = 0; j < k; ++j)
    rep.mean_curvature = add(rep.mean_curvature, scale(coeffs[j], D.normal[j]));
  return rep;
}

CircleFamily circle_family(int n, int a, int b) {
  require(n >= 2, "circle_family: dimension too small");
  require(a >= 0 && a < n && b >= 0 && b < n,
          "circle_family: plane index out of range");
  require(a != b, "circle_family: degenerate plane");
  CircleFamily fam;
  fam.a = a;
  fam.b = b;
  fam.c = RatFunc(Poly1({Rat(1), Rat(0), Rat(-1)}), Poly1({Rat(1), Rat(0), Rat(1)}));
  fam.s = RatFunc(Poly1({Rat(0), Rat(2)}), Poly1({Rat(1), Rat(0), Rat(1)}));
  for (int i = 0; i < n; ++i)
    if (i != a && i != b) fam.rest.push_back(i);
  // c^2 + s^2 = 1 identically in the half-angle parameter
  if (!(fam.c * fam.c + fam.s * fam.s == RatFunc::constant(Rat(1))))
    throw std::logic_error("circle_family: parametrization broken");
  return fam;
}

std::vector<std::vector<RatFunc>> circle_obstruction(const LieAlgebra& L,
                                                     int a, int b) {
  require(L.dim() == 4, "circle_obstruction: dimension 4 only");
  CircleFamily fam = circle_family(4, a, b);
  CircleFrames fr = circle_frames(fam, 4);
  TensorTable nn = connection(L);
  std::vector<std::vector<RatFunc>> out(3, std::vector<RatFunc>(3, rf_zero()));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out[i][j] = form_rf(nn, fr.tangent[i], fr.x, fr.tangent[j]);
  return out;
}

RatFunc circle_companion(const LieAlgebra& L, int a, int b, int m) {
  require(L.dim() == 4, "circle_companion: dimension 4 only");
  CircleFamily fam = circle_family(4, a, b);
  require(m >= 0 && m < 4 && m != a && m != b,
          "circle_companion: direction must lie outside the plane");
  CircleFrames fr = circle_frames(fam, 4);
  std::vector<RatFunc> em(4, rf_zero());
  em[m] = RatFunc::constant(Rat(1));
  return form_rf(connection(L), fr.tangent[0], em, fr.x);
}

RMat circle_excluded_point(const LieAlgebra& L, int a, int b) {
  require(L.dim() == 4, "circle_excluded_point: dimension 4 only");
  CircleFamily fam = circle_family(4, a, b);
  TensorTable nn = connection(L);
  RVec x = rvec(4), y = rvec(4);
  x[a] = -1;
  y[b] = -1;
  RMat tangent = {y};
  for (int m : fam.rest) {
    RVec e = rvec(4);
    e[m] = 1;
    tangent.push_back(e);
  }
  RMat out = rmat(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out[i][j] = form(nn, tangent[i], x, tangent[j]);
  return out;
}

}  // namespace lcw
