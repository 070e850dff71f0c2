#include "lcw/flags.hpp"

#include "lcw/jacobi.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace lcw {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

constexpr int kBivector[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

RVec cross(const RVec& a, const RVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Primitive integer representative of the line through v, leading entry
// positive. Zero vectors pass through unchanged.
RVec canonical_direction(const RVec& v) {
  BigInt l = 1;
  for (const Rat& x : v) l = lcm(l, denominator(x));
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const Rat& x : v) {
    BigInt n = numerator(x) * (l / denominator(x));
    ints.push_back(n);
    g = gcd(g, n);
  }
  if (g == 0) return v;
  for (const BigInt& n : ints) {
    if (n == 0) continue;
    if (n < 0) g = -g;
    break;
  }
  RVec out;
  for (const BigInt& n : ints) out.push_back(Rat(n / g));
  return out;
}

std::pair<RVec, RVec> perp_basis_3d(const RVec& v) {
  for (int i = 0; i < 3; ++i) {
    RVec e = rvec(3);
    e[i] = 1;
    RVec w1 = cross(v, e);
    if (!is_zero(w1)) return {w1, cross(v, w1)};
  }
  throw std::invalid_argument("perp_basis_3d: zero direction");
}

using Mat6d = std::array<std::array<double, 6>, 6>;
using Vec4d = std::array<double, 4>;

double norm4(const Vec4d& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

Vec4d unit4(Vec4d v) {
  double n = norm4(v);
  for (double& x : v) x /= n;
  return v;
}

std::array<double, 6> biv_coords_d(const Vec4d& a, const Vec4d& b) {
  std::array<double, 6> out;
  for (int t = 0; t < 6; ++t) {
    int i = kBivector[t][0], j = kBivector[t][1];
    out[t] = a[i] * b[j] - a[j] * b[i];
  }
  return out;
}

RVec biv_coords(const RVec& a, const RVec& b) {
  RVec out = rvec(6);
  for (int t = 0; t < 6; ++t) {
    int i = kBivector[t][0], j = kBivector[t][1];
    out[t] = a[i] * b[j] - a[j] * b[i];
  }
  return out;
}

void validate_weyl(const TensorTable& w, const std::string& who) {
  require(w.rank() == 4 && w.dim() == 4, who + ": rank-4 table over dimension 4 expected");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rat tr = 0;
      for (int m = 0; m < 4; ++m) tr += w.at({m, i, m, j});
      require(tr == 0, who + ": input lacks Weyl symmetries (nonzero trace)");
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const Rat& v = w.at({i, j, k, l});
          require(v == -w.at({j, i, k, l}) && v == -w.at({i, j, l, k}) &&
                      v == w.at({k, l, i, j}),
                  who + ": input lacks Weyl symmetries");
          Rat cyc = v + w.at({j, k, i, l}) + w.at({k, i, j, l});
          require(cyc == 0, who + ": input lacks Weyl symmetries (Bianchi)");
        }
    }
}

RMat to_w6(const TensorTable& w) {
  RMat m = rmat(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      m[a][b] = w.at({kBivector[a][0], kBivector[a][1], kBivector[b][0],
                      kBivector[b][1]});
  return m;
}

Mat6d to_double6(const RMat& m) {
  Mat6d out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out[i][j] = rat_double(m[i][j]);
  return out;
}

// Orthonormal basis of the complement of the unit vector v.
std::array<Vec4d, 3> perp_frame_d(const Vec4d& v) {
  // take the coordinate axes least aligned with v first
  std::array<int, 4> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::fabs(v[a]) < std::fabs(v[b]); });
  std::array<Vec4d, 3> out;
  int have = 0;
  for (int oi = 0; oi < 4 && have < 3; ++oi) {
    Vec4d w{0, 0, 0, 0};
    w[order[oi]] = 1.0;
    double d = w[0] * v[0] + w[1] * v[1] + w[2] * v[2] + w[3] * v[3];
    for (int i = 0; i < 4; ++i) w[i] -= d * v[i];
    for (int p = 0; p < have; ++p) {
      double dp = 0;
      for (int i = 0; i < 4; ++i) dp += w[i] * out[p][i];
      for (int i = 0; i < 4; ++i) w[i] -= dp * out[p][i];
    }
    double n = norm4(w);
    if (n < 1e-7) continue;
    for (double& x : w) x /= n;
    out[have++] = w;
  }
  return out;
}

double defect_numeric(const Mat6d& w6, const Vec4d& v_unit) {
  std::array<Vec4d, 3> ws = perp_frame_d(v_unit);
  std::array<std::array<double, 6>, 3> b;
  for (int i = 0; i < 3; ++i) b[i] = biv_coords_d(v_unit, ws[i]);
  double total = 0;
  for (int i = 0; i < 3; ++i) {
    std::array<double, 6> img{};
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) img[r] += w6[r][c] * b[i][c];
    // subtract the projection onto the (orthonormal) b-frame
    for (int j = 0; j < 3; ++j) {
      double d = 0;
      for (int r = 0; r < 6; ++r) d += img[r] * b[j][r];
      for (int r = 0; r < 6; ++r) img[r] -= d * b[j][r];
    }
    for (int r = 0; r < 6; ++r) total += img[r] * img[r];
  }
  return total;
}

struct DescentOut {
  Vec4d v;
  double f = 0;
};

DescentOut descend(const Mat6d& w6, Vec4d v) {
  v = unit4(v);
  double f = defect_numeric(w6, v);
  const double h = 1e-6;
  for (int it = 0; it < 500 && f > 1e-14; ++it) {
    Vec4d g{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      Vec4d vp = v, vm = v;
      vp[i] += h;
      vm[i] -= h;
      g[i] = (defect_numeric(w6, unit4(vp)) - defect_numeric(w6, unit4(vm))) /
             (2 * h);
    }
    double gv = g[0] * v[0] + g[1] * v[1] + g[2] * v[2] + g[3] * v[3];
    for (int i = 0; i < 4; ++i) g[i] -= gv * v[i];
    double ng = norm4(g);
    if (ng < 1e-18) break;
    double step = 0.25;
    bool improved = false;
    for (int t = 0; t < 30; ++t) {
      Vec4d vn;
      for (int i = 0; i < 4; ++i) vn[i] = v[i] - step * g[i] / ng;
      vn = unit4(vn);
      double fn = defect_numeric(w6, vn);
      if (fn < f) {
        v = vn;
        f = fn;
        improved = true;
        break;
      }
      step /= 2;
    }
    if (!improved) break;
  }
  return {v, f};
}

// Deterministic low-discrepancy starts on the sphere.
Vec4d quasi_start(int k) {
  static const double kTheta[4] = {0.41421356237309515, 0.7320508075688772,
                                   0.2360679774997896, 0.6457513110645906};
  Vec4d v;
  for (int j = 0; j < 4; ++j) {
    double u = std::fmod((k + 1) * kTheta[j], 1.0);
    v[j] = u - 0.5;
  }
  if (norm4(v) < 1e-9) v[0] += 0.25;
  return unit4(v);
}

// Coefficient of the volume form in a ^ b for bivectors in the basis order
// of kBivector.
Rat pluecker_pairing(const RVec& a, const RVec& b) {
  return a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[3] * b[2] - a[4] * b[1] +
         a[5] * b[0];
}

RMat skew_from_biv(const RVec& b6) {
  RMat m = rmat(4, 4);
  for (int t = 0; t < 6; ++t) {
    m[kBivector[t][0]][kBivector[t][1]] = b6[t];
    m[kBivector[t][1]][kBivector[t][0]] = -b6[t];
  }
  return m;
}

// Decomposable directions in the pencil x b1 + y b2, as primitive 6-vectors.
std::vector<RVec> decomposables_in_pencil(const RVec& b1, const RVec& b2) {
  Rat a = pluecker_pairing(b1, b1);
  Rat b = pluecker_pairing(b1, b2);
  Rat c = pluecker_pairing(b2, b2);
  std::vector<std::pair<Rat, Rat>> roots;  // (x, y)
  if (a == 0 && c == 0) {
    if (b == 0) {
      roots = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};  // whole pencil works
    } else {
      roots = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    }
  } else if (a == 0) {
    roots = {{Rat(1), Rat(0)}, {-c, 2 * b}};
  } else if (c == 0) {
    roots = {{Rat(0), Rat(1)}, {-2 * b, a}};
  } else {
    Rat disc = b * b - a * c;
    Rat sq;
    if (disc < 0 || !rat_sqrt(disc, sq)) return {};
    roots.push_back({-b + sq, a});
    if (sq != 0) roots.push_back({-b - sq, a});
  }
  std::vector<RVec> out;
  for (const auto& [x, y] : roots) {
    RVec beta = add(scale(x, b1), scale(y, b2));
    if (is_zero(beta)) continue;
    beta = canonical_direction(beta);
    bool dup = false;
    for (const RVec& seen : out) dup = dup || seen == beta;
    if (!dup) out.push_back(beta);
  }
  return out;
}

// The 2-plane of a decomposable bivector: kernel of v -> v ^ beta.
// Returns an orthogonal basis pair, or empty vectors when beta is not
// decomposable after all.
PlaneCertificate plane_of_bivector(const RVec& b6) {
  RMat sk = skew_from_biv(b6);
  static const int kTriple[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  RMat m = rmat(4, 4);
  for (int t = 0; t < 4; ++t) {
    int a = kTriple[t][0], b = kTriple[t][1], c = kTriple[t][2];
    m[t][a] += sk[b][c];
    m[t][b] -= sk[a][c];
    m[t][c] += sk[a][b];
  }
  RMat ker = kernel(m);
  PlaneCertificate out;
  if (ker.size() != 2) return out;
  RVec u = ker[0];
  RVec w = sub(ker[1], scale(dot(u, ker[1]) / dot(u, u), u));
  out.u = canonical_direction(u);
  out.w = canonical_direction(w);
  return out;
}

RVec plane_intersection(const PlaneCertificate& p, const PlaneCertificate& q) {
  RMat constraints = kernel(RMat{p.u, p.w});
  RMat more = kernel(RMat{q.u, q.w});
  for (const RVec& r : more) constraints.push_back(r);
  RMat ker = kernel(constraints);
  if (ker.size() != 1) return {};
  return canonical_direction(ker[0]);
}

std::vector<double> to_unit_vecd(const Vec4d& v) {
  Vec4d u = unit4(v);
  return {u[0], u[1], u[2], u[3]};
}

}  // namespace

bool eigenflag_check_3d(const RMat& cy, const RVec& v) {
  require(cy.size() == 3 && cy[0].size() == 3 && v.size() == 3,
          "eigenflag_check_3d: 3x3 tensor and 3-vector expected");
  require(!is_zero(v), "eigenflag_check_3d: zero direction rejected");
  auto [w1, w2] = perp_basis_3d(v);
  auto q = [&](const RVec& x, const RVec& y) { return dot(x, mat_vec(cy, y)); };
  return q(v, v) == 0 && q(w1, w1) == 0 && q(w2, w2) == 0 && q(w1, w2) == 0;
}

Rat det_cy(const RMat& cy) {
  require(cy.size() == 3 && cy[0].size() == 3, "det_cy: 3x3 matrix expected");
  return det(cy);
}

Eigenflags3 eigenflag_find_3d(const RMat& cy) {
  require(cy.size() == 3 && cy[0].size() == 3,
          "eigenflag_find_3d: 3x3 matrix expected");
  require(is_symmetric(cy), "eigenflag_find_3d: symmetric input required");
  require(cy[0][0] + cy[1][1] + cy[2][2] == 0,
          "eigenflag_find_3d: trace-free input required");
  Eigenflags3 out;
  if (is_zero(cy)) {
    out.all_directions = true;
    return out;
  }
  if (det(cy) != 0) return out;

  EigenResult eig = sym_eigen_numeric(cy);
  // spectrum is (-mu, 0, mu); flag candidates mix the extreme eigenvectors
  for (int sgn : {+1, -1}) {
    std::vector<double> cand(3);
    double nrm = 0;
    for (int i = 0; i < 3; ++i) {
      cand[i] = eig.vectors[2][i] + sgn * eig.vectors[0][i];
      nrm += cand[i] * cand[i];
    }
    nrm = std::sqrt(nrm);
    for (double& x : cand) x /= nrm;

    // numeric residual of the defining conditions
    double vv = 0;
    {
      // use exact check after rationalization for the certificate; the
      // numeric defect just reports how well the float candidate does
      std::array<std::array<double, 3>, 3> cyd;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cyd[i][j] = rat_double(cy[i][j]);
      std::array<double, 3> vu = {cand[0], cand[1], cand[2]};
      // orthonormal complement via cross products
      std::array<double, 3> a{1, 0, 0};
      if (std::fabs(vu[0]) > 0.9) a = {0, 1, 0};
      std::array<double, 3> w1 = {vu[1] * a[2] - vu[2] * a[1],
                                  vu[2] * a[0] - vu[0] * a[2],
                                  vu[0] * a[1] - vu[1] * a[0]};
      double n1 = std::sqrt(w1[0] * w1[0] + w1[1] * w1[1] + w1[2] * w1[2]);
      for (double& x : w1) x /= n1;
      std::array<double, 3> w2 = {vu[1] * w1[2] - vu[2] * w1[1],
                                  vu[2] * w1[0] - vu[0] * w1[2],
                                  vu[0] * w1[1] - vu[1] * w1[0]};
      auto form = [&](const std::array<double, 3>& x,
                      const std::array<double, 3>& y) {
        double s = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) s += x[i] * cyd[i][j] * y[j];
        return s;
      };
      double f1 = form(vu, vu), f2 = form(w1, w1), f3 = form(w2, w2),
             f4 = form(w1, w2);
      vv = f1 * f1 + f2 * f2 + f3 * f3 + f4 * f4;
    }

    // rationalize against the largest component and re-check exactly
    int am = 0;
    for (int i = 1; i < 3; ++i)
      if (std::fabs(cand[i]) > std::fabs(cand[am])) am = i;
    RVec r(3, Rat(0));
    for (int i = 0; i < 3; ++i) r[i] = rationalize(cand[i] / cand[am]);
    r = canonical_direction(r);
    FlagCertificate cert;
    if (!is_zero(r) && eigenflag_check_3d(cy, r)) {
      cert.exact = true;
      cert.v = r;
      cert.defect = 0.0;
    } else {
      cert.exact = false;
      cert.v_num = cand;
      cert.defect = vv;
    }
    out.flags.push_back(cert);
  }
  return out;
}

bool eigenflag_check_4d(const TensorTable& w, const RVec& v) {
  validate_weyl(w, "eigenflag_check_4d");
  require(v.size() == 4, "eigenflag_check_4d: 4-vector expected");
  require(!is_zero(v), "eigenflag_check_4d: zero direction rejected");
  RMat w6 = to_w6(w);
  RMat perp = kernel(RMat{v});
  RMat span;
  for (const RVec& p : perp) span.push_back(biv_coords(v, p));
  RMat with_images = span;
  for (const RVec& b : span) with_images.push_back(mat_vec(w6, b));
  return rank(with_images) == rank(span);
}

double flag_defect_4d(const TensorTable& w, const std::vector<double>& v) {
  require(w.rank() == 4 && w.dim() == 4,
          "flag_defect_4d: rank-4 table over dimension 4 expected");
  require(v.size() == 4, "flag_defect_4d: 4-vector expected");
  Vec4d vv = {v[0], v[1], v[2], v[3]};
  require(std::fabs(norm4(vv) - 1.0) <= 1e-9,
          "flag_defect_4d: unit vector required");
  return defect_numeric(to_double6(to_w6(w)), vv);
}

std::string weyl_tag_str(WeylTag t) {
  switch (t) {
    case WeylTag::A: return "A";
    case WeylTag::B: return "B";
    case WeylTag::C: return "C";
    case WeylTag::D: return "D";
    default: return "inconclusive";
  }
}

WeylType weyl_type(const TensorTable& w) {
  validate_weyl(w, "weyl_type");
  WeylType out;
  RMat w6 = to_w6(w);
  if (is_zero(w6)) {
    out.tag = WeylTag::D;
    out.eigenvalues.assign(6, 0.0);
    out.multiplicities = {6};
    out.exact_spectrum = true;
    out.exact_eigenvalues = {Rat(0)};
    out.note = "operator vanishes; every direction is an eigenflag";
    return out;
  }

  EigenResult eig = sym_eigen_numeric(w6);
  out.eigenvalues = eig.values;

  // try to pin the spectrum exactly
  std::vector<Rat> distinct;
  std::vector<int> nullity;
  int total_null = 0;
  for (double lam : eig.values) {
    Rat r = rationalize(lam);
    bool seen = false;
    for (const Rat& d : distinct) seen = seen || d == r;
    if (seen) continue;
    RMat shifted = w6;
    for (int i = 0; i < 6; ++i) shifted[i][i] -= r;
    int nul = 6 - rank(shifted);
    if (nul > 0) {
      distinct.push_back(r);
      nullity.push_back(nul);
      total_null += nul;
    }
  }
  if (total_null == 6) {
    out.exact_spectrum = true;
    std::vector<std::size_t> order(distinct.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return distinct[a] < distinct[b];
    });
    for (std::size_t i : order) {
      out.exact_eigenvalues.push_back(distinct[i]);
      out.multiplicities.push_back(nullity[i]);
    }
  } else {
    // numeric clusters
    std::vector<double> sorted = eig.values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> reps;
    for (double lam : sorted) {
      if (out.multiplicities.empty() || lam - reps.back() > 1e-12) {
        reps.push_back(lam);
        out.multiplicities.push_back(1);
      } else {
        ++out.multiplicities.back();
      }
    }
    double min_gap = 1e300;
    for (std::size_t i = 1; i < reps.size(); ++i)
      min_gap = std::min(min_gap, reps[i] - reps[i - 1]);
    if (reps.size() > 1 && min_gap < 1e-9) {
      out.tag = WeylTag::Inconclusive;
      out.gap = min_gap;
      out.note = "eigenvalues separated by less than 1e-9 and not exactly "
                 "resolvable; refusing to classify";
      return out;
    }
  }

  // candidate directions: the frame, then rationalized descent minimizers
  auto add_exact = [&](const RVec& dir) {
    RVec d = canonical_direction(dir);
    for (const FlagCertificate& f : out.flags)
      if (f.exact && f.v == d) return;
    if (eigenflag_check_4d(w, d)) {
      FlagCertificate c;
      c.exact = true;
      c.v = d;
      out.flags.push_back(c);
    }
  };
  for (int i = 0; i < 4; ++i) {
    RVec e = rvec(4);
    e[i] = 1;
    add_exact(e);
  }

  Mat6d w6d = to_double6(w6);
  const int n_starts = 64;
  std::vector<DescentOut> results(n_starts);
  {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(std::min(8u, hw ? hw : 1u));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (int k = next.fetch_add(1); k < n_starts; k = next.fetch_add(1))
          results[k] = descend(w6d, quasi_start(k));
      });
    for (auto& th : pool) th.join();
  }
  out.starts = n_starts;
  out.min_defect = results[0].f;
  for (const DescentOut& r : results) out.min_defect = std::min(out.min_defect, r.f);

  for (const DescentOut& r : results) {
    if (r.f > 1e-10) continue;
    // rationalize against the largest component
    int am = 0;
    for (int i = 1; i < 4; ++i)
      if (std::fabs(r.v[i]) > std::fabs(r.v[am])) am = i;
    RVec cand(4, Rat(0));
    for (int i = 0; i < 4; ++i) cand[i] = rationalize(r.v[i] / r.v[am]);
    cand = canonical_direction(cand);
    bool matched = false;
    for (const FlagCertificate& f : out.flags)
      if (f.exact && f.v == cand) matched = true;
    if (matched || is_zero(cand)) continue;
    if (eigenflag_check_4d(w, cand)) {
      FlagCertificate c;
      c.exact = true;
      c.v = cand;
      out.flags.push_back(c);
    } else {
      // keep one numeric certificate per distinct direction
      bool dup = false;
      for (const FlagCertificate& f : out.flags) {
        if (f.exact) continue;
        double d = 0;
        for (int i = 0; i < 4; ++i) d += f.v_num[i] * r.v[i];
        if (std::fabs(d) > 1.0 - 1e-8) dup = true;
      }
      if (!dup) {
        FlagCertificate c;
        c.exact = false;
        c.v_num = to_unit_vecd(r.v);
        c.defect = r.f;
        out.flags.push_back(c);
      }
    }
  }

  std::vector<int> pattern = out.multiplicities;
  std::sort(pattern.begin(), pattern.end());

  // type B: complete the flag set from eigenspace plane intersections when
  // the frame and the descent did not already find all four
  int exact_count = 0;
  for (const FlagCertificate& f : out.flags) exact_count += f.exact ? 1 : 0;
  if (out.exact_spectrum && pattern == std::vector<int>{2, 2, 2} &&
      exact_count < 4) {
    std::vector<std::vector<PlaneCertificate>> eig_planes;
    for (std::size_t ei = 0; ei < out.exact_eigenvalues.size() && eig_planes.size() < 2;
         ++ei) {
      RMat shifted = w6;
      for (int i = 0; i < 6; ++i) shifted[i][i] -= out.exact_eigenvalues[ei];
      RMat ker = kernel(shifted);
      if (ker.size() != 2) continue;
      std::vector<PlaneCertificate> planes;
      for (const RVec& beta : decomposables_in_pencil(ker[0], ker[1])) {
        PlaneCertificate p = plane_of_bivector(beta);
        if (p.u.size() == 4) planes.push_back(p);
      }
      if (planes.size() == 2) eig_planes.push_back(planes);
    }
    if (eig_planes.size() == 2) {
      for (const PlaneCertificate& p : eig_planes[0])
        for (const PlaneCertificate& q : eig_planes[1]) {
          RVec dir = plane_intersection(p, q);
          if (dir.size() == 4 && !is_zero(dir)) add_exact(dir);
        }
    }
  }

  bool flags_exist = false;
  for (const FlagCertificate& f : out.flags)
    flags_exist = flags_exist || f.exact || f.defect < 1e-10;

  if (flags_exist) {
    if (pattern == std::vector<int>{2, 2, 2}) {
      out.tag = WeylTag::B;
      out.note = "three double eigenvalues; the eigenflag directions form an "
                 "orthogonal frame";
    } else if (pattern == std::vector<int>{2, 4}) {
      out.tag = WeylTag::C;
      // planes live in the 2-dimensional eigenspace
      if (out.exact_spectrum) {
        for (std::size_t ei = 0; ei < out.exact_eigenvalues.size(); ++ei) {
          if (out.multiplicities[ei] != 2) continue;
          RMat shifted = w6;
          for (int i = 0; i < 6; ++i)
            shifted[i][i] -= out.exact_eigenvalues[ei];
          RMat ker = kernel(shifted);
          if (ker.size() != 2) continue;
          for (const RVec& beta : decomposables_in_pencil(ker[0], ker[1])) {
            PlaneCertificate p = plane_of_bivector(beta);
            if (p.u.size() == 4) out.planes.push_back(p);
          }
        }
      }
      if (out.planes.size() == 2) {
        out.note = "eigenflag directions fill two orthogonal planes";
        // deterministic ordering
        auto key = [](const PlaneCertificate& p) {
          std::string s;
          for (const Rat& x : p.u) s += rat_str(x) + ",";
          return s;
        };
        if (key(out.planes[1]) < key(out.planes[0]))
          std::swap(out.planes[0], out.planes[1]);
      } else {
        out.note = "double eigenvalue found but plane extraction was "
                   "incomplete";
      }
    } else {
      out.tag = WeylTag::Inconclusive;
      out.note = "eigenflags exist but the multiplicity pattern matches no "
                 "known type";
    }
  } else if (out.min_defect > 1e-8) {
    out.tag = WeylTag::A;
    out.note = "no eigenflag found; every descent stalled above the 1e-8 "
               "floor";
  } else {
    out.tag = WeylTag::Inconclusive;
    out.note = "descent reached small defects but no certificate could be "
               "confirmed";
  }
  return out;
}

}  // namespace lcw
