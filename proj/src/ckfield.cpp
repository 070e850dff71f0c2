#include "lcw/ckfield.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lcw {
namespace {

RVec basis_vec(int n, int i) {
  RVec e = rvec(n);
  e[i] = 1;
  return e;
}

// Stored-convention 2-form of the skew matrix B: entry (j,k) is B[k][j],
// matching dX = alpha ^ p + B on the quadratic field.
TensorTable two_form_of_B(const RMat& B) {
  return two_form_from_skew(transpose(B));
}

// dX at the point x, stored convention: entry (j,k) = alpha_j x_k - alpha_k x_j + B[k][j].
TensorTable dX_at(const CkField& X, const RVec& x) {
  RMat m = skew_outer(X.alpha, x);
  m = mat_add(m, transpose(X.B));
  return two_form_from_skew(m);
}

// Gradient of |X|^2 at x: 2 J X with J_jk = d_j X_k.
RVec grad_norm_sq(const CkField& X, const RVec& x) {
  const int n = X.n;
  Rat ax = dot(X.alpha, x);
  RMat J = rmat(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      J[j][k] = X.alpha[j] * x[k] - X.alpha[k] * x[j] + X.B[k][j];
      if (j == k) J[j][k] += ax + X.c;
    }
  return scale(2, mat_vec(J, evaluate(X, x)));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void CkField::validate() const {
  require(n >= 3, "ckf: dimension must be at least 3");
  require(static_cast<int>(alpha.size()) == n, "ckf: alpha has wrong length");
  require(static_cast<int>(gamma.size()) == n, "ckf: gamma has wrong length");
  require(static_cast<int>(B.size()) == n, "ckf: B has wrong shape");
  for (const auto& row : B) require(static_cast<int>(row.size()) == n, "ckf: B has wrong shape");
  require(is_skew(B), "ckf: B must be skew-symmetric");
  require(!(is_zero(alpha) && c == 0 && is_zero(B) && is_zero(gamma)),
          "ckf: zero tuple is not a field");
}

std::string ckfield_str(const CkField& X) {
  std::ostringstream os;
  auto vec = [&](const RVec& v) {
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
    os << ")";
  };
  os << "(alpha=";
  vec(X.alpha);
  os << ", c=" << rat_str(X.c) << ", B=[";
  for (int j = 0; j < X.n; ++j) {
    if (j) os << ";";
    for (int k = 0; k < X.n; ++k) os << (k ? "," : "") << rat_str(X.B[j][k]);
  }
  os << "], gamma=";
  vec(X.gamma);
  os << ")";
  return os.str();
}

std::string move_str(const ConformalMove& m) {
  std::ostringstream os;
  if (const auto* t = std::get_if<Translation>(&m)) {
    os << "translate(";
    for (size_t i = 0; i < t->x0.size(); ++i) os << (i ? "," : "") << rat_str(t->x0[i]);
    os << ")";
  } else if (const auto* d = std::get_if<Dilation>(&m)) {
    os << "dilate(" << rat_str(d->r) << ")";
  } else if (std::get_if<Rotation>(&m)) {
    os << "rotate";
  } else if (std::get_if<Inversion>(&m)) {
    os << "invert";
  } else if (const auto* s = std::get_if<Scalar>(&m)) {
    os << "scale(" << rat_str(s->k) << ")";
  }
  return os.str();
}

RVec evaluate(const CkField& X, const RVec& x) {
  require(static_cast<int>(x.size()) == X.n, "evaluate: point has wrong length");
  Rat ax = dot(X.alpha, x);
  Rat xx = dot(x, x);
  RVec v = scale(ax, x);
  v = sub(v, scale(xx / 2, X.alpha));
  v = add(v, scale(X.c, x));
  v = add(v, mat_vec(X.B, x));
  v = add(v, X.gamma);
  return v;
}

KillingSelftest conformal_killing_selftest(const CkField& X) {
  X.validate();
  const int n = X.n;
  // The field is quadratic, so central differences with step 1 give the
  // Jacobian exactly. Check DX + DX^T = lambda(p) I at a spread of rational
  // points.
  KillingSelftest out;
  out.passes = true;
  std::vector<RVec> points;
  points.push_back(rvec(n));
  for (int i = 0; i < n; ++i) points.push_back(basis_vec(n, i));
  RVec mixed = rvec(n);
  for (int i = 0; i < n; ++i) mixed[i] = Rat(i + 1, 7);
  points.push_back(mixed);
  for (const RVec& p : points) {
    Rat lambda = 2 * dot(X.alpha, p) + 2 * X.c;
    RMat J = rmat(n, n);
    for (int j = 0; j < n; ++j) {
      RVec pp = p, pm = p;
      pp[j] += 1;
      pm[j] -= 1;
      RVec diff = sub(evaluate(X, pp), evaluate(X, pm));
      for (int k = 0; k < n; ++k) J[j][k] = diff[k] / 2;
    }
    for (int j = 0; j < n && out.passes; ++j)
      for (int k = 0; k < n && out.passes; ++k) {
        Rat expect = (j == k) ? lambda : Rat(0);
        if (J[j][k] + J[k][j] != expect) out.passes = false;
      }
  }
  out.lambda_linear = scale(2, X.alpha);
  out.lambda_const = 2 * X.c;
  return out;
}

LcwConditions lcw_conditions(const CkField& X) {
  X.validate();
  LcwConditions out;
  out.b_wedge_gamma = wedge(two_form_of_B(X.B), one_form(X.gamma));
  RMat m = mat_sub(mat_scale(X.c, transpose(X.B)), skew_outer(X.alpha, X.gamma));
  out.cB_minus_alpha_wedge_gamma = two_form_from_skew(m);
  out.pass = out.b_wedge_gamma.is_zero() && out.cB_minus_alpha_wedge_gamma.is_zero();
  return out;
}

CkField act(const CkField& X, const ConformalMove& m) {
  X.validate();
  CkField Y = X;
  if (const auto* t = std::get_if<Translation>(&m)) {
    require(static_cast<int>(t->x0.size()) == X.n, "act: translation has wrong length");
    const RVec& x0 = t->x0;
    Rat ax0 = dot(X.alpha, x0);
    Y.c = X.c - ax0;
    Y.B = mat_add(X.B, skew_outer(X.alpha, x0));
    RVec g = add(X.gamma, scale(ax0, x0));
    g = sub(g, scale(dot(x0, x0) / 2, X.alpha));
    g = sub(g, scale(X.c, x0));
    g = sub(g, mat_vec(X.B, x0));
    Y.gamma = g;
  } else if (const auto* d = std::get_if<Dilation>(&m)) {
    require(d->r != 0, "act: dilation scale must be nonzero");
    Y.alpha = scale(Rat(1) / d->r, X.alpha);
    Y.gamma = scale(d->r, X.gamma);
  } else if (const auto* r = std::get_if<Rotation>(&m)) {
    require(static_cast<int>(r->R.size()) == X.n, "act: rotation has wrong shape");
    require(mat_mul(transpose(r->R), r->R) == identity(X.n),
            "act: rotation matrix must be orthogonal");
    Y.alpha = mat_vec(transpose(r->R), X.alpha);
    Y.B = mat_mul(transpose(r->R), mat_mul(X.B, r->R));
    Y.gamma = mat_vec(transpose(r->R), X.gamma);
  } else if (std::get_if<Inversion>(&m)) {
    Y.alpha = scale(-2, X.gamma);
    Y.c = -X.c;
    Y.gamma = scale(Rat(-1, 2), X.alpha);
  } else if (const auto* s = std::get_if<Scalar>(&m)) {
    require(s->k != 0, "act: scalar must be nonzero");
    Y.alpha = scale(s->k, X.alpha);
    Y.c = s->k * X.c;
    Y.B = mat_scale(s->k, X.B);
    Y.gamma = scale(s->k, X.gamma);
  }
  return Y;
}

Rat LcwFamily::gamma_norm_sq() const { return dot(gamma, gamma); }
Rat LcwFamily::sigma_norm_sq() const { return dot(sigma, sigma); }

CkField canonical_tuple(const LcwFamily& f) {
  CkField X;
  X.n = f.n;
  X.alpha = rvec(f.n);
  X.B = rmat(f.n, f.n);
  X.gamma = rvec(f.n);
  switch (f.id) {
    case 1:
      X.gamma = f.gamma;
      break;
    case 2:
      X.c = 1;
      break;
    case 3:
      X.B = skew_outer(f.gamma, f.sigma);
      break;
    case 4:
      X.alpha = f.gamma;
      break;
    case 5:
      X.alpha = f.gamma;
      X.gamma = scale(f.s / 2, f.gamma);
      break;
    case 6:
      X.alpha = f.gamma;
      X.gamma = scale(-f.s / 2, f.gamma);
      break;
    default:
      throw std::invalid_argument("canonical_tuple: family id out of range");
  }
  // a*psi + b has field X/a.
  Rat inv_a = Rat(1) / f.a;
  X.alpha = scale(inv_a, X.alpha);
  X.c = inv_a * X.c;
  X.B = mat_scale(inv_a, X.B);
  X.gamma = scale(inv_a, X.gamma);
  return X;
}

namespace {

// Factor a decomposable skew matrix as B = u ^ w given a nonzero vector u
// with B ^ u = 0 (so u lies in the plane of B), with w orthogonal to u.
// Returns false when B != u ^ w after all, which means the caller's input
// was not reducible.
bool factor_plane(const RMat& B, const RVec& u, RVec& w) {
  Rat uu = dot(u, u);
  // (u^w) u = u (w.u) - w (u.u) = -|u|^2 w  when w is orthogonal to u.
  w = scale(Rat(-1) / uu, mat_vec(B, u));
  return B == skew_outer(u, w);
}

struct Reducer {
  CkField cur;
  std::vector<ConformalMove> chain;

  void apply(const ConformalMove& m) {
    cur = act(cur, m);
    chain.push_back(m);
    if (!lcw_conditions(cur).pass)
      throw std::invalid_argument(
          "reduce_to_family: conditions fail after " + move_str(m) +
          "; tuple is not a limiting-weight field");
  }
};

}  // namespace

Reduction reduce_to_family(const CkField& X0) {
  X0.validate();
  require(lcw_conditions(X0).pass, "reduce_to_family: tuple fails the closedness conditions");
  const int n = X0.n;

  Reducer rd{X0, {}};
  LcwFamily fam;
  fam.n = n;
  fam.sigma = rvec(n);

  if (is_zero(rd.cur.alpha)) {
    if (is_zero(rd.cur.B)) {
      if (rd.cur.c == 0) {
        fam.id = 1;
        fam.gamma = rd.cur.gamma;
      } else {
        if (!is_zero(rd.cur.gamma))
          rd.apply(Translation{scale(Rat(1) / rd.cur.c, rd.cur.gamma)});
        fam.id = 2;
        fam.gamma = rvec(n);
        fam.a = Rat(1) / rd.cur.c;
      }
    } else {
      // B != 0 forces c = 0 through cB = alpha ^ gamma = 0.
      RVec g = rd.cur.gamma, s;
      if (is_zero(g)) {
        // (0,0,B,0) is already a model tuple when B is a plane; factor it in
        // place starting from its first nonzero column.
        int i = 0;
        while (is_zero(mat_vec(rd.cur.B, basis_vec(n, i)))) ++i;
        g = mat_vec(rd.cur.B, basis_vec(n, i));
        require(factor_plane(rd.cur.B, g, s),
                "reduce_to_family: B is not a plane; tuple is not a "
                "limiting-weight field");
      } else {
        require(factor_plane(rd.cur.B, g, s),
                "reduce_to_family: B does not factor through gamma; tuple is "
                "not a limiting-weight field");
        rd.apply(Translation{scale(Rat(1) / dot(s, s), s)});
      }
      fam.id = 3;
      fam.gamma = g;
      fam.sigma = s;
    }
  } else {
    if (rd.cur.c != 0)
      rd.apply(Translation{scale(rd.cur.c / dot(rd.cur.alpha, rd.cur.alpha), rd.cur.alpha)});
    if (is_zero(rd.cur.gamma) && !is_zero(rd.cur.B)) {
      // Make gamma nonzero by translating orthogonally to alpha: scan scaled
      // basis vectors k e_i with alpha_i = 0 first, then the in-plane
      // directions alpha_j e_i - alpha_i e_j.
      std::vector<RVec> dirs;
      for (int i = 0; i < n; ++i)
        if (rd.cur.alpha[i] == 0) dirs.push_back(basis_vec(n, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RVec v = sub(scale(rd.cur.alpha[j], basis_vec(n, i)),
                       scale(rd.cur.alpha[i], basis_vec(n, j)));
          if (!is_zero(v)) dirs.push_back(v);
        }
      bool done = false;
      for (int k = 1; k <= 4 && !done; ++k)
        for (const RVec& v : dirs) {
          CkField probe = act(rd.cur, Translation{scale(k, v)});
          if (!is_zero(probe.gamma) && lcw_conditions(probe).pass) {
            rd.apply(Translation{scale(k, v)});
            done = true;
            break;
          }
        }
      require(done,
              "reduce_to_family: no orthogonal translation produces gamma != 0; "
              "tuple is not a limiting-weight field");
    }
    if (is_zero(rd.cur.gamma)) {
      // (alpha, 0, 0, 0) is already the model tuple.
      fam.id = 4;
      fam.gamma = rd.cur.alpha;
    } else {
      // alpha ^ gamma = 0 with alpha != 0 forces gamma = r alpha.
      Rat aa = dot(rd.cur.alpha, rd.cur.alpha);
      Rat r = dot(rd.cur.gamma, rd.cur.alpha) / aa;
      require(rd.cur.gamma == scale(r, rd.cur.alpha),
              "reduce_to_family: gamma not parallel to alpha; tuple is not a "
              "limiting-weight field");
      if (!is_zero(rd.cur.B)) {
        RVec s;
        require(factor_plane(rd.cur.B, rd.cur.alpha, s),
                "reduce_to_family: B does not factor through alpha; tuple is "
                "not a limiting-weight field");
        rd.apply(Translation{scale(-1, s)});
        r = dot(rd.cur.gamma, rd.cur.alpha) / aa;
      }
      if (r == 0) {
        fam.id = 4;
        fam.gamma = rd.cur.alpha;
      } else if (r > 0) {
        fam.id = 5;
        fam.gamma = rd.cur.alpha;
        fam.s = 2 * r;
      } else {
        fam.id = 6;
        fam.gamma = rd.cur.alpha;
        fam.s = -2 * r;
      }
    }
  }

  // Exact re-application: replaying the chain from the input must land on the
  // family's tuple.
  CkField replay = X0;
  for (const auto& m : rd.chain) replay = act(replay, m);
  require(replay == canonical_tuple(fam), "reduce_to_family: re-application check failed");
  return Reduction{fam, rd.chain};
}

int orbit_of_family(int family_id) {
  switch (family_id) {
    case 1:
    case 4:
      return 1;
    case 2:
    case 6:
      return 2;
    case 3:
    case 5:
      return 3;
    default:
      throw std::invalid_argument("orbit_of_family: family id out of range");
  }
}

int orbit_class(const CkField& X) { return orbit_of_family(reduce_to_family(X).family.id); }

double psi_evaluate(const LcwFamily& f, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != f.n)
    throw std::invalid_argument("psi_evaluate: point has wrong length");
  auto dotd = [&](const RVec& v) {
    double s = 0;
    for (int i = 0; i < f.n; ++i) s += rat_double(v[i]) * x[i];
    return s;
  };
  double xx = 0;
  for (double xi : x) xx += xi * xi;
  double g2 = rat_double(f.gamma_norm_sq());
  double psi = 0;
  switch (f.id) {
    case 1:
      psi = dotd(f.gamma) / g2;
      break;
    case 2:
      if (xx == 0) throw std::domain_error("psi_evaluate: log|x| undefined at the origin");
      psi = 0.5 * std::log(xx);
      break;
    case 3: {
      double u = dotd(f.gamma) / std::sqrt(g2);
      double s2 = rat_double(f.sigma_norm_sq());
      double v = dotd(f.sigma) / std::sqrt(s2);
      if (v == 0) throw std::domain_error("psi_evaluate: on the plane sigma.x = 0");
      psi = std::atan(u / v) / std::sqrt(g2 * s2);
      break;
    }
    case 4:
      if (xx == 0) throw std::domain_error("psi_evaluate: pole at the origin");
      psi = -2.0 * dotd(f.gamma) / (g2 * xx);
      break;
    case 5: {
      double s = rat_double(f.s);
      double den = xx / s - 1.0;
      if (den == 0) throw std::domain_error("psi_evaluate: on the sphere |x|^2 = s");
      double num = -2.0 * dotd(f.gamma) / std::sqrt(g2) / std::sqrt(s);
      psi = std::atan(num / den) / (std::sqrt(s) * std::sqrt(g2));
      break;
    }
    case 6: {
      double s = rat_double(f.s);
      double den = xx / s + 1.0;
      double num = -2.0 * dotd(f.gamma) / std::sqrt(g2) / std::sqrt(s);
      double ratio = num / den;
      if (ratio <= -1.0 || ratio >= 1.0)
        throw std::domain_error("psi_evaluate: arctanh argument out of range");
      psi = std::atanh(ratio) / (std::sqrt(s) * std::sqrt(g2));
      break;
    }
    default:
      throw std::invalid_argument("psi_evaluate: family id out of range");
  }
  return rat_double(f.a) * psi + rat_double(f.b);
}

namespace {

// Exact gradient of psi (without the affine a,b) at a rational point. The
// closed forms below are rational in x even for families 5/6: the square
// roots cancel between the arctan prefactor and its argument. Returns false
// on the singular locus.
bool grad_psi_exact(const LcwFamily& f, const RVec& x, RVec& grad) {
  const int n = f.n;
  Rat xx = dot(x, x);
  Rat g2 = dot(f.gamma, f.gamma);
  Rat U = dot(f.gamma, x);
  switch (f.id) {
    case 1:
      grad = scale(Rat(1) / g2, f.gamma);
      return true;
    case 2:
      if (xx == 0) return false;
      grad = scale(Rat(1) / xx, x);
      return true;
    case 3: {
      Rat s2 = dot(f.sigma, f.sigma);
      Rat V = dot(f.sigma, x);
      Rat den = s2 * U * U + g2 * V * V;
      if (den == 0) return false;
      grad = scale(Rat(1) / den, sub(scale(V, f.gamma), scale(U, f.sigma)));
      return true;
    }
    case 4: {
      if (xx == 0) return false;
      RVec v = sub(scale(xx, f.gamma), scale(2 * U, x));
      grad = scale(Rat(-2) / (g2 * xx * xx), v);
      return true;
    }
    case 5:
    case 6: {
      Rat D = xx / f.s + (f.id == 5 ? Rat(-1) : Rat(1));
      Rat N2 = 4 * U * U / (g2 * f.s);
      Rat den = D * D;
      den += (f.id == 5) ? N2 : -N2;
      if (den == 0) return false;
      RVec v = sub(scale(D, f.gamma), scale(2 * U / f.s, x));
      grad = scale(Rat(-2) / (g2 * f.s) / den, v);
      return true;
    }
    default:
      throw std::invalid_argument("grad_psi_exact: family id out of range");
  }
}

}  // namespace

CorrespondenceResult verify_correspondence(const LcwFamily& f,
                                           const std::vector<RVec>& samples) {
  CorrespondenceResult out;
  Rat sqrt_s;
  out.exact = f.id <= 4 || rat_sqrt(f.s, sqrt_s);
  CkField tuple = canonical_tuple(f);
  for (const RVec& p : samples) {
    RVec expected = evaluate(tuple, p);
    if (out.exact) {
      RVec grad;
      if (!grad_psi_exact(f, p, grad)) {
        ++out.skipped;
        continue;
      }
      grad = scale(f.a, grad);
      Rat gg = dot(grad, grad);
      if (gg == 0) {
        ++out.skipped;
        continue;
      }
      RVec field = scale(Rat(1) / gg, grad);
      for (int i = 0; i < f.n; ++i) {
        double d = std::abs(rat_double(field[i] - expected[i]));
        if (d > out.max_residual) out.max_residual = d;
      }
    } else {
      const double h = 1e-5;
      std::vector<double> xd(f.n);
      for (int i = 0; i < f.n; ++i) xd[i] = rat_double(p[i]);
      std::vector<double> grad(f.n);
      bool ok = true;
      try {
        for (int i = 0; i < f.n && ok; ++i) {
          std::vector<double> xp = xd, xm = xd;
          xp[i] += h;
          xm[i] -= h;
          grad[i] = (psi_evaluate(f, xp) - psi_evaluate(f, xm)) / (2 * h);
        }
      } catch (const std::domain_error&) {
        ok = false;
      }
      if (!ok) {
        ++out.skipped;
        continue;
      }
      double gg = 0;
      for (double gi : grad) gg += gi * gi;
      if (gg == 0) {
        ++out.skipped;
        continue;
      }
      for (int i = 0; i < f.n; ++i) {
        double d = std::abs(grad[i] / gg - rat_double(expected[i]));
        if (d > out.max_residual) out.max_residual = d;
      }
    }
  }
  return out;
}

ClosednessChecks closedness_checks(const CkField& X, const std::vector<RVec>& samples) {
  X.validate();
  ClosednessChecks out{true, true, true};
  for (const RVec& p : samples) {
    RVec Xp = evaluate(X, p);
    require(!is_zero(Xp), "closedness_checks: field vanishes at a sample");
    TensorTable dX = dX_at(X, p);
    TensorTable Xf = one_form(Xp);
    TensorTable dn = one_form(grad_norm_sq(X, p));
    if (!wedge(dX, Xf).is_zero()) out.eq1 = false;
    if (!wedge(dX, dn).is_zero()) out.eq2 = false;
    Rat x2 = dot(Xp, Xp);
    if (wedge(dn, Xf).frobenius_sq() != x2 * x2 * dX.frobenius_sq()) out.eq3 = false;
  }
  return out;
}

}  // namespace lcw
