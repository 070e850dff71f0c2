#include "lcw/rat.hpp"
#include "lcw/vec.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lcw {

static BigInt parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits: '" + s + "'");
  for (; i < s.size(); ++i) {
    if (s[i] == '.' || s[i] == ',' || s[i] == 'e' || s[i] == 'E')
      throw std::invalid_argument("decimals forbidden; write 1/2 style rationals: '" + s + "'");
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad integer literal: '" + s + "'");
  }
  return BigInt(s);
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive: '" + s + "'");
  return Rat(num, den);
}

std::string rat_str(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

Rat rationalize(double x, long long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize non-finite value");
  bool neg = x < 0;
  double v = std::fabs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long long a = static_cast<long long>(fl);
    if (q1 != 0 && a > (max_den - q0) / q1) break;
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat r(p1, q1);
  return neg ? Rat(-r) : r;
}

bool rat_sqrt(const Rat& r, Rat& root) {
  if (r < 0) return false;
  BigInt n = numerator(r), d = denominator(r);
  BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  root = Rat(sn, sd);
  return true;
}

RVec rvec(int n) { return RVec(n, Rat(0)); }
RMat rmat(int rows, int cols) { return RMat(rows, RVec(cols, Rat(0))); }

RMat identity(int n) {
  RMat m = rmat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rat dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec add(const RVec& a, const RVec& b) {
  RVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RVec sub(const RVec& a, const RVec& b) {
  RVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RVec scale(const Rat& k, const RVec& a) {
  RVec out(a);
  for (auto& v : out) v *= k;
  return out;
}

bool is_zero(const RVec& a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

bool is_zero(const RMat& m) {
  for (const auto& row : m)
    if (!is_zero(row)) return false;
  return true;
}

RMat mat_add(const RMat& a, const RMat& b) {
  RMat out(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

RMat mat_sub(const RMat& a, const RMat& b) {
  RMat out(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

RMat mat_scale(const Rat& k, const RMat& m) {
  RMat out(m);
  for (auto& row : out)
    for (auto& v : row) v *= k;
  return out;
}

RMat mat_mul(const RMat& a, const RMat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  RMat out = rmat(static_cast<int>(n), static_cast<int>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RVec mat_vec(const RMat& m, const RVec& v) {
  RVec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

RMat transpose(const RMat& m) {
  RMat out = rmat(static_cast<int>(m[0].size()), static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

bool is_symmetric(const RMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

bool is_skew(const RMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (m[i][j] != -m[j][i]) return false;
  return true;
}

RMat skew_outer(const RVec& u, const RVec& v) {
  int n = static_cast<int>(u.size());
  RMat out = rmat(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) out[j][k] = u[j] * v[k] - u[k] * v[j];
  return out;
}

Rat det(RMat m) {
  int n = static_cast<int>(m.size());
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) { std::swap(m[piv], m[col]); d = -d; }
    d *= m[col][col];
    Rat inv = Rat(1) / m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] * inv;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

// Row-reduce in place; returns rank and leaves m in reduced echelon form.
static int rref(RMat& m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

int rank(RMat m) { return rref(m); }

RMat kernel(const RMat& m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  RMat red(m);
  int rk = rref(red);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rk; ++r) {
    for (int c = 0; c < cols; ++c)
      if (red[r][c] != 0) { pivot_col.push_back(c); is_pivot[c] = true; break; }
  }
  RMat ker;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RVec v = rvec(cols);
    v[c] = 1;
    for (int r = 0; r < rk; ++r) v[pivot_col[r]] = -red[r][c];
    ker.push_back(std::move(v));
  }
  return ker;
}

RMat inverse(const RMat& m) {
  int n = static_cast<int>(m.size());
  RMat aug = rmat(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  if (rref(aug) != n) throw std::invalid_argument("inverse: singular matrix");
  RMat out = rmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

}  // namespace lcw
