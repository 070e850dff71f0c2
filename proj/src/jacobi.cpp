#include "lcw/jacobi.hpp"
#include "lcw/vec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lcw {

EigenResult sym_eigen_numeric(const std::vector<std::vector<double>>& m, double tol) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::fabs(m[i][j] - m[j][i]) > 0)
        throw std::invalid_argument("sym_eigen_numeric: matrix not symmetric");

  std::vector<std::vector<double>> a(m);
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p][q]));
    if (off <= tol) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) <= tol * 1e-3) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });

  EigenResult out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    out.values[i] = a[order[i]][order[i]];
    for (int k = 0; k < n; ++k) out.vectors[i][k] = v[k][order[i]];
  }
  return out;
}

EigenResult sym_eigen_numeric(const RMat& m, double tol) {
  if (!is_symmetric(m)) throw std::invalid_argument("sym_eigen_numeric: matrix not symmetric");
  int n = static_cast<int>(m.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = rat_double(m[i][j]);
  // Exact symmetry was already checked; force bitwise symmetry for the
  // floating-point copy.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[j][i] = d[i][j];
  return sym_eigen_numeric(d, tol);
}

}  // namespace lcw
