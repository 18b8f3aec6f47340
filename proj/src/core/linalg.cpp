#include "core/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace convexval {

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vadd(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vneg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vscale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vec vzero(int n) { return Vec(static_cast<std::size_t>(n), Rat(0)); }

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Mat mat_identity(int n) {
  Mat m(static_cast<std::size_t>(n), vzero(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  Mat r(m, Vec(n, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    assert(a[i].size() == k);
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < n; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  }
  return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

Mat mat_transpose(const Mat& a) {
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  Mat r(n, Vec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns. Destroys `a`.
std::vector<int> echelon(Mat& a) {
  std::vector<int> pivots;
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[row], a[p]);
    const Rat inv = 1 / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

Rat mat_det(Mat a) {
  const std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      std::swap(a[col], a[p]);
      det = -det;
    }
    det *= a[col][col];
    const Rat inv = 1 / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rat f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<Mat> mat_inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat aug(n, Vec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    assert(a[i].size() == n);
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = echelon(aug);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

int mat_rank(Mat a) { return static_cast<int>(echelon(a).size()); }

std::optional<Vec> solve_linear(Mat a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = echelon(a);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<Vec> nullspace(Mat a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto pivots = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(n, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -a[r][free_col];
    basis.push_back(primitive_integer_direction(v));
  }
  return basis;
}

Vec primitive_integer_direction(const Vec& v) {
  mpz_class lcm_den = 1;
  for (const Rat& q : v) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    lcm_den = l;
  }
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const Rat& q : v) {
    mpz_class z = q.get_num() * (lcm_den / q.get_den());
    mpz_class ng;
    mpz_gcd(ng.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    g = ng;
    ints.push_back(z);
  }
  assert(g != 0 && "primitive direction of zero vector");
  int lead_sign = 0;
  for (const auto& z : ints) {
    if (z != 0) {
      lead_sign = sgn(z);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

}  // namespace convexval
