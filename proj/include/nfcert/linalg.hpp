#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "nfcert/error.hpp"
#include "nfcert/rational.hpp"

namespace nfcert {

using Complex = std::complex<double>;

template <class F>
using Matrix = std::vector<std::vector<F>>;

using DMatrix = Matrix<double>;
using CMatrix = Matrix<Complex>;
using CVector = std::vector<Complex>;

namespace linalg {

// Pivot-size functor per scalar kind.  For exact fractions any nonzero entry
// is an acceptable pivot, so magnitude only distinguishes zero from nonzero
// and elimination stays deterministic (first eligible entry wins).
inline double mag(double x) { return std::abs(x); }
inline double mag(const Complex& x) { return std::abs(x); }
inline double mag(const Rational& x) { return x == 0 ? 0.0 : 1.0; }

template <class F>
double max_abs(const Matrix<F>& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (const auto& x : row) m = std::max(m, mag(x));
  return m;
}

template <class F>
Matrix<F> identity(int n) {
  Matrix<F> a(n, std::vector<F>(n, F(0)));
  for (int i = 0; i < n; ++i) a[i][i] = F(1);
  return a;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = static_cast<int>(b.empty() ? 0 : b[0].size());
  Matrix<F> c(n, std::vector<F>(m, F(0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (mag(a[i][l]) == 0.0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

template <class F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& x) {
  std::vector<F> y(a.size(), F(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  if (a.empty()) return {};
  Matrix<F> t(a[0].size(), std::vector<F>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <class F>
F trace(const Matrix<F>& a) {
  F s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

// Row-reduces in place without column exchanges; pivot in each column is the
// eligible entry of largest magnitude (ties keep the earliest row, so the
// exact-field path is deterministic).  Returns the pivot columns.
template <class F>
std::vector<int> rref_rows(Matrix<F>& a, double tol = 0.0) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    double best_mag = tol;
    for (int i = r; i < rows; ++i)
      if (mag(a[i][c]) > best_mag) { best = i; best_mag = mag(a[i][c]); }
    if (best < 0) continue;
    std::swap(a[r], a[best]);
    F inv = F(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] = inv * a[r][j];
    a[r][c] = F(1);
    for (int i = 0; i < rows; ++i) {
      if (i == r || mag(a[i][c]) == 0.0) continue;
      F f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      a[i][c] = F(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Nullspace basis in the standard form induced by rref_rows: one vector per
// free column, with a 1 in that coordinate.  tol separates rank decisions for
// floating kinds; exact kinds pass 0.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> a, double tol = 0.0) {
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivots = rref_rows(a, tol);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, F(0));
    v[f] = F(1);
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F(0) - a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Full pivoting (rows and columns) for floating-point nullspaces: the largest
// remaining entry is promoted at every step, which keeps eigenvector
// extraction stable when a column is nearly degenerate.
template <class F>
std::vector<std::vector<F>> nullspace_fullpivot(Matrix<F> a, double tol) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> colperm(cols);
  std::iota(colperm.begin(), colperm.end(), 0);
  int r = 0;
  while (r < rows && r < cols) {
    int bi = -1, bj = -1;
    double bm = tol;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j)
        if (mag(a[i][j]) > bm) { bi = i; bj = j; bm = mag(a[i][j]); }
    if (bi < 0) break;
    std::swap(a[r], a[bi]);
    if (bj != r) {
      for (int i = 0; i < rows; ++i) std::swap(a[i][r], a[i][bj]);
      std::swap(colperm[r], colperm[bj]);
    }
    F inv = F(1) / a[r][r];
    for (int j = r; j < cols; ++j) a[r][j] = inv * a[r][j];
    a[r][r] = F(1);
    for (int i = 0; i < rows; ++i) {
      if (i == r || mag(a[i][r]) == 0.0) continue;
      F f = a[i][r];
      for (int j = r; j < cols; ++j) a[i][j] -= f * a[r][j];
      a[i][r] = F(0);
    }
    ++r;
  }
  std::vector<std::vector<F>> basis;
  for (int f = r; f < cols; ++f) {
    std::vector<F> v(cols, F(0));
    v[colperm[f]] = F(1);
    for (int k = 0; k < r; ++k) v[colperm[k]] = F(0) - a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves the square system A x = b with partial pivoting.
template <class F>
std::vector<F> solve(Matrix<F> a, std::vector<F> b, double tol = 0.0) {
  int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int best = -1;
    double bm = tol;
    for (int i = c; i < n; ++i)
      if (mag(a[i][c]) > bm) { best = i; bm = mag(a[i][c]); }
    if (best < 0)
      throw Error(ErrorCode::IllConditioned, "singular linear system");
    std::swap(a[c], a[best]);
    std::swap(b[c], b[best]);
    F inv = F(1) / a[c][c];
    for (int j = c; j < n; ++j) a[c][j] = inv * a[c][j];
    b[c] = inv * b[c];
    for (int i = 0; i < n; ++i) {
      if (i == c || mag(a[i][c]) == 0.0) continue;
      F f = a[i][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
      a[i][c] = F(0);
    }
  }
  return b;
}

template <class F>
int rank(Matrix<F> a, double tol = 0.0) {
  return static_cast<int>(rref_rows(a, tol).size());
}

// Conjugate-first inner product <u, v> = sum conj(u_k) v_k.
inline Complex inner(const CVector& u, const CVector& v) {
  Complex s(0.0);
  for (size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

inline double norm2(const CVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Max row-sum norm.
template <class F>
double inf_norm(const Matrix<F>& a) {
  double best = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (const auto& x : row) s += mag(x);
    best = std::max(best, s);
  }
  return best;
}

CMatrix to_complex(const DMatrix& a);

}  // namespace linalg
}  // namespace nfcert
