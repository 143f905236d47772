#pragma once
#include <map>
#include <utility>
#include <vector>

#include "solvlat/quadnum.hpp"

namespace solvlat {

// Field helpers so the elimination templates work over both Rational and QuadNum.
inline bool fld_is_zero(const Rational& x) { return x == 0; }
inline bool fld_is_zero(const QuadNum& x) { return x.is_zero(); }
inline Rational fld_div(const Rational& a, const Rational& b) {
  if (b == 0) throw DivisionByZero("rational division by zero");
  return a / b;
}
inline QuadNum fld_div(const QuadNum& a, const QuadNum& b) { return a / b; }

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  T& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat zeros(int r, int c) { return Mat(r, c); }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols != b.rows) throw DimensionMismatch("matrix product shape");
  Mat<T> c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("matrix sum shape");
  Mat<T> c(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
  return c;
}

template <class T>
Mat<T> mat_sub(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("matrix difference shape");
  Mat<T> c(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
  return c;
}

template <class T, class S>
Mat<T> mat_scale(const S& k, const Mat<T>& a) {
  Mat<T> c(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = k * a.data[i];
  return c;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
  Mat<T> t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
bool mat_is_zero(const Mat<T>& a) {
  for (const auto& x : a.data)
    if (!(x == T(0))) return false;
  return true;
}

template <class From, class To>
Mat<To> mat_cast(const Mat<From>& a) {
  Mat<To> c(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = To(a.data[i]);
  return c;
}

template <class F>
struct RrefResult {
  Mat<F> R;
  std::vector<int> pivot_cols;  // pivot column of each pivot row, in order
  int rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class F>
RrefResult<F> rref(Mat<F> A) {
  RrefResult<F> res;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int piv = -1;
    for (int i = r; i < A.rows; ++i)
      if (!fld_is_zero(A(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A(piv, j), A(r, j));
    const F inv = fld_div(F(1), A(r, c));
    for (int j = c; j < A.cols; ++j) A(r, j) = inv * A(r, j);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || fld_is_zero(A(i, c))) continue;
      const F f = A(i, c);
      for (int j = c; j < A.cols; ++j) A(i, j) = A(i, j) - f * A(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.R = std::move(A);
  res.rank = r;
  return res;
}

template <class F>
int mat_rank(const Mat<F>& A) {
  return rref(A).rank;
}

// Kernel basis from the RREF: one vector per free column, in free-column
// order, each normalized so its first nonzero coordinate is 1.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Mat<F>& A) {
  const auto rr = rref(A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(A.cols, F(0));
    v[c] = F(1);
    for (int p = 0; p < rr.rank; ++p) v[rr.pivot_cols[p]] = -rr.R(p, c);
    int first = -1;
    for (int j = 0; j < A.cols; ++j)
      if (!fld_is_zero(v[j])) {
        first = j;
        break;
      }
    const F inv = fld_div(F(1), v[first]);
    for (auto& x : v) x = inv * x;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve A X = B for the unique X; throws SingularSystem when A is not
// invertible or the system is inconsistent.
template <class F>
Mat<F> solve_unique(const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows) throw DimensionMismatch("solve shape");
  Mat<F> aug(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    for (int j = 0; j < B.cols; ++j) aug(i, A.cols + j) = B(i, j);
  }
  const auto rr = rref(std::move(aug));
  if (rr.rank != A.cols) throw SingularSystem("coefficient matrix is rank-deficient");
  for (int p = 0; p < rr.rank; ++p)
    if (rr.pivot_cols[p] >= A.cols) throw SingularSystem("inconsistent linear system");
  for (int i = rr.rank; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j)
      if (!fld_is_zero(rr.R(i, A.cols + j))) throw SingularSystem("inconsistent linear system");
  Mat<F> X(A.cols, B.cols);
  for (int p = 0; p < rr.rank; ++p)
    for (int j = 0; j < B.cols; ++j) X(rr.pivot_cols[p], j) = rr.R(p, A.cols + j);
  return X;
}

template <class F>
Mat<F> mat_inverse(const Mat<F>& A) {
  if (A.rows != A.cols) throw DimensionMismatch("inverse of non-square matrix");
  return solve_unique(A, Mat<F>::identity(A.rows));
}

template <class F>
F mat_det(Mat<F> A) {
  if (A.rows != A.cols) throw DimensionMismatch("determinant of non-square matrix");
  F det(1);
  for (int c = 0; c < A.cols; ++c) {
    int piv = -1;
    for (int i = c; i < A.rows; ++i)
      if (!fld_is_zero(A(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return F(0);
    if (piv != c) {
      for (int j = 0; j < A.cols; ++j) std::swap(A(piv, j), A(c, j));
      det = -det;
    }
    det = det * A(c, c);
    const F inv = fld_div(F(1), A(c, c));
    for (int i = c + 1; i < A.rows; ++i) {
      if (fld_is_zero(A(i, c))) continue;
      const F f = inv * A(i, c);
      for (int j = c; j < A.cols; ++j) A(i, j) = A(i, j) - f * A(c, j);
    }
  }
  return det;
}

// --- vector helpers -------------------------------------------------------

template <class T>
std::vector<T> vec_add(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector sum length");
  std::vector<T> z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

template <class T, class S>
std::vector<T> vec_scale(const S& k, const std::vector<T>& x) {
  std::vector<T> z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = k * x[i];
  return z;
}

template <class T>
Mat<T> rows_to_mat(const std::vector<std::vector<T>>& rows) {
  if (rows.empty()) return Mat<T>(0, 0);
  Mat<T> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols) throw DimensionMismatch("ragged rows");
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
Mat<T> cols_to_mat(const std::vector<std::vector<T>>& cols) {
  return transpose(rows_to_mat(cols));
}

// Split a Q(sqrt(D)) matrix into rational coordinates: columns [r-part | s-part].
inline Mat<Rational> split_surd_cols(const Mat<QuadNum>& A) {
  Mat<Rational> S(A.rows, 2 * A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      S(i, j) = A(i, j).r;
      S(i, A.cols + j) = A(i, j).s;
    }
  return S;
}

// --- sparse exact elimination ----------------------------------------------

// Row-sparse rational matrix; enough for rank/kernel-dimension of the large,
// +-1-coefficient differentials at higher d.
struct SparseMatQ {
  int rows = 0, cols = 0;
  std::vector<std::map<int, Rational>> row;

  SparseMatQ(int r, int c) : rows(r), cols(c), row(r) {}

  void add(int i, int j, const Rational& v) {
    if (v == 0) return;
    auto& e = row[i][j];
    e += v;
    if (e == 0) row[i].erase(j);
  }

  int rank() const {
    std::vector<std::map<int, Rational>> work = row;
    std::vector<bool> used(rows, false);
    int rk = 0;
    for (int c = 0; c < cols; ++c) {
      int piv = -1;
      size_t best = 0;
      for (int i = 0; i < rows; ++i) {
        if (used[i]) continue;
        auto it = work[i].find(c);
        if (it == work[i].end()) continue;
        if (piv < 0 || work[i].size() < best) {
          piv = i;
          best = work[i].size();
        }
      }
      if (piv < 0) continue;
      used[piv] = true;
      ++rk;
      const Rational pv = work[piv][c];
      for (int i = 0; i < rows; ++i) {
        if (i == piv || used[i]) continue;
        auto it = work[i].find(c);
        if (it == work[i].end()) continue;
        const Rational f = it->second / pv;
        for (const auto& [j, v] : work[piv]) {
          auto& e = work[i][j];
          e -= f * v;
          if (e == 0) work[i].erase(j);
        }
      }
    }
    return rk;
  }
};

}  // namespace solvlat
