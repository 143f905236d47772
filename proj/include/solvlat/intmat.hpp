#pragma once
#include <vector>

#include "solvlat/linalg.hpp"

namespace solvlat {

using IMat = Mat<Integer>;

inline Integer det_int(const IMat& A) {
  const Rational d = mat_det(mat_cast<Integer, Rational>(A));
  if (d.get_den() != 1) throw DimensionMismatch("integer determinant not integral");
  return d.get_num();
}

struct HnfResult {
  IMat H;  // row-style Hermite normal form: H = U * A
  IMat U;  // unimodular
  int rank = 0;
};

// Row-style HNF: echelon shape, positive pivots, entries above each pivot
// reduced into [0, pivot).
inline HnfResult hnf_rows(const IMat& A) {
  HnfResult res{A, IMat::identity(A.rows), 0};
  IMat& H = res.H;
  IMat& U = res.U;
  auto row_sub = [&](int dst, int src, const Integer& q) {
    if (q == 0) return;
    for (int j = 0; j < H.cols; ++j) H(dst, j) -= q * H(src, j);
    for (int j = 0; j < U.cols; ++j) U(dst, j) -= q * U(src, j);
  };
  auto row_swap = [&](int i, int k) {
    if (i == k) return;
    for (int j = 0; j < H.cols; ++j) std::swap(H(i, j), H(k, j));
    for (int j = 0; j < U.cols; ++j) std::swap(U(i, j), U(k, j));
  };
  auto row_negate = [&](int i) {
    for (int j = 0; j < H.cols; ++j) H(i, j) = -H(i, j);
    for (int j = 0; j < U.cols; ++j) U(i, j) = -U(i, j);
  };

  int r = 0;
  for (int c = 0; c < H.cols && r < H.rows; ++c) {
    // Euclid rows r..end on column c until a single nonzero survives.
    while (true) {
      int nz1 = -1, nz2 = -1;
      for (int i = r; i < H.rows; ++i) {
        if (H(i, c) == 0) continue;
        if (nz1 < 0) {
          nz1 = i;
        } else {
          nz2 = i;
          break;
        }
      }
      if (nz1 < 0 || nz2 < 0) break;
      // Reduce the larger against the smaller.
      int big = nz1, small = nz2;
      if (abs(H(big, c)) < abs(H(small, c))) std::swap(big, small);
      const Integer q = floor_div(H(big, c), H(small, c));
      row_sub(big, small, q);
    }
    int piv = -1;
    for (int i = r; i < H.rows; ++i)
      if (H(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    row_swap(r, piv);
    if (H(r, c) < 0) row_negate(r);
    for (int i = 0; i < r; ++i) row_sub(i, r, floor_div(H(i, c), H(r, c)));
    ++r;
  }
  res.rank = r;
  return res;
}

struct SnfResult {
  std::vector<Integer> divisors;  // invariant factors d1 | d2 | ..., positive
  int rank = 0;
};

// Smith normal form (invariant factors only).
inline SnfResult snf(IMat A) {
  const int m = A.rows, n = A.cols;
  SnfResult res;
  int t = 0;
  auto row_sub = [&](int dst, int src, const Integer& q) {
    if (q == 0) return;
    for (int j = 0; j < n; ++j) A(dst, j) -= q * A(src, j);
  };
  auto col_sub = [&](int dst, int src, const Integer& q) {
    if (q == 0) return;
    for (int i = 0; i < m; ++i) A(i, dst) -= q * A(i, src);
  };
  while (t < m && t < n) {
    // Locate a nonzero pivot in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < m && pi < 0; ++i)
      for (int j = t; j < n; ++j)
        if (A(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    for (int j = 0; j < n; ++j) std::swap(A(t, j), A(pi, j));
    for (int i = 0; i < m; ++i) std::swap(A(i, t), A(i, pj));
    // Clear row and column t, restarting while remainders appear.
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        const Integer q = floor_div(A(i, t), A(t, t));
        row_sub(i, t, q);
        if (A(i, t) != 0) {  // remainder becomes the smaller pivot
          for (int j = 0; j < n; ++j) std::swap(A(t, j), A(i, j));
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        const Integer q = floor_div(A(t, j), A(t, t));
        col_sub(j, t, q);
        if (A(t, j) != 0) {
          for (int i = 0; i < m; ++i) std::swap(A(i, t), A(i, j));
          clean = false;
        }
      }
      if (clean) break;
    }
    // Enforce divisibility of the trailing block by the pivot.
    bool redo = false;
    for (int i = t + 1; i < m && !redo; ++i)
      for (int j = t + 1; j < n; ++j)
        if (A(i, j) % A(t, t) != 0) {
          for (int jj = 0; jj < n; ++jj) A(t, jj) += A(i, jj);
          redo = true;
          break;
        }
    if (redo) continue;
    if (A(t, t) < 0) A(t, t) = -A(t, t);
    ++t;
  }
  for (int i = 0; i < t; ++i) res.divisors.push_back(A(i, i));
  res.rank = t;
  return res;
}

}  // namespace solvlat
