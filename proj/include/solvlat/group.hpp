#pragma once
#include <vector>

#include "solvlat/affine.hpp"
#include "solvlat/linalg.hpp"

namespace solvlat {

// Element of the solvable group G: a positive unit alpha, translation parts
// a, b in R^d, and the central d x d block C.  The central scalar type CS is
// QuadNum for concrete elements and AffineQ when the central coordinates are
// unknowns being solved for.
template <class CS>
struct GroupElemT {
  QuadNum alpha = QuadNum(1);
  std::vector<QuadNum> a, b;  // length d
  Mat<CS> C;                  // d x d

  int dim() const { return static_cast<int>(a.size()); }
};

using GroupElem = GroupElemT<QuadNum>;
using GroupElemSym = GroupElemT<AffineQ>;

template <class CS>
GroupElemT<CS> g_identity(int d) {
  GroupElemT<CS> e;
  e.alpha = QuadNum(1);
  e.a.assign(d, QuadNum(0));
  e.b.assign(d, QuadNum(0));
  e.C = Mat<CS>(d, d);
  return e;
}

template <class CS>
void check_same_dim(const GroupElemT<CS>& x, const GroupElemT<CS>& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("group elements of different dimension");
}

// (x * y): alpha multiplies; a twists by alpha_x, b by alpha_y; the central
// block picks up the outer product (b_x (x) a_y)_{ij} = b_x[i] * a_y[j].
template <class CS>
GroupElemT<CS> g_mul(const GroupElemT<CS>& x, const GroupElemT<CS>& y) {
  check_same_dim(x, y);
  const int d = x.dim();
  GroupElemT<CS> z;
  z.alpha = x.alpha * y.alpha;
  z.a.resize(d);
  z.b.resize(d);
  z.C = Mat<CS>(d, d);
  for (int i = 0; i < d; ++i) {
    z.a[i] = x.a[i] + x.alpha * y.a[i];
    z.b[i] = y.b[i] + y.alpha * x.b[i];
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z.C(i, j) = x.C(i, j) + y.C(i, j) + CS(x.b[i] * y.a[j]);
  return z;
}

template <class CS>
GroupElemT<CS> g_inv(const GroupElemT<CS>& x) {
  const int d = x.dim();
  const QuadNum ia = qf_inv(x.alpha);
  GroupElemT<CS> z;
  z.alpha = ia;
  z.a.resize(d);
  z.b.resize(d);
  z.C = Mat<CS>(d, d);
  for (int i = 0; i < d; ++i) {
    z.a[i] = -(ia * x.a[i]);
    z.b[i] = -(ia * x.b[i]);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z.C(i, j) = -x.C(i, j) + CS(ia * (x.b[i] * x.a[j]));
  return z;
}

template <class CS>
GroupElemT<CS> g_pow(const GroupElemT<CS>& x, long n) {
  GroupElemT<CS> base = n < 0 ? g_inv(x) : x;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  GroupElemT<CS> acc = g_identity<CS>(x.dim());
  while (e > 0) {
    if (e & 1UL) acc = g_mul(acc, base);
    e >>= 1UL;
    if (e > 0) base = g_mul(base, base);
  }
  return acc;
}

template <class CS>
GroupElemT<CS> g_commutator(const GroupElemT<CS>& x, const GroupElemT<CS>& y) {
  return g_mul(g_mul(x, y), g_mul(g_inv(x), g_inv(y)));
}

template <class CS>
GroupElemT<CS> g_conjugate(const GroupElemT<CS>& g, const GroupElemT<CS>& x) {
  return g_mul(g_mul(g, x), g_inv(g));
}

template <class CS>
bool g_eq(const GroupElemT<CS>& x, const GroupElemT<CS>& y) {
  if (x.dim() != y.dim() || !(x.alpha == y.alpha)) return false;
  for (int i = 0; i < x.dim(); ++i)
    if (x.a[i] != y.a[i] || x.b[i] != y.b[i]) return false;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      if (!(x.C(i, j) == y.C(i, j))) return false;
  return true;
}

// Faithful (2d+1) x (2d+1) upper-triangular matrix picture.  With the centre
// row/column at index d (0-based), row d carries (alpha, a) and column d
// carries b with b_i in row d-i, so b_d sits in the top row; the central block
// C_{ij} lands at (d-i, d+j).  For d=1 this is [[1, b, c], [0, alpha, a],
// [0, 0, 1]].
inline Mat<QuadNum> g_embed_dense(const GroupElem& x) {
  const int d = x.dim();
  const int n = 2 * d + 1, m = d;
  Mat<QuadNum> M(n, n);
  for (int i = 0; i < n; ++i) M(i, i) = QuadNum(1);
  M(m, m) = x.alpha;
  for (int j = 1; j <= d; ++j) M(m, m + j) = x.a[j - 1];
  for (int i = 1; i <= d; ++i) M(m - i, m) = x.b[i - 1];
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) M(m - i, m + j) = x.C(i - 1, j - 1);
  return M;
}

}  // namespace solvlat
