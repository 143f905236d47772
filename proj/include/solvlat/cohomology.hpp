#pragma once
#include <string>
#include <vector>

#include "solvlat/lattice.hpp"

namespace solvlat {

// Dimensions of the window of the fiber-bundle spectral sequence that
// survives to E3 in total degree 2.
struct E3Window {
  int e20 = 0, e11 = 0, e02 = 0;
};

struct FiberCohomology {
  int d = 0;
  int dim_h1 = 0;
  int dim_h2 = 0;
  E3Window e3;
  // Exponents e of the alpha^e-action on each surviving class
  // (da -> alpha^{-1} da, db -> alpha db, dc -> dc).
  std::vector<int> h1_weights;
  std::vector<int> h2_weights;
  std::vector<std::string> h1_basis;
  std::vector<std::string> h2_basis;
};

// Exact spectral-sequence window for the torus-over-torus fibration of the
// nilpotent quotient: d2 is built on the central generators from the vectors
// a^s, b^s (c_ij -> sum_{s<t} (b_i^s a_j^t - b_i^t a_j^s) u_s wedge u_t) and
// extended as a derivation vanishing on the u's.  a_vecs and b_vecs are d x 2d
// (column k = the vector attached to generator k).  Throws DegenerateEigenbasis
// when the frame is singular or the commutator matrix is rank-deficient.
FiberCohomology fiber_cohomology(int d, const Mat<QuadNum>& a_vecs,
                                 const Mat<QuadNum>& b_vecs);

// The raw d2 matrices of the window, exposed for property tests
// (d2 compose d2 = 0, dimension formulas).
struct D2Window {
  Mat<QuadNum> m1;   // central generators -> Lambda^2 u          (q=1, p=0)
  Mat<QuadNum> m11;  // u (x) central -> Lambda^3 u               (q=1, p=1)
  Mat<QuadNum> m02;  // Lambda^2 central -> Lambda^2 u (x) central (q=2, p=0)
  Mat<QuadNum> m21;  // Lambda^2 u (x) central -> Lambda^4 u      (q=1, p=2)
};
D2Window build_d2_window(int d, const Mat<QuadNum>& a_vecs, const Mat<QuadNum>& b_vecs);

// Structural route: the exterior-algebra complex of the nilpotent part in the
// da/db/dc frame (depends only on d), with full and weight-zero dimensions.
struct CeFiberDims {
  int h1 = 0;
  int h2 = 0;
  int h1_weight0 = 0;
  int h2_weight0 = 0;
};
CeFiberDims ce_fiber_dims(int d);

struct BettiNumbers {
  int b0 = 1, b1 = 0, b2 = 0;
};

// Wang-sequence Betti numbers of the total space:
// b_k = dim ker(A_k - Id) + dim ker(A_{k-1} - Id) with A_k the action on
// H^k of the fiber; since the weights are exact powers of alpha > 1, the
// kernels count the weight-zero classes.
BettiNumbers wang_betti(int d, const FiberCohomology& fib);

struct AbelianizationResult {
  int rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

// Free rank (and torsion) of the abelianization from the integer relation
// matrix on (g0, g_1..g_2d, h_1..h_d^2) via Smith normal form.
AbelianizationResult abelianization_rank(const LatticePresentation& pres);

}  // namespace solvlat
