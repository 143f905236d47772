#pragma once
#include <map>
#include <string>
#include <vector>

#include "solvlat/certify.hpp"
#include "solvlat/linalg.hpp"

namespace solvlat {

// The (d+1)^2-dimensional solvable Lie algebra in its invariant frame
// {T, A_1..A_d, B_1..B_d, C_11..C_dd}.  Basis label codes:
//   T = 0, A_i = i, B_i = d+i, C_ij = 2d + (i-1)d + j   (1 <= i,j <= d).
// The bracket table is derived from commutators of the dense matrix model and
// re-checked against the expected relations at construction time.
struct LieAlgebra {
  int d = 0;
  int dim = 0;  // (d+1)^2
  std::vector<std::string> names;
  std::map<std::string, int> code_of;
  // bracket[u][v] = sparse coefficient vector of [e_u, e_v] in the basis.
  std::vector<std::vector<std::map<int, Rational>>> bracket;
  // d of each dual basis 1-form, as a 2-form: d(e_c∨)(X,Y) = -e_c∨([X,Y]).
  // d_dual[c] maps ordered pairs (u,v), u<v, to the coefficient.
  std::vector<std::map<std::pair<int, int>, Rational>> d_dual;

  int code_T() const { return 0; }
  int code_A(int i) const { return i; }
  int code_B(int i) const { return d + i; }
  int code_C(int i, int j) const { return 2 * d + (i - 1) * d + j; }
};

LieAlgebra make_lie_algebra(int d);

// Sparse invariant k-form: strictly increasing label-code tuples -> coefficient.
struct InvariantForm {
  int degree = 0;
  std::map<std::vector<int>, QuadNum> terms;

  bool is_zero() const { return terms.empty(); }
};

InvariantForm form_zero(int degree);
InvariantForm dual_basis_form(int code);  // the 1-form e_code∨
InvariantForm form_add(const InvariantForm& f, const InvariantForm& g);
InvariantForm form_sub(const InvariantForm& f, const InvariantForm& g);
InvariantForm form_scale(const QuadNum& k, const InvariantForm& f);
bool form_eq(const InvariantForm& f, const InvariantForm& g);

// Exterior product with exact inversion-count signs.
InvariantForm wedge(const InvariantForm& f, const InvariantForm& g);

// Chevalley-Eilenberg differential, extended from d_dual as an antiderivation.
InvariantForm ce_d(const LieAlgebra& L, const InvariantForm& f);

// Evaluation on a tuple of basis vectors given by label codes (any order,
// signs handled; repeated codes give 0).
QuadNum form_eval_basis(const InvariantForm& f, std::vector<int> codes);

// Sparse vector in the Lie algebra (code -> coefficient).
using LieVec = std::map<int, Rational>;
LieVec lie_bracket(const LieAlgebra& L, const LieVec& x, const LieVec& y);

// Multilinear evaluation on sparse vectors.
QuadNum form_eval(const InvariantForm& f, const std::vector<LieVec>& args);

// Independent oracle: the Koszul formula evaluated pointwise,
//   dφ(x_0..x_k) = Σ_{i<j} (−1)^{i+j} φ([x_i,x_j], x_0, .., x̂_i, .., x̂_j, .., x_k).
QuadNum koszul_d_eval(const LieAlgebra& L, const InvariantForm& f,
                      const std::vector<int>& codes);

// Almost complex structure as a rational matrix over the label basis.
struct ComplexStructure {
  Mat<Rational> J;
};

// J(T)=-A1, J(A1)=T; J pairs the remaining A's, pairs C_i1 with B_i, and
// pairs the remaining C-columns, matching the hermitian plane decomposition.
ComplexStructure default_J(const LieAlgebra& L);

// Apply J to a basis vector; returns a sparse vector.
LieVec apply_J(const ComplexStructure& J, int code);

Certificate nijenhuis_check(const LieAlgebra& L, const ComplexStructure& J);

// The n = (d+1)^2/2 hermitian planes (x,y) with J(x)=y: (A1,T) first, then
// (A_{2j+1},A_{2j}), (C_i1,B_i), (C_{i,2j+1},C_{i,2j}).
std::vector<std::pair<int, int>> hermitian_planes(const LieAlgebra& L);

// ω = Σ_planes x∨∧y∨; g(X,Y) = ω(X,JY) is the identity matrix on this basis.
InvariantForm build_omega(const LieAlgebra& L);

// ω^k expanded over k-subsets of the n decomposable plane summands (times k!).
InvariantForm omega_pow(const LieAlgebra& L, int k);

// Gram matrix g(u,v) = ω(e_u, J e_v).
Mat<QuadNum> metric_matrix(const LieAlgebra& L, const InvariantForm& omega,
                           const ComplexStructure& J);
bool leading_minors_positive(const Mat<QuadNum>& g);

// Form JSON: {"degree": k, "terms": [{"labels": ["T","A1",...], "coeff": ...}]}.
json form_to_json(const LieAlgebra& L, const InvariantForm& f);
InvariantForm form_from_json(const LieAlgebra& L, const json& j, long disc = 0);

struct LcbResult {
  InvariantForm theta;  // the solved Lee form with d(ω^{n-1}) = θ∧ω^{n-1}
  Certificate cert;
};

// Certifies the degree-(2n-1) identity d(ω^{n-1}) = θ∧ω^{n-1} with θ solved
// exactly (not assumed), certifies dθ = 0, and reports the comparison against
// the stated coefficient (2m+1) in θ = (2m+1)·T∨ together with the computed
// dω, flagging any discrepancy.
LcbResult lcb_verify(const LieAlgebra& L);

// Non-existence of a compatible invariant LCK pair for d > 1, given the
// second Betti number of the quotient computed elsewhere.  d = 1 is
// NotApplicable (the witness plane C_12/C_13 requires d >= 3).
Certificate lck_obstruction(const LieAlgebra& L, int b2_of_quotient);

}  // namespace solvlat
