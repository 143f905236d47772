#pragma once
#include <optional>
#include <string>
#include <vector>

#include "solvlat/group.hpp"
#include "solvlat/intmat.hpp"

namespace solvlat {

// --- build input ------------------------------------------------------------

enum class DChoiceKind { Default, Denominator, Explicit };

struct DChoice {
  DChoiceKind kind = DChoiceKind::Default;
  long denominator = 1;                                // kind == Denominator
  std::vector<std::vector<QuadNum>> basis;             // kind == Explicit: d^2 vectors in R^{d^2}
};

struct BuildSpec {
  int d = 1;
  long beta = 3;
  std::optional<IMat> N;            // 2d x 2d, default block-diagonal
  std::optional<Mat<Rational>> K;   // d x d, default identity
  std::optional<Mat<Rational>> L;   // d x d, default identity
  std::optional<IMat> P;            // 2d x d^2, default zero
  DChoice D_choice;
};

// --- build output -------------------------------------------------------------

struct LatticePresentation {
  int d = 1;
  long beta = 3;
  long disc = 5;  // beta^2 - 4
  QuadNum alpha;
  GroupElem g0;
  std::vector<GroupElem> g;  // 2d generators
  std::vector<GroupElem> h;  // d^2 central generators
  IMat N;                    // 2d x 2d
  IMat P;                    // 2d x d^2
  Integer index_lambdaZ_in_D = 1;
};

// --- intermediate results -----------------------------------------------------

struct Eigenbasis {
  long beta = 3;
  long disc = 5;
  // d vectors of length 2d each: v_i spans ker(N - alpha I), w_i = galois(v_i),
  // a = L v, b = K w.
  std::vector<std::vector<QuadNum>> v, w, a, b;
};

struct ZCommutator {
  int s = 0, t = 0;                 // 1-based generator indices, s < t
  std::vector<QuadNum> flat;        // row-major d x d central block, length d^2
};

struct RankTestResult {
  long rank_z = 0;     // rank of the generated abelian group
  long dim_span = 0;   // dimension of the real span
  bool discrete = false;
};

struct DBasis {
  std::vector<std::vector<QuadNum>> basis;  // d^2 vectors of length d^2
  std::vector<Mat<QuadNum>> h_mats;         // same data reshaped d x d row-major
  Integer index = 1;                        // [D : lambda_Z]
};

struct SolveCResult {
  std::vector<Mat<QuadNum>> C;  // central block of each of the 2d generators
  // Cross-check of the symbolically extracted system against the closed-form
  // inhomogeneous term sum_s n(n-1)/2 b_i^s a_j^s + sum_{s<t} n_s n_t b_i^s a_j^t.
  bool closed_form_agrees = false;
  bool coefficient_matrix_is_I_minus_N = false;
  std::string mismatch_note;
};

// --- operations ---------------------------------------------------------------

// Block-diagonal N in SL_{2d}(Z) with d copies of the 2x2 unit-trace-beta block
// [[1, 1], [beta-2, beta-1]] (determinant 1, minimal polynomial X^2 - beta X + 1).
IMat make_block_N(long beta, int d);

// Checks det N = 1, N^2 - beta N + I = 0, and rank(N - alpha I) = d over
// Q(sqrt(beta^2-4)).  Throws NotUnimodular / WrongMinimalPolynomial /
// WrongMultiplicities.
void validate_N(const IMat& N, long beta);

// Kernel basis of N - alpha I, canonicalized (first nonzero coordinate 1,
// ordered by free column), Galois images, and the K/L-transformed vectors.
Eigenbasis eigenbasis(const IMat& N, long beta, const Mat<Rational>& K, const Mat<Rational>& L);

// Central parts of the commutators [g_s, g_t]:
// z^{s,t}_{ij} = b_i^s a_j^t - b_i^t a_j^s, for 1 <= s < t <= 2d.
std::vector<ZCommutator> commutators_z(const std::vector<std::vector<QuadNum>>& a_vecs,
                                       const std::vector<std::vector<QuadNum>>& b_vecs);

// rank of the generated abelian group (over Z) vs dimension of the real span;
// the group is discrete iff the two agree.
RankTestResult discrete_rank_test(const std::vector<std::vector<QuadNum>>& gens);

// A lattice D in the centre with lambda_Z a finite-index subgroup; h_vectors
// are the chosen basis.  Throws NotContaining when an explicit basis does not
// contain lambda_Z.
DBasis build_D(const std::vector<ZCommutator>& z_gens, int d, const DChoice& choice);

// Solves for the central blocks of the generators so that the conjugation
// relation g0 g_k g0^{-1} = prod_j g_j^{n_kj} * prod_s h_s^{p_ks} holds
// exactly.  The system is derived symbolically by running the group law on
// elements with unknown central coordinates, then cross-checked against the
// closed-form inhomogeneous term.
SolveCResult solve_c(const IMat& N, const IMat& P, const std::vector<Mat<QuadNum>>& h_mats,
                     const std::vector<std::vector<QuadNum>>& a_vecs,
                     const std::vector<std::vector<QuadNum>>& b_vecs);

// Full pipeline: validate spec, build N/eigenbasis/commutators/D, solve the
// central coordinates, assemble the presentation.
LatticePresentation assemble(const BuildSpec& spec);

// lambda_Z generated from the presentation's own generators via the group law
// (used by certifiers as an independent recomputation).
std::vector<ZCommutator> presentation_commutators(const LatticePresentation& pres);

}  // namespace solvlat
