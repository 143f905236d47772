#include "solvlat/lattice.hpp"

#include <algorithm>

namespace solvlat {

IMat make_block_N(long beta, int d) {
  if (beta < 3) throw InvalidBeta("beta must be >= 3, got " + std::to_string(beta));
  if (d < 1 || d % 2 == 0) throw InvalidSpec("d must be odd and >= 1, got " + std::to_string(d));
  IMat N(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) {
    N(2 * i, 2 * i) = 1;
    N(2 * i, 2 * i + 1) = 1;
    N(2 * i + 1, 2 * i) = beta - 2;
    N(2 * i + 1, 2 * i + 1) = beta - 1;
  }
  return N;
}

void validate_N(const IMat& N, long beta) {
  if (N.rows != N.cols || N.rows % 2 != 0 || N.rows == 0)
    throw DimensionMismatch("N must be square of even size");
  const int d = N.rows / 2;
  if (det_int(N) != 1) throw NotUnimodular("det N != 1");
  // N^2 - beta N + I = 0
  const IMat N2 = mat_mul(N, N);
  for (int i = 0; i < N.rows; ++i)
    for (int j = 0; j < N.cols; ++j) {
      Integer want = -N2(i, j) + beta * N(i, j);
      if (i == j) want -= 1;
      if (want != 0)
        throw WrongMinimalPolynomial("N^2 - beta N + I != 0 at entry (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
    }
  const QuadNum alpha = alpha_from_beta(beta);
  Mat<QuadNum> M = mat_cast<Integer, QuadNum>(N);
  for (int i = 0; i < M.rows; ++i) M(i, i) = M(i, i) - alpha;
  if (mat_rank(M) != d)
    throw WrongMultiplicities("rank(N - alpha I) != d: eigenvalue multiplicities are wrong");
}

Eigenbasis eigenbasis(const IMat& N, long beta, const Mat<Rational>& K, const Mat<Rational>& L) {
  const int d = N.rows / 2;
  if (K.rows != d || K.cols != d || L.rows != d || L.cols != d)
    throw DimensionMismatch("K and L must be d x d");
  if (mat_det(K) == 0 || mat_det(L) == 0)
    throw SingularTransform("K and L must be invertible");

  const QuadNum alpha = alpha_from_beta(beta);
  Mat<QuadNum> M = mat_cast<Integer, QuadNum>(N);
  for (int i = 0; i < M.rows; ++i) M(i, i) = M(i, i) - alpha;
  auto kern = kernel_basis(M);
  if (static_cast<int>(kern.size()) != d)
    throw DegenerateEigenbasis("ker(N - alpha I) has dimension " + std::to_string(kern.size()) +
                               ", expected " + std::to_string(d));

  Eigenbasis eb;
  eb.beta = beta;
  eb.disc = disc_from_beta(beta);
  eb.v = std::move(kern);
  eb.w.resize(d);
  for (int i = 0; i < d; ++i) {
    eb.w[i].resize(2 * d);
    for (int s = 0; s < 2 * d; ++s) eb.w[i][s] = qf_galois(eb.v[i][s]);
  }
  eb.a.assign(d, std::vector<QuadNum>(2 * d, QuadNum(0)));
  eb.b.assign(d, std::vector<QuadNum>(2 * d, QuadNum(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (L(i, j) != 0)
        for (int s = 0; s < 2 * d; ++s) eb.a[i][s] += QuadNum(L(i, j)) * eb.v[j][s];
      if (K(i, j) != 0)
        for (int s = 0; s < 2 * d; ++s) eb.b[i][s] += QuadNum(K(i, j)) * eb.w[j][s];
    }
  return eb;
}

std::vector<ZCommutator> commutators_z(const std::vector<std::vector<QuadNum>>& a_vecs,
                                       const std::vector<std::vector<QuadNum>>& b_vecs) {
  const int d = static_cast<int>(a_vecs.size());
  if (static_cast<int>(b_vecs.size()) != d) throw DimensionMismatch("a/b vector count");
  const int n = 2 * d;
  std::vector<ZCommutator> out;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      ZCommutator z;
      z.s = s + 1;
      z.t = t + 1;
      z.flat.resize(d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          z.flat[i * d + j] = b_vecs[i][s] * a_vecs[j][t] - b_vecs[i][t] * a_vecs[j][s];
      out.push_back(std::move(z));
    }
  return out;
}

RankTestResult discrete_rank_test(const std::vector<std::vector<QuadNum>>& gens) {
  RankTestResult res;
  if (gens.empty()) {
    res.discrete = true;  // the trivial group
    return res;
  }
  const Mat<QuadNum> M = rows_to_mat(gens);
  res.dim_span = mat_rank(M);
  res.rank_z = mat_rank(split_surd_cols(M));
  res.discrete = res.rank_z == res.dim_span;
  return res;
}

namespace {

// Z-basis (HNF) of the lattice generated by vectors in Q(sqrt(D))^k, obtained
// in the split rational coordinates after clearing denominators.
std::vector<std::vector<QuadNum>> lattice_hnf_basis(const std::vector<std::vector<QuadNum>>& gens,
                                                    long disc) {
  const Mat<QuadNum> M = rows_to_mat(gens);
  const Mat<Rational> S = split_surd_cols(M);
  Integer scale = 1;
  for (const auto& q : S.data) scale = lcm(scale, q.get_den());
  IMat Z(S.rows, S.cols);
  for (int i = 0; i < S.rows; ++i)
    for (int j = 0; j < S.cols; ++j) {
      const Rational v = S(i, j) * Rational(scale);
      Z(i, j) = v.get_num();
    }
  const auto hs = hnf_rows(Z);
  std::vector<std::vector<QuadNum>> basis;
  const int k = M.cols;
  for (int i = 0; i < hs.rank; ++i) {
    std::vector<QuadNum> vec(k);
    for (int j = 0; j < k; ++j)
      vec[j] = QuadNum(make_rational(hs.H(i, j), scale), make_rational(hs.H(i, k + j), scale), disc);
    basis.push_back(std::move(vec));
  }
  return basis;
}

Mat<QuadNum> reshape_to_mat(const std::vector<QuadNum>& flat, int d) {
  Mat<QuadNum> m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = flat[i * d + j];
  return m;
}

long infer_disc(const std::vector<std::vector<QuadNum>>& vecs) {
  for (const auto& v : vecs)
    for (const auto& x : v)
      if (x.D != 0) return x.D;
  return 0;
}

}  // namespace

DBasis build_D(const std::vector<ZCommutator>& z_gens, int d, const DChoice& choice) {
  std::vector<std::vector<QuadNum>> zvecs;
  zvecs.reserve(z_gens.size());
  for (const auto& z : z_gens) zvecs.push_back(z.flat);
  const long disc = infer_disc(zvecs);

  const auto lambda_basis = lattice_hnf_basis(zvecs, disc);
  if (static_cast<int>(lambda_basis.size()) != d * d)
    throw DegenerateEigenbasis("lambda_Z has rank " + std::to_string(lambda_basis.size()) +
                               ", expected " + std::to_string(d * d));

  DBasis out;
  switch (choice.kind) {
    case DChoiceKind::Default: {
      out.basis = lambda_basis;
      out.index = 1;
      break;
    }
    case DChoiceKind::Denominator: {
      if (choice.denominator < 1) throw InvalidSpec("D denominator must be >= 1");
      const QuadNum inv(make_rational(1, choice.denominator));
      for (const auto& vec : lambda_basis) out.basis.push_back(vec_scale(inv, vec));
      break;
    }
    case DChoiceKind::Explicit: {
      if (static_cast<int>(choice.basis.size()) != d * d)
        throw InvalidSpec("explicit D basis must have d^2 vectors");
      for (const auto& vec : choice.basis)
        if (static_cast<int>(vec.size()) != d * d)
          throw InvalidSpec("explicit D basis vectors must have length d^2");
      const auto rt = discrete_rank_test(choice.basis);
      if (!rt.discrete || rt.rank_z != d * d)
        throw InvalidSpec("explicit D basis is not a lattice basis of rank d^2");
      out.basis = choice.basis;
      break;
    }
  }

  if (choice.kind != DChoiceKind::Default) {
    // Express each lambda_Z basis vector in D-coordinates; containment means
    // the coordinates are integers, and the index is |det| of that matrix.
    const Mat<Rational> B = split_surd_cols(rows_to_mat(out.basis));   // (d^2) x (2 d^2)
    const Mat<Rational> Lam = split_surd_cols(rows_to_mat(lambda_basis));
    Mat<Rational> X;
    try {
      X = solve_unique(transpose(B), transpose(Lam));  // B^T X = Lam^T
    } catch (const SingularSystem&) {
      throw NotContaining("lambda_Z does not lie in the span of the D basis");
    }
    IMat Xi(X.rows, X.cols);
    for (int i = 0; i < X.rows; ++i)
      for (int j = 0; j < X.cols; ++j) {
        if (X(i, j).get_den() != 1)
          throw NotContaining("lambda_Z is not contained in D: non-integer coordinate " +
                              rat_to_string(X(i, j)));
        Xi(i, j) = X(i, j).get_num();
      }
    out.index = abs(det_int(Xi));
    if (out.index == 0) throw NotContaining("degenerate D basis");
  }

  for (const auto& vec : out.basis) out.h_mats.push_back(reshape_to_mat(vec, d));
  return out;
}

SolveCResult solve_c(const IMat& N, const IMat& P, const std::vector<Mat<QuadNum>>& h_mats,
                     const std::vector<std::vector<QuadNum>>& a_vecs,
                     const std::vector<std::vector<QuadNum>>& b_vecs) {
  const int d = static_cast<int>(a_vecs.size());
  const int n = 2 * d;
  if (N.rows != n || N.cols != n) throw DimensionMismatch("N must be 2d x 2d");
  if (P.rows != n || P.cols != d * d) throw DimensionMismatch("P must be 2d x d^2");
  if (static_cast<int>(h_mats.size()) != d * d) throw DimensionMismatch("need d^2 h matrices");
  // With minimal polynomial X^2 - beta X + 1, the trace of N is d * beta.
  Integer tr = 0;
  for (int i = 0; i < n; ++i) tr += N(i, i);
  if (tr % d != 0) throw WrongMinimalPolynomial("trace of N is not divisible by d");
  const long beta = Integer(tr / d).get_si();
  const QuadNum alpha = alpha_from_beta(beta);

  // Unknown id for the central entry (i, j) of generator k (all 0-based).
  auto uid = [d](int k, int i, int j) { return (k * d + i) * d + j; };

  std::vector<GroupElemSym> g(n);
  for (int k = 0; k < n; ++k) {
    g[k].alpha = QuadNum(1);
    g[k].a.resize(d);
    g[k].b.resize(d);
    g[k].C = Mat<AffineQ>(d, d);
    for (int i = 0; i < d; ++i) {
      g[k].a[i] = a_vecs[i][k];
      g[k].b[i] = b_vecs[i][k];
      for (int j = 0; j < d; ++j) g[k].C(i, j) = AffineQ::unknown(uid(k, i, j));
    }
  }
  std::vector<GroupElemSym> h(d * d);
  for (int s = 0; s < d * d; ++s) {
    h[s] = g_identity<AffineQ>(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) h[s].C(i, j) = AffineQ(h_mats[s](i, j));
  }
  GroupElemSym g0 = g_identity<AffineQ>(d);
  g0.alpha = alpha;

  SolveCResult res;
  res.closed_form_agrees = true;
  res.coefficient_matrix_is_I_minus_N = true;

  // One linear system per central slot (i, j); the coefficient matrix must
  // come out identical across slots (and equal I - N).
  Mat<QuadNum> A(n, n);
  Mat<QuadNum> Rhs(n, d * d);

  for (int k = 0; k < n; ++k) {
    const GroupElemSym lhs = g_conjugate(g0, g[k]);
    GroupElemSym rhs = g_identity<AffineQ>(d);
    for (int j = 0; j < n; ++j) rhs = g_mul(rhs, g_pow(g[j], N(k, j).get_si()));
    for (int s = 0; s < d * d; ++s) rhs = g_mul(rhs, g_pow(h[s], P(k, s).get_si()));

    // The a/b parts must already satisfy the eigen relations.
    for (int i = 0; i < d; ++i)
      if (lhs.a[i] != rhs.a[i] || lhs.b[i] != rhs.b[i])
        throw DegenerateEigenbasis("a/b vectors do not satisfy the conjugation relation");

    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        AffineQ eq = lhs.C(i, j) - rhs.C(i, j);
        eq.normalize();
        // Row k of the (i, j) system: sum_l coeff_l x_{l,i,j} = -const.
        std::vector<QuadNum> rowk(n, QuadNum(0));
        for (const auto& [id, co] : eq.lin) {
          const int l = id / (d * d);
          if (id != uid(l, i, j)) throw SingularSystem("central slots unexpectedly coupled");
          rowk[l] = co;
        }
        if (i == 0 && j == 0) {
          for (int l = 0; l < n; ++l) A(k, l) = rowk[l];
        } else {
          for (int l = 0; l < n; ++l)
            if (!(A(k, l) == rowk[l]))
              throw SingularSystem("central coefficient matrix varies across slots");
        }
        Rhs(k, i * d + j) = -eq.c;
      }
    // Closed-form inhomogeneous term: f^k_{ij} + (P h)_{ij}.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        QuadNum f(0);
        for (int s = 0; s < n; ++s) {
          const long ns = N(k, s).get_si();
          f += QuadNum(make_rational(Integer(ns) * (ns - 1), 2)) * (b_vecs[i][s] * a_vecs[j][s]);
          for (int t = s + 1; t < n; ++t)
            f += QuadNum(Rational(Integer(ns) * N(k, t))) * (b_vecs[i][s] * a_vecs[j][t]);
        }
        for (int s = 0; s < d * d; ++s) f += QuadNum(Rational(P(k, s))) * h_mats[s](i, j);
        if (!(f == Rhs(k, i * d + j))) {
          res.closed_form_agrees = false;
          res.mismatch_note = "closed-form term differs at k=" + std::to_string(k + 1) +
                              " (i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ")";
        }
      }
  }

  // The extracted coefficient matrix should be exactly I - N.
  for (int k = 0; k < n && res.coefficient_matrix_is_I_minus_N; ++k)
    for (int l = 0; l < n; ++l) {
      QuadNum want = QuadNum(Rational(-N(k, l)));
      if (k == l) want += QuadNum(1);
      if (!(A(k, l) == want)) {
        res.coefficient_matrix_is_I_minus_N = false;
        break;
      }
    }

  Mat<QuadNum> X;
  try {
    X = solve_unique(A, Rhs);
  } catch (const SingularSystem&) {
    throw SingularSystem("I - N is singular: central coordinates are not uniquely determined");
  }
  res.C.resize(n);
  for (int k = 0; k < n; ++k) {
    res.C[k] = Mat<QuadNum>(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) res.C[k](i, j) = X(k, i * d + j);
  }
  return res;
}

LatticePresentation assemble(const BuildSpec& spec) {
  if (spec.d < 1 || spec.d % 2 == 0)
    throw InvalidSpec("d must be odd and >= 1, got " + std::to_string(spec.d));
  if (spec.beta < 3) throw InvalidBeta("beta must be >= 3, got " + std::to_string(spec.beta));
  const int d = spec.d, n = 2 * d;

  const IMat N = spec.N ? *spec.N : make_block_N(spec.beta, d);
  if (N.rows != n || N.cols != n) throw DimensionMismatch("N must be 2d x 2d");
  validate_N(N, spec.beta);

  const Mat<Rational> K = spec.K ? *spec.K : Mat<Rational>::identity(d);
  const Mat<Rational> L = spec.L ? *spec.L : Mat<Rational>::identity(d);
  const IMat P = spec.P ? *spec.P : IMat::zeros(n, d * d);
  if (P.rows != n || P.cols != d * d) throw DimensionMismatch("P must be 2d x d^2");

  const Eigenbasis eb = eigenbasis(N, spec.beta, K, L);
  const auto z = commutators_z(eb.a, eb.b);
  {
    std::vector<std::vector<QuadNum>> zvecs;
    for (const auto& zc : z) zvecs.push_back(zc.flat);
    const auto rt = discrete_rank_test(zvecs);
    if (!rt.discrete || rt.rank_z != d * d)
      throw DegenerateEigenbasis("commutator lattice is not discrete of rank d^2 (rank " +
                                 std::to_string(rt.rank_z) + ", span " +
                                 std::to_string(rt.dim_span) + ")");
  }
  const DBasis D = build_D(z, d, spec.D_choice);
  const SolveCResult sc = solve_c(N, P, D.h_mats, eb.a, eb.b);

  LatticePresentation pres;
  pres.d = d;
  pres.beta = spec.beta;
  pres.disc = disc_from_beta(spec.beta);
  pres.alpha = alpha_from_beta(spec.beta);
  pres.g0 = g_identity<QuadNum>(d);
  pres.g0.alpha = pres.alpha;
  pres.N = N;
  pres.P = P;
  pres.index_lambdaZ_in_D = D.index;
  for (int k = 0; k < n; ++k) {
    GroupElem gk = g_identity<QuadNum>(d);
    for (int i = 0; i < d; ++i) {
      gk.a[i] = eb.a[i][k];
      gk.b[i] = eb.b[i][k];
    }
    gk.C = sc.C[k];
    pres.g.push_back(std::move(gk));
  }
  for (int s = 0; s < d * d; ++s) {
    GroupElem hs = g_identity<QuadNum>(d);
    hs.C = D.h_mats[s];
    pres.h.push_back(std::move(hs));
  }
  return pres;
}

std::vector<ZCommutator> presentation_commutators(const LatticePresentation& pres) {
  const int d = pres.d, n = 2 * d;
  std::vector<ZCommutator> out;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const GroupElem c = g_commutator(pres.g[s], pres.g[t]);
      ZCommutator z;
      z.s = s + 1;
      z.t = t + 1;
      z.flat.resize(d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z.flat[i * d + j] = c.C(i, j);
      out.push_back(std::move(z));
    }
  return out;
}

}  // namespace solvlat
