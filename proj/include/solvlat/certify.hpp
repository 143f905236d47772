#pragma once
#include <string>
#include <vector>

#include "solvlat/jsonx.hpp"
#include "solvlat/lattice.hpp"

namespace solvlat {

struct Certificate {
  std::string kind;
  bool passed = false;
  bool not_applicable = false;  // counts as pass; details in witnesses
  json witnesses = json::object();

  json to_json() const {
    return json{{"kind", kind}, {"passed", passed}, {"witnesses", witnesses}};
  }
};

struct DensityResult {
  bool dense = false;
  json witness = json::object();
};

// Exact verification of the conjugation relations
// g0 g_k g0^{-1} = prod_j g_j^{n_kj} prod_s h_s^{p_ks} and of the centrality
// of every h under g0.
Certificate check_conj_relations(const LatticePresentation& pres);

// Three-part discreteness/cocompactness certificate: (a) the 2d vectors
// (a^k, b^k) span over Q(sqrt(D)) with full rank 2d, (b) the commutator
// subgroup of the centre has Z-rank equal to its span dimension d^2, (c)
// alpha != 1.
Certificate discreteness_certificate(const LatticePresentation& pres);

// Kronecker-style exact density decision for the subgroup of R^r generated by
// the given vectors: dense iff they span R^r and no nonzero integer vector is
// orthogonal to the kernel of the generator matrix; witnesses are re-checkable.
DensityResult kronecker_dense(const std::vector<std::vector<QuadNum>>& gens, int r);

// First-column criterion: the first columns of the central generators' d x d
// blocks must generate a dense subgroup of R^d.
Certificate toroidal_type(const LatticePresentation& pres);

// All entries lie in Q(sqrt(D)).
Certificate algebraic_type(const LatticePresentation& pres);

}  // namespace solvlat
