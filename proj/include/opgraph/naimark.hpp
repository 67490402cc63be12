#pragma once

#include <cstdint>
#include <vector>

#include "opgraph/graphs.hpp"
#include "opgraph/report.hpp"

namespace opgraph {

// Finite-outcome positive operator valued measure on C^dim. Additivity over
// disjoint outcome unions holds by construction, so only the singleton
// elements are stored.
struct Povm {
  int dim = 0;
  std::vector<CMatrix> elements;

  // Each element Hermitian PSD to 1e-9, sum within 1e-9 of identity.
  void validate(const Tolerances& tol = {}) const;
  int outcomes() const { return static_cast<int>(elements.size()); }
};

// Naimark dilation of a POVM: isometry W : H -> K and a projective measure
// {E_i} on K with W^dagger E_i W = M_i.
struct NaimarkDilation {
  int dimH = 0;
  int dimK = 0;
  CMatrix W;               // dimK x dimH
  std::vector<CMatrix> E;  // dimK x dimK orthogonal projections
  bool minimal = false;

  // Residuals of the defining identities against `p`; max over all of
  // ||W^t W - I||, ||sum E - I||, ||E_i E_j - delta E_i||, ||W^t E_i W - M_i||.
  double max_invariant_residual(const Povm& p) const;
};

// M_i = S^{-1/2} A_i A_i^dagger S^{-1/2} with A_i i.i.d. complex Gaussian and
// S the sum of the A_j A_j^dagger. Deterministic per seed.
Povm random_povm(int dim, int outcomes, std::uint64_t seed);

// Canonical block dilation K = C^outcomes (x) C^dim, W f = sum_i |i> (x)
// M_i^{1/2} f, E_i = |i><i| (x) I. With `minimal`, K is compressed onto the
// span of all E_i W columns, so dimK = sum_i rank(M_i).
NaimarkDilation dilate(const Povm& p, bool minimal, const Tolerances& tol = {});

// V_B = (sum_{i in B} E_i) W for an outcome subset B.
CMatrix subset_isometry(const NaimarkDilation& d, const std::vector<int>& B);

// Union element M(B) = sum_{i in B} M_i.
CMatrix povm_union(const Povm& p, const std::vector<int>& B);

// All singletons plus `extra` seeded random subsets.
std::vector<std::vector<int>> default_subsets(int outcomes, std::uint64_t seed,
                                              int extra = 10);

// Machine check of the identity V_B^dagger V_B' = M(B intersect B') and of
// the span equality between the POVM graph and the dilation-error graph,
// for both the canonical and the minimal dilation.
Report verify_proposition1(const Povm& p,
                           const std::vector<std::vector<int>>& subsets,
                           const Tolerances& tol = {});

// Convenience: default subsets derived from `seed`.
Report verify_proposition1(const Povm& p, std::uint64_t seed,
                           const Tolerances& tol = {});

}  // namespace opgraph
