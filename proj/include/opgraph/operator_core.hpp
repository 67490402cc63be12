#pragma once

#include <vector>

#include "opgraph/matrix.hpp"

namespace opgraph {

// Hilbert-Schmidt geometry and Hermitian functional calculus on dense
// complex matrices. Everything here is a pure function of its inputs.

// Tr(a^dagger b). Conjugate-symmetric, linear in b.
Complex hs_inner(const CMatrix& a, const CMatrix& b);

// HS-orthonormal basis of span(ops) via modified Gram-Schmidt, run twice for
// stability. Output length is the numerical rank at tol.rank_tol (relative to
// the largest input norm); deterministic given input order.
std::vector<CMatrix> orthonormalize_span(const std::vector<CMatrix>& ops,
                                         const Tolerances& tol = {});

// || x - sum_k <S_k, x> S_k ||_HS for an HS-orthonormal basis {S_k}.
// Throws PreconditionError if the basis Gram matrix deviates from identity
// by more than tol.eq_tol.
double residual_outside_span(const std::vector<CMatrix>& basis,
                             const CMatrix& x, const Tolerances& tol = {});

// As above but skips the Gram validation; for hot loops over bases that were
// produced by orthonormalize_span in the same routine.
double residual_outside_span_unchecked(const std::vector<CMatrix>& basis,
                                       const CMatrix& x);

struct EigResult {
  RVector values;    // ascending
  CMatrix vectors;   // unitary, columns are eigenvectors
};

// Spectral decomposition h = V diag(values) V^dagger of a Hermitian matrix.
EigResult herm_eig(const CMatrix& h, const Tolerances& tol = {});

// V diag(lambda^p) V^dagger for Hermitian PSD m. Eigenvalues below
// rank_tol * lambda_max are treated as kernel: clipped to zero for p > 0 and
// excluded (pseudo-power) for p < 0.
CMatrix psd_power(const CMatrix& m, double p, const Tolerances& tol = {});

struct OpFlags {
  bool hermitian = false;
  bool psd = false;
  bool projection = false;
  bool unitary = false;
  bool isometry = false;
};

OpFlags classify_operator(const CMatrix& x, const Tolerances& tol = {});

}  // namespace opgraph
