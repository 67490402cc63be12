#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opgraph {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Shapes incompatible with the requested operation.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad argument values: empty lists, out-of-range indices, malformed flags.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed (non-Hermitian input, invalid POVM, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A JSON document does not match the repo file formats.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rank_tol is a relative singular-value cutoff (scaled by the largest
// singular value of whatever is being ranked); eq_tol is the residual
// threshold for equality assertions. Both must lie in (0, 1).
struct Tolerances {
  double rank_tol = 1e-9;
  double eq_tol = 1e-9;

  void validate() const {
    if (!(rank_tol > 0.0 && rank_tol < 1.0) || !(eq_tol > 0.0 && eq_tol < 1.0))
      throw ArgumentError("Tolerances must lie strictly between 0 and 1");
  }
};

inline double frob(const CMatrix& a) { return a.norm(); }

// Largest singular value.
inline double opnorm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

// Sum of singular values (Schatten-1).
inline double trace_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues().sum();
}

inline bool all_finite(const CMatrix& a) {
  return a.allFinite();
}

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

inline CVector basis_vector(Eigen::Index n, Eigen::Index j) {
  CVector v = CVector::Zero(n);
  v(j) = 1.0;
  return v;
}

// |u><v|
inline CMatrix dyad(const CVector& u, const CVector& v) {
  return u * v.adjoint();
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace opgraph
