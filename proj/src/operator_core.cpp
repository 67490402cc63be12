#include "opgraph/operator_core.hpp"

#include <algorithm>
#include <cmath>

namespace opgraph {

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_inner: shape mismatch");
  Complex acc(0.0, 0.0);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    acc += a.col(j).dot(b.col(j));  // Eigen's dot conjugates the left factor
  return acc;
}

std::vector<CMatrix> orthonormalize_span(const std::vector<CMatrix>& ops,
                                         const Tolerances& tol) {
  tol.validate();
  if (ops.empty())
    throw ArgumentError("orthonormalize_span: empty input");
  const Eigen::Index r = ops.front().rows();
  const Eigen::Index c = ops.front().cols();
  double scale = 0.0;
  for (const auto& op : ops) {
    if (op.rows() != r || op.cols() != c)
      throw DimensionError("orthonormalize_span: mixed shapes");
    scale = std::max(scale, frob(op));
  }
  if (scale == 0.0) return {};
  const double cutoff = tol.rank_tol * scale;

  std::vector<CMatrix> basis;
  for (const auto& op : ops) {
    CMatrix v = op;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= hs_inner(b, v) * b;
    const double nrm = frob(v);
    if (nrm > cutoff) basis.push_back(v / nrm);
  }
  return basis;
}

static double gram_deviation(const std::vector<CMatrix>& basis) {
  double dev = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = j; k < basis.size(); ++k) {
      const Complex g = hs_inner(basis[j], basis[k]);
      const double target = (j == k) ? 1.0 : 0.0;
      dev = std::max(dev, std::abs(g - target));
    }
  return dev;
}

double residual_outside_span_unchecked(const std::vector<CMatrix>& basis,
                                       const CMatrix& x) {
  CMatrix v = x;
  for (const auto& b : basis) v -= hs_inner(b, x) * b;
  return frob(v);
}

double residual_outside_span(const std::vector<CMatrix>& basis,
                             const CMatrix& x, const Tolerances& tol) {
  tol.validate();
  for (const auto& b : basis)
    if (b.rows() != x.rows() || b.cols() != x.cols())
      throw DimensionError("residual_outside_span: shape mismatch");
  if (gram_deviation(basis) > tol.eq_tol)
    throw PreconditionError("residual_outside_span: basis is not orthonormal");
  return residual_outside_span_unchecked(basis, x);
}

EigResult herm_eig(const CMatrix& h, const Tolerances& tol) {
  tol.validate();
  if (h.rows() != h.cols()) throw PreconditionError("herm_eig: not square");
  if (frob(CMatrix(h - h.adjoint())) > tol.eq_tol * std::max(1.0, frob(h)))
    throw PreconditionError("herm_eig: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw PreconditionError("herm_eig: eigensolver failed to converge");
  return EigResult{es.eigenvalues(), es.eigenvectors()};
}

CMatrix psd_power(const CMatrix& m, double p, const Tolerances& tol) {
  EigResult eig = herm_eig(m, tol);
  const double lmax = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  if (eig.values.size() && eig.values.minCoeff() < -tol.eq_tol * std::max(1.0, lmax))
    throw PreconditionError("psd_power: input is not PSD within tolerance");
  const double cutoff = tol.rank_tol * lmax;
  RVector powered(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lam = eig.values(i);
    powered(i) = (lam <= cutoff) ? 0.0 : std::pow(lam, p);
  }
  return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

OpFlags classify_operator(const CMatrix& x, const Tolerances& tol) {
  tol.validate();
  OpFlags f;
  const bool square = x.rows() == x.cols();
  if (square) {
    f.hermitian = frob(CMatrix(x - x.adjoint())) <= tol.eq_tol;
    if (f.hermitian) {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(x, Eigen::EigenvaluesOnly);
      f.psd = es.eigenvalues().minCoeff() >= -tol.eq_tol;
      f.projection = frob(CMatrix(x * x - x)) <= tol.eq_tol;
    }
  }
  f.isometry =
      frob(CMatrix(x.adjoint() * x - identity(x.cols()))) <= tol.eq_tol;
  f.unitary = square && f.isometry;
  return f;
}

}  // namespace opgraph
