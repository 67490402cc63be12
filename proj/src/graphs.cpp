#include "opgraph/graphs.hpp"

#include <algorithm>

#include "opgraph/naimark.hpp"

namespace opgraph {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kraus: return "kraus";
    case Provenance::povm: return "povm";
    case Provenance::generators: return "generators";
  }
  return "generators";
}

OperatorGraph OperatorGraph::from_span(const std::vector<CMatrix>& ops,
                                       Provenance prov, const Tolerances& tol) {
  if (ops.empty()) throw ArgumentError("OperatorGraph: empty generator list");
  if (ops.front().rows() != ops.front().cols())
    throw ArgumentError("OperatorGraph: generators must be square");
  OperatorGraph g;
  g.dim = static_cast<int>(ops.front().rows());
  g.basis = orthonormalize_span(ops, tol);
  g.provenance = prov;
  if (g.basis.empty())
    throw ArgumentError("OperatorGraph: generators span only the zero space");
  return g;
}

void KrausSet::validate(const Tolerances& tol) const {
  if (ops.empty()) throw ArgumentError("KrausSet: empty");
  for (const auto& v : ops)
    if (v.rows() != dim_k() || v.cols() != dim_h())
      throw DimensionError("KrausSet: mixed shapes");
  if (channel) {
    CMatrix s = CMatrix::Zero(dim_h(), dim_h());
    for (const auto& v : ops) s += v.adjoint() * v;
    if (frob(CMatrix(s - identity(dim_h()))) > 1e-9)
      throw PreconditionError("KrausSet: channel flag set but sum V^t V != I");
  }
}

CMatrix apply_channel(const std::vector<CMatrix>& kraus, const CMatrix& rho) {
  if (kraus.empty()) throw ArgumentError("apply_channel: empty Kraus list");
  CMatrix out = CMatrix::Zero(kraus.front().rows(), kraus.front().rows());
  for (const auto& v : kraus) out += v * rho * v.adjoint();
  return out;
}

OperatorGraph graph_from_kraus(const KrausSet& k, const Tolerances& tol) {
  k.validate(tol);
  std::vector<CMatrix> products;
  products.reserve(k.ops.size() * k.ops.size());
  for (const auto& vj : k.ops)
    for (const auto& vk : k.ops) products.push_back(vj.adjoint() * vk);
  return OperatorGraph::from_span(products, Provenance::kraus, tol);
}

OperatorGraph graph_from_povm(const Povm& p, const Tolerances& tol) {
  p.validate(tol);
  OperatorGraph g = OperatorGraph::from_span(p.elements, Provenance::povm, tol);
  g.provenance = Provenance::povm;
  return g;
}

GraphsEqualResult graphs_equal(const OperatorGraph& g1, const OperatorGraph& g2,
                               const Tolerances& tol) {
  if (g1.dim != g2.dim) throw DimensionError("graphs_equal: dimension mismatch");
  tol.validate();
  double max_res = 0.0;
  for (const auto& b : g2.basis)
    max_res = std::max(max_res, residual_outside_span_unchecked(g1.basis, b));
  for (const auto& b : g1.basis)
    max_res = std::max(max_res, residual_outside_span_unchecked(g2.basis, b));
  return GraphsEqualResult{max_res < tol.eq_tol, max_res};
}

SystemFlags operator_system_check(const OperatorGraph& g, const Tolerances& tol) {
  SystemFlags flags;
  flags.has_identity =
      residual_outside_span_unchecked(g.basis, identity(g.dim)) < tol.eq_tol;
  flags.adjoint_closed = true;
  for (const auto& b : g.basis) {
    const double r = residual_outside_span_unchecked(g.basis, b.adjoint());
    if (r >= tol.eq_tol) flags.adjoint_closed = false;
  }
  return flags;
}

}  // namespace opgraph
