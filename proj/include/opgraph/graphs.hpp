#pragma once

#include <string>
#include <vector>

#include "opgraph/operator_core.hpp"

namespace opgraph {

struct Povm;  // naimark.hpp

enum class Provenance { kraus, povm, generators };

std::string provenance_name(Provenance p);

// A finite-dimensional operator subspace of B(C^dim), stored as an
// HS-orthonormal basis. Generator lists are not kept; all predicates
// downstream are span-level.
struct OperatorGraph {
  int dim = 0;
  std::vector<CMatrix> basis;
  Provenance provenance = Provenance::generators;

  // Orthonormalizes the given generators. Throws ArgumentError when the
  // span is empty or zero.
  static OperatorGraph from_span(const std::vector<CMatrix>& ops,
                                 Provenance prov, const Tolerances& tol = {});

  std::size_t size() const { return basis.size(); }
};

// Kraus operators V_k : H -> K of a completely positive map; rectangular
// shapes are allowed. When `channel` is set, validate() additionally checks
// trace preservation sum V_k^dagger V_k = I.
struct KrausSet {
  std::vector<CMatrix> ops;
  bool channel = false;

  void validate(const Tolerances& tol = {}) const;
  Eigen::Index dim_h() const { return ops.empty() ? 0 : ops.front().cols(); }
  Eigen::Index dim_k() const { return ops.empty() ? 0 : ops.front().rows(); }
};

// sum_k V_k rho V_k^dagger.
CMatrix apply_channel(const std::vector<CMatrix>& kraus, const CMatrix& rho);

// span(V_j^dagger V_k) over all ordered pairs.
OperatorGraph graph_from_kraus(const KrausSet& k, const Tolerances& tol = {});

// span(M_i) over the POVM elements. Spans over outcome unions coincide with
// spans over singletons — a union element M(B) = sum_{i in B} M_i is already
// a linear combination of the singletons — so only singletons are
// materialized.
OperatorGraph graph_from_povm(const Povm& p, const Tolerances& tol = {});

struct GraphsEqualResult {
  bool equal = false;
  double max_residual = 0.0;
};

// Mutual span inclusion of the two bases, decided at tol.eq_tol.
GraphsEqualResult graphs_equal(const OperatorGraph& g1, const OperatorGraph& g2,
                               const Tolerances& tol = {});

struct SystemFlags {
  bool has_identity = false;
  bool adjoint_closed = false;
};

SystemFlags operator_system_check(const OperatorGraph& g,
                                  const Tolerances& tol = {});

}  // namespace opgraph
