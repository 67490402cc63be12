#include "opgraph/naimark.hpp"

#include <algorithm>
#include <set>

#include "opgraph/rng.hpp"

namespace opgraph {

void Povm::validate(const Tolerances& tol) const {
  tol.validate();
  if (dim < 1) throw PreconditionError("Povm: dim must be positive");
  if (elements.empty()) throw PreconditionError("Povm: no outcomes");
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const CMatrix& m = elements[i];
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionError("Povm: element shape mismatch");
    const double herm = frob(CMatrix(m - m.adjoint()));
    if (herm > 1e-9)
      throw PreconditionError("Povm: element " + std::to_string(i) +
                              " not Hermitian, residual " + std::to_string(herm));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin < -1e-9)
      throw PreconditionError("Povm: element " + std::to_string(i) +
                              " not PSD, min eigenvalue " + std::to_string(lmin));
    sum += m;
  }
  const double res = frob(CMatrix(sum - identity(dim)));
  if (res > 1e-9)
    throw PreconditionError("Povm: sum of elements deviates from identity by " +
                            std::to_string(res));
}

double NaimarkDilation::max_invariant_residual(const Povm& p) const {
  double r = frob(CMatrix(W.adjoint() * W - identity(dimH)));
  CMatrix esum = CMatrix::Zero(dimK, dimK);
  for (std::size_t i = 0; i < E.size(); ++i) {
    esum += E[i];
    for (std::size_t j = 0; j < E.size(); ++j) {
      const CMatrix target = (i == j) ? E[i] : CMatrix(CMatrix::Zero(dimK, dimK));
      r = std::max(r, frob(CMatrix(E[i] * E[j] - target)));
    }
    r = std::max(r, frob(CMatrix(W.adjoint() * E[i] * W - p.elements[i])));
  }
  r = std::max(r, frob(CMatrix(esum - identity(dimK))));
  return r;
}

Povm random_povm(int dim, int outcomes, std::uint64_t seed) {
  if (dim < 1 || outcomes < 1)
    throw ArgumentError("random_povm: dim and outcomes must be >= 1");
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(seed + attempt);
    std::vector<CMatrix> gram(outcomes);
    CMatrix s = CMatrix::Zero(dim, dim);
    for (int i = 0; i < outcomes; ++i) {
      CMatrix a = rng.gaussian_matrix(dim, dim);
      gram[i] = a * a.adjoint();
      s += gram[i];
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < 1e-8 * es.eigenvalues().maxCoeff())
      continue;  // numerically singular normalizer; take the next stream
    CMatrix sinv = psd_power(s, -0.5);
    Povm p;
    p.dim = dim;
    p.elements.reserve(outcomes);
    for (int i = 0; i < outcomes; ++i) {
      CMatrix m = sinv * gram[i] * sinv;
      p.elements.push_back(0.5 * (m + m.adjoint()));  // scrub rounding skew
    }
    p.validate();
    return p;
  }
  throw PreconditionError("random_povm: normalizer singular for all retries");
}

static int psd_rank(const CMatrix& m, double rank_tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  const double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
  if (lmax == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > rank_tol * lmax) ++r;
  return r;
}

NaimarkDilation dilate(const Povm& p, bool minimal, const Tolerances& tol) {
  p.validate(tol);
  const int n = p.dim;
  const int m = p.outcomes();

  NaimarkDilation d;
  d.dimH = n;
  d.dimK = m * n;
  d.W = CMatrix::Zero(d.dimK, n);
  for (int i = 0; i < m; ++i)
    d.W.block(i * n, 0, n, n) = psd_power(p.elements[i], 0.5, tol);
  d.E.reserve(m);
  for (int i = 0; i < m; ++i) {
    CMatrix e = CMatrix::Zero(d.dimK, d.dimK);
    e.block(i * n, i * n, n, n) = identity(n);
    d.E.push_back(std::move(e));
  }
  d.minimal = false;
  if (!minimal) return d;

  // Compress onto span{E_i W h} = direct sum of the block images range(M_i).
  // Per block the eigenvectors of M_i above the rank cutoff give an
  // orthonormal basis, so dimK becomes sum_i rank(M_i).
  std::vector<CVector> cols;
  for (int i = 0; i < m; ++i) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(p.elements[i]);
    const double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      if (lmax == 0.0 || es.eigenvalues()(k) <= tol.rank_tol * lmax) continue;
      CVector v = CVector::Zero(d.dimK);
      v.segment(i * n, n) = es.eigenvectors().col(k);
      cols.push_back(std::move(v));
    }
  }
  const int dk = static_cast<int>(cols.size());
  CMatrix c(d.dimK, dk);
  for (int j = 0; j < dk; ++j) c.col(j) = cols[j];

  NaimarkDilation md;
  md.dimH = n;
  md.dimK = dk;
  md.W = c.adjoint() * d.W;
  md.E.reserve(m);
  for (int i = 0; i < m; ++i) md.E.push_back(c.adjoint() * d.E[i] * c);
  md.minimal = true;
  return md;
}

CMatrix subset_isometry(const NaimarkDilation& d, const std::vector<int>& B) {
  CMatrix eb = CMatrix::Zero(d.dimK, d.dimK);
  std::set<int> seen;
  for (int i : B) {
    if (i < 0 || i >= static_cast<int>(d.E.size()))
      throw ArgumentError("subset_isometry: outcome index out of range");
    if (seen.insert(i).second) eb += d.E[i];
  }
  return eb * d.W;
}

CMatrix povm_union(const Povm& p, const std::vector<int>& B) {
  CMatrix m = CMatrix::Zero(p.dim, p.dim);
  std::set<int> seen;
  for (int i : B) {
    if (i < 0 || i >= p.outcomes())
      throw ArgumentError("povm_union: outcome index out of range");
    if (seen.insert(i).second) m += p.elements[i];
  }
  return m;
}

std::vector<std::vector<int>> default_subsets(int outcomes, std::uint64_t seed,
                                              int extra) {
  std::vector<std::vector<int>> subsets;
  for (int i = 0; i < outcomes; ++i) subsets.push_back({i});
  Rng rng(seed);
  for (int k = 0; k < extra; ++k) {
    std::vector<int> b;
    for (int i = 0; i < outcomes; ++i)
      if (rng.uniform01() < 0.5) b.push_back(i);
    subsets.push_back(std::move(b));  // may be empty: V_empty = 0 is covered
  }
  return subsets;
}

static std::vector<int> intersect(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::set<int> sb(b.begin(), b.end());
  std::vector<int> out;
  for (int i : a)
    if (sb.count(i)) out.push_back(i);
  return out;
}

Report verify_proposition1(const Povm& p,
                           const std::vector<std::vector<int>>& subsets,
                           const Tolerances& tol) {
  if (subsets.empty()) throw ArgumentError("verify_proposition1: no subsets");
  ReportTimer timer;
  Report rep;
  rep.check = "prop1";
  rep.parameters["dim"] = p.dim;
  rep.parameters["outcomes"] = p.outcomes();
  rep.parameters["subsets"] = subsets;
  rep.parameters["eq_tol"] = tol.eq_tol;

  const OperatorGraph povm_graph = graph_from_povm(p, tol);

  double product_max = 0.0;
  double naimark_max = 0.0;
  double graph_max = 0.0;
  for (bool minimal : {false, true}) {
    const NaimarkDilation d = dilate(p, minimal, tol);
    naimark_max = std::max(naimark_max, d.max_invariant_residual(p));

    std::vector<CMatrix> vb;
    vb.reserve(subsets.size());
    for (const auto& b : subsets) vb.push_back(subset_isometry(d, b));
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = 0; j < subsets.size(); ++j) {
        const CMatrix lhs = vb[i].adjoint() * vb[j];
        const CMatrix rhs = povm_union(p, intersect(subsets[i], subsets[j]));
        product_max = std::max(product_max, frob(CMatrix(lhs - rhs)));
      }

    KrausSet errors;
    errors.ops = vb;
    const OperatorGraph error_graph = graph_from_kraus(errors, tol);
    graph_max =
        std::max(graph_max, graphs_equal(povm_graph, error_graph, tol).max_residual);

    if (minimal) {
      int rank_sum = 0;
      for (const auto& m : p.elements) rank_sum += psd_rank(m, tol.rank_tol);
      rep.tables["minimal_dimK"] = d.dimK;
      rep.tables["rank_sum"] = rank_sum;
      rep.parameters["minimal_dim_matches_rank_sum"] = (d.dimK == rank_sum);
    }
  }

  rep.residuals["product_vs_intersection_max"] = product_max;
  rep.residuals["povm_graph_vs_error_graph"] = graph_max;
  rep.residuals["naimark_invariants_max"] = naimark_max;
  rep.pass = product_max < tol.eq_tol && graph_max < tol.eq_tol &&
             naimark_max < 1e-10 &&
             rep.parameters["minimal_dim_matches_rank_sum"].get<bool>();
  rep.runtime_ms = timer.elapsed_ms();
  return rep;
}

Report verify_proposition1(const Povm& p, std::uint64_t seed,
                           const Tolerances& tol) {
  return verify_proposition1(p, default_subsets(p.outcomes(), seed), tol);
}

}  // namespace opgraph
