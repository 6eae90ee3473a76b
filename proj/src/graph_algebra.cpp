#include "liemax/graph_algebra.hpp"

#include "liemax/curvature.hpp"
#include "liemax/errors.hpp"
#include "liemax/lie_core.hpp"

namespace liemax::graphs {

LieAlgebra attach_algebra(const DirectedGraph& dg) {
  const auto& g = dg.graph();
  std::vector<std::string> labels = g.labels();
  for (const auto& [a, b] : g.edges()) labels.push_back(g.labels()[a] + "-" + g.labels()[b]);
  LieAlgebra::Builder builder(std::move(labels));
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    builder.bracket(dg.start(e), dg.end(e), edge_basis_index(g, e), 1);
  return std::move(builder).build();
}

RatMatrix vertex_reflection(const DirectedGraph& dg, std::size_t v) {
  const auto& g = dg.graph();
  RatVector d(g.vertex_count() + g.edge_count(), Rational(1));
  d.at(v) = -1;
  for (auto e : g.incident_edges(v)) d[edge_basis_index(g, e)] = -1;
  return RatMatrix::diagonal(d);
}

symmetry::SymmetryGroup vertex_reflections(const DirectedGraph& dg) {
  const auto alg = attach_algebra(dg);
  symmetry::SymmetryGroup group(alg.dim());
  for (std::size_t v = 0; v < dg.graph().vertex_count(); ++v)
    group.add(alg, vertex_reflection(dg, v), symmetry::Provenance::vertex_reflection);
  return group;
}

RatMatrix lift_automorphism(const DirectedGraph& dg, const GraphAutomorphism& sigma) {
  const auto& g = dg.graph();
  const std::size_t p = g.vertex_count(), n = p + g.edge_count();
  RatMatrix m(n, n);
  for (std::size_t v = 0; v < p; ++v) m(sigma.vertex.at(v), v) = 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t image = sigma.edge.at(e);
    const bool agrees = sigma.vertex[dg.start(e)] == dg.start(image);
    m(edge_basis_index(g, image), edge_basis_index(g, e)) = agrees ? 1 : -1;
  }
  return m;
}

symmetry::SymmetryGroup graph_symmetry_group(const DirectedGraph& dg, const LieAlgebra& alg,
                                             const GraphGroupOptions& options) {
  symmetry::SymmetryGroup group(alg.dim());
  if (options.sign_diagonal) group.merge(symmetry::sign_diagonal_subgroup(alg));
  if (options.reflections)
    for (std::size_t v = 0; v < dg.graph().vertex_count(); ++v)
      group.add(alg, vertex_reflection(dg, v), symmetry::Provenance::vertex_reflection);
  if (options.lifts)
    for (const auto& sigma : graph_automorphisms(dg.graph(), options.automorphism_cap, options.vertex_limit))
      group.add(alg, lift_automorphism(dg, sigma), symmetry::Provenance::graph_lift);
  return group;
}

namespace {

DirectionOutcome evaluate(const SimpleGraph& g, unsigned long long mask, bool certify,
                          const GraphGroupOptions& options) {
  const auto dg = DirectedGraph::from_mask(g, mask);
  const auto alg = attach_algebra(dg);
  const auto der = core::derivation_algebra(alg);
  const auto ric = curvature::ricci_tensor(alg);
  DirectionOutcome out{mask, curvature::ricci_spectrum(ric), false, symmetry::Certificate::Status::inconclusive};
  auto sol = curvature::ricci_soliton_check(alg, ric, der);
  out.soliton = sol && sol->residual_zero;
  if (certify) {
    const auto group = graph_symmetry_group(dg, alg, options);
    out.status = symmetry::maximality_certificate(alg, group, core::scaled_derivation_algebra(alg, der)).status;
  }
  return out;
}

} // namespace

DirectionReport direction_independence_check(const SimpleGraph& g, bool certify, std::size_t max_edges,
                                             const GraphGroupOptions& options) {
  const std::size_t q = g.edge_count();
  if (q > max_edges || q >= 63)
    throw LimitExceeded("direction sweep over " + std::to_string(q) + " edges exceeds limit " +
                        std::to_string(max_edges));
  DirectionReport report;
  const unsigned long long count = 1ULL << q;
  for (unsigned long long mask = 0; mask < count; ++mask) {
    auto outcome = evaluate(g, mask, certify, options);
    if (mask > 0) {
      const auto& ref = report.outcomes.front();
      if (outcome.ricci_charpoly != ref.ricci_charpoly) report.mismatches.push_back({mask, "ricci_spectrum"});
      if (outcome.soliton != ref.soliton) report.mismatches.push_back({mask, "soliton"});
      if (certify && outcome.status != ref.status) report.mismatches.push_back({mask, "certificate"});
    }
    report.outcomes.push_back(std::move(outcome));
  }
  report.directions_checked = report.outcomes.size();
  return report;
}

} // namespace liemax::graphs
