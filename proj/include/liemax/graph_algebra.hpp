#pragma once

#include "liemax/graph.hpp"
#include "liemax/lie_algebra.hpp"
#include "liemax/symmetry.hpp"

#include <string>
#include <vector>

namespace liemax::graphs {

/// The 2-step nilpotent algebra on V ∪ E with [d(e), d*(e)] = e.
/// Basis: vertices in input order, then edges in sorted order labeled "a-b".
LieAlgebra attach_algebra(const DirectedGraph& dg);

/// Basis index of edge e in attach_algebra(dg).
inline std::size_t edge_basis_index(const SimpleGraph& g, std::size_t e) { return g.vertex_count() + e; }

/// r_v: -1 on v and on every edge containing v, +1 elsewhere.
RatMatrix vertex_reflection(const DirectedGraph& dg, std::size_t v);
symmetry::SymmetryGroup vertex_reflections(const DirectedGraph& dg);

/// sigma~: permutes vertex coordinates by sigma and edge coordinates by the
/// induced permutation, negating sigma(e) when sigma(d(e)) != d(sigma(e)).
RatMatrix lift_automorphism(const DirectedGraph& dg, const GraphAutomorphism& sigma);

struct GraphGroupOptions {
  bool sign_diagonal = true;
  bool reflections = true;
  bool lifts = true;
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  std::size_t vertex_limit = kDefaultVertexLimit;
};

/// Default certification group for a graph algebra.
symmetry::SymmetryGroup graph_symmetry_group(const DirectedGraph& dg, const LieAlgebra& alg,
                                             const GraphGroupOptions& options = {});

struct DirectionOutcome {
  unsigned long long mask;
  RatVector ricci_charpoly;
  bool soliton;
  symmetry::Certificate::Status status;
};

struct DirectionMismatch {
  unsigned long long mask;
  std::string field;  // "ricci_spectrum" | "soliton" | "certificate"
};

struct DirectionReport {
  std::size_t directions_checked = 0;
  std::vector<DirectionOutcome> outcomes;  // outcomes[0] is the canonical direction
  std::vector<DirectionMismatch> mismatches;
  bool consistent() const { return mismatches.empty(); }
};

inline constexpr std::size_t kDefaultDirectionEdgeLimit = 8;

/// Runs the Ricci spectrum, soliton solve and (optionally) the certificate
/// for all 2^q directions and compares each against the canonical one.
/// Throws LimitExceeded when q > max_edges.
DirectionReport direction_independence_check(const SimpleGraph& g, bool certify = true,
                                             std::size_t max_edges = kDefaultDirectionEdgeLimit,
                                             const GraphGroupOptions& options = {});

} // namespace liemax::graphs
