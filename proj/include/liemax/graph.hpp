#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liemax::graphs {

using Edge = std::pair<std::size_t, std::size_t>;  // first < second

/// Finite simple graph. Vertices keep their input order; edges are stored
/// sorted lexicographically by vertex index.
class SimpleGraph {
 public:
  SimpleGraph(std::vector<std::string> labels, std::vector<Edge> edges);
  /// Vertices labeled "1".."p".
  SimpleGraph(std::size_t p, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a * labels_.size() + b]; }
  std::size_t degree(std::size_t v) const;
  /// Index of edge {a, b}, or nullopt.
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
  /// Edges containing v.
  std::vector<std::size_t> incident_edges(std::size_t v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<bool> adj_;
};

/// Graph with a chosen start vertex d(e) for every edge.
class DirectedGraph {
 public:
  /// start[e] must be an endpoint of edge e.
  DirectedGraph(SimpleGraph graph, std::vector<std::size_t> start);
  /// d(e) = the endpoint with the smaller vertex index.
  static DirectedGraph canonical(SimpleGraph graph);
  /// Bit e of mask set means d(e) is the larger endpoint instead.
  static DirectedGraph from_mask(SimpleGraph graph, unsigned long long mask);

  const SimpleGraph& graph() const { return graph_; }
  std::size_t start(std::size_t e) const { return start_[e]; }
  std::size_t end(std::size_t e) const;  // d*(e)
  const std::vector<std::size_t>& starts() const { return start_; }

 private:
  SimpleGraph graph_;
  std::vector<std::size_t> start_;
};

struct GraphAutomorphism {
  std::vector<std::size_t> vertex;  // sigma(v)
  std::vector<std::size_t> edge;    // induced permutation of edge indices
};

inline constexpr std::size_t kDefaultVertexLimit = 12;
inline constexpr std::size_t kDefaultAutomorphismCap = 1'000'000;

/// Every automorphism, by backtracking with degree and distance-profile
/// pruning. Throws LimitExceeded when the graph has more than vertex_limit
/// vertices or more than cap automorphisms.
std::vector<GraphAutomorphism> graph_automorphisms(const SimpleGraph& g, std::size_t cap = kDefaultAutomorphismCap,
                                                   std::size_t vertex_limit = kDefaultVertexLimit);

/// Orbits of Aut(G) on edge indices, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> edge_orbits(const SimpleGraph& g, const std::vector<GraphAutomorphism>& autos);

/// Single edge orbit; vacuously true without edges.
bool edge_transitivity_check(const SimpleGraph& g, std::size_t cap = kDefaultAutomorphismCap,
                             std::size_t vertex_limit = kDefaultVertexLimit);

/// A vertex bijection mapping the edge set of g1 onto that of g2, verified
/// against both edge sets, or nullopt.
std::optional<std::vector<std::size_t>> graph_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                                                         std::size_t vertex_limit = kDefaultVertexLimit);

namespace named {
SimpleGraph complete(std::size_t n);
SimpleGraph cycle(std::size_t n);
SimpleGraph path(std::size_t n);
SimpleGraph star(std::size_t leaves);  // K_{1,m}, center first
SimpleGraph empty(std::size_t p);
SimpleGraph petersen();
/// "complete:4", "cycle:5", "path:4", "star:3", "empty:3", "petersen", "k4", "c5", "p4".
SimpleGraph by_name(const std::string& name);
} // namespace named

} // namespace liemax::graphs
