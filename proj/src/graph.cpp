#include "liemax/graph.hpp"

#include "liemax/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace liemax::graphs {

SimpleGraph::SimpleGraph(std::vector<std::string> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
  const std::size_t p = labels_.size();
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != p)
    throw std::invalid_argument("vertex labels must be distinct");
  adj_.assign(p * p, false);
  for (auto [a, b] : edges) {
    if (a >= p || b >= p) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed in a simple graph");
    if (a > b) std::swap(a, b);
    if (adj_[a * p + b]) throw std::invalid_argument("duplicate edge {" + labels_[a] + "," + labels_[b] + "}");
    adj_[a * p + b] = adj_[b * p + a] = true;
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

namespace {
std::vector<std::string> numeric_labels(std::size_t p) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i) labels.push_back(std::to_string(i + 1));
  return labels;
}
} // namespace

SimpleGraph::SimpleGraph(std::size_t p, std::vector<Edge> edges) : SimpleGraph(numeric_labels(p), std::move(edges)) {}

std::size_t SimpleGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < vertex_count(); ++u) d += adjacent(v, u);
  return d;
}

std::optional<std::size_t> SimpleGraph::edge_index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
  if (it == edges_.end() || *it != Edge{a, b}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> SimpleGraph::incident_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].first == v || edges_[e].second == v) out.push_back(e);
  return out;
}

DirectedGraph::DirectedGraph(SimpleGraph graph, std::vector<std::size_t> start)
    : graph_(std::move(graph)), start_(std::move(start)) {
  if (start_.size() != graph_.edge_count()) throw std::invalid_argument("direction must assign every edge");
  for (std::size_t e = 0; e < start_.size(); ++e) {
    const auto& [a, b] = graph_.edges()[e];
    if (start_[e] != a && start_[e] != b) throw std::invalid_argument("direction d(e) must be an endpoint of e");
  }
}

DirectedGraph DirectedGraph::canonical(SimpleGraph graph) { return from_mask(std::move(graph), 0); }

DirectedGraph DirectedGraph::from_mask(SimpleGraph graph, unsigned long long mask) {
  std::vector<std::size_t> start;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& [a, b] = graph.edges()[e];
    start.push_back(e < 64 && (mask >> e & 1ULL) ? b : a);
  }
  return DirectedGraph(std::move(graph), std::move(start));
}

std::size_t DirectedGraph::end(std::size_t e) const {
  const auto& [a, b] = graph_.edges()[e];
  return start_[e] == a ? b : a;
}

namespace {

std::vector<std::vector<std::size_t>> distances(const SimpleGraph& g) {
  const std::size_t p = g.vertex_count();
  std::vector<std::vector<std::size_t>> dist(p, std::vector<std::size_t>(p, p));
  for (std::size_t s = 0; s < p; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < p; ++w)
        if (g.adjacent(u, w) && dist[s][w] == p) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

// Vertex invariant: degree followed by the sorted distance profile.
std::vector<std::vector<std::size_t>> profiles(const SimpleGraph& g, const std::vector<std::vector<std::size_t>>& dist) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::size_t> prof = dist[v];
    std::sort(prof.begin(), prof.end());
    prof.insert(prof.begin(), g.degree(v));
    out.push_back(std::move(prof));
  }
  return out;
}

// Vertices ordered so each one has as many already-placed neighbours as possible.
std::vector<std::size_t> search_order(const SimpleGraph& g) {
  const std::size_t p = g.vertex_count();
  std::vector<std::size_t> order;
  std::vector<bool> placed(p, false);
  while (order.size() < p) {
    std::size_t best = p;
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    for (std::size_t v = 0; v < p; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (auto u : order) links += g.adjacent(u, v);
      std::pair<std::size_t, std::size_t> key{links, g.degree(v)};
      if (best == p || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

// Calls `found` for every isomorphism g1 -> g2 until it returns false.
void isomorphism_search(const SimpleGraph& g1, const SimpleGraph& g2,
                        const std::function<bool(const std::vector<std::size_t>&)>& found) {
  const std::size_t p = g1.vertex_count();
  if (p != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return;
  const auto d1 = distances(g1), d2 = distances(g2);
  const auto f1 = profiles(g1, d1), f2 = profiles(g2, d2);
  auto s1 = f1, s2 = f2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return;

  const auto order = search_order(g1);
  std::vector<std::size_t> map(p, p);
  std::vector<bool> used(p, false);
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == p) {
      if (!found(map)) stop = true;
      return;
    }
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < p && !stop; ++w) {
      if (used[w] || f1[v] != f2[w]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t u = order[k];
        ok = g1.adjacent(v, u) == g2.adjacent(w, map[u]) && d1[v][u] == d2[w][map[u]];
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      extend(depth + 1);
      used[w] = false;
      map[v] = p;
    }
  };
  extend(0);
}

void check_vertex_limit(const SimpleGraph& g, std::size_t limit) {
  if (g.vertex_count() > limit)
    throw LimitExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices; limit is " +
                        std::to_string(limit));
}

} // namespace

std::vector<GraphAutomorphism> graph_automorphisms(const SimpleGraph& g, std::size_t cap, std::size_t vertex_limit) {
  check_vertex_limit(g, vertex_limit);
  std::vector<GraphAutomorphism> out;
  bool overflow = false;
  isomorphism_search(g, g, [&](const std::vector<std::size_t>& sigma) {
    if (out.size() == cap) {
      overflow = true;
      return false;
    }
    GraphAutomorphism a{sigma, std::vector<std::size_t>(g.edge_count())};
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& [x, y] = g.edges()[e];
      a.edge[e] = *g.edge_index(sigma[x], sigma[y]);
    }
    out.push_back(std::move(a));
    return true;
  });
  if (overflow) throw LimitExceeded("automorphism count exceeds cap " + std::to_string(cap));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  return out;
}

std::vector<std::vector<std::size_t>> edge_orbits(const SimpleGraph& g, const std::vector<GraphAutomorphism>& autos) {
  const std::size_t q = g.edge_count();
  std::vector<std::size_t> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& a : autos)
    for (std::size_t e = 0; e < q; ++e) {
      auto r1 = find(e), r2 = find(a.edge[e]);
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> slot(q, q);
  for (std::size_t e = 0; e < q; ++e) {
    auto r = find(e);
    if (slot[r] == q) {
      slot[r] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(e);
  }
  return orbits;
}

bool edge_transitivity_check(const SimpleGraph& g, std::size_t cap, std::size_t vertex_limit) {
  if (g.edge_count() == 0) return true;
  return edge_orbits(g, graph_automorphisms(g, cap, vertex_limit)).size() == 1;
}

std::optional<std::vector<std::size_t>> graph_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                                                         std::size_t vertex_limit) {
  check_vertex_limit(g1, vertex_limit);
  check_vertex_limit(g2, vertex_limit);
  std::optional<std::vector<std::size_t>> witness;
  isomorphism_search(g1, g2, [&](const std::vector<std::size_t>& sigma) {
    witness = sigma;
    return false;
  });
  if (!witness) return std::nullopt;
  // Independent confirmation against the edge sets.
  std::set<Edge> mapped;
  for (const auto& [a, b] : g1.edges()) mapped.insert(std::minmax((*witness)[a], (*witness)[b]));
  std::set<Edge> target(g2.edges().begin(), g2.edges().end());
  if (mapped != target) throw std::logic_error("isomorphism witness failed verification");
  return witness;
}

namespace named {

SimpleGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return SimpleGraph(n, edges);
}

SimpleGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return SimpleGraph(n, edges);
}

SimpleGraph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return SimpleGraph(n, edges);
}

SimpleGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t a = 1; a <= leaves; ++a) edges.emplace_back(0, a);
  return SimpleGraph(leaves + 1, edges);
}

SimpleGraph empty(std::size_t p) { return SimpleGraph(p, {}); }

SimpleGraph petersen() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return SimpleGraph(10, edges);
}

SimpleGraph by_name(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  std::size_t arg = 0;
  if (colon != std::string::npos) {
    try {
      arg = std::stoul(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad graph size in '" + name + "'");
    }
  } else if (kind.size() > 1 && (kind[0] == 'k' || kind[0] == 'c' || kind[0] == 'p' || kind[0] == 's') &&
             std::all_of(kind.begin() + 1, kind.end(), ::isdigit)) {
    arg = std::stoul(kind.substr(1));
    kind = kind.substr(0, 1);
  }
  if (kind == "petersen") return petersen();
  if (kind == "complete" || kind == "k") return complete(arg);
  if (kind == "cycle" || kind == "c") return cycle(arg);
  if (kind == "path" || kind == "p") return path(arg);
  if (kind == "star" || kind == "s") return star(arg);
  if (kind == "empty") return empty(arg);
  throw std::invalid_argument("unknown graph name '" + name + "'");
}

} // namespace named
} // namespace liemax::graphs
