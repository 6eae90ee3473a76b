#include "liemax/families.hpp"

#include "liemax/graph_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace liemax::families {

RatVector almost_abelian_ricci_diagonal(const RatVector& w) {
  Rational norm_sq = 0, alpha = 0;
  for (const auto& x : w) {
    norm_sq += x * x;
    alpha += x;
  }
  RatVector d{-norm_sq};
  for (const auto& x : w) d.push_back(-x * alpha);
  return d;
}

bool w_permutation_equivalence(const RatVector& w, const RatVector& w2) {
  if (w.size() != w2.size()) throw std::invalid_argument("w vectors must have equal length");
  RatVector a = w, b = w2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

Family almost_abelian(const RatVector& w, std::string name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= w.size(); ++i) labels.push_back("v" + std::to_string(i + 1));
  LieAlgebra::Builder b(labels);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i]) != 0) b.bracket(0, i + 1, i + 1, w[i]);
  Family f{std::move(b).build(), InnerProduct::identity(w.size() + 1), {}, {}};
  f.meta.name = std::move(name);
  f.meta.expected_certificate = symmetry::Certificate::Status::maximal;
  f.meta.expected_ricci_diagonal = almost_abelian_ricci_diagonal(w);
  f.meta.completely_solvable = true;
  std::vector<Rational> nonzero;
  for (const auto& x : w)
    if (sgn(x) != 0) nonzero.push_back(x);
  std::sort(nonzero.begin(), nonzero.end());
  nonzero.erase(std::unique(nonzero.begin(), nonzero.end()), nonzero.end());
  const bool no_zero = std::none_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });
  if (w.empty() || nonzero.empty() || (nonzero.size() == 1 && no_zero)) f.meta.expected_transitive = true;
  else if (nonzero.size() >= 2) f.meta.expected_transitive = false;
  return f;
}

} // namespace

Family build(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::abelian: {
      if (spec.n < 1) throw std::invalid_argument("abelian(n) needs n >= 1");
      Family f{LieAlgebra::Builder(spec.n).build(), InnerProduct::identity(spec.n), {}, {}};
      f.meta.name = "abelian(" + std::to_string(spec.n) + ")";
      f.meta.expected_transitive = true;
      f.meta.expected_certificate = symmetry::Certificate::Status::maximal;
      f.meta.completely_solvable = true;
      return f;
    }
    case Kind::heisenberg_sum: {
      if (spec.n < 3) throw std::invalid_argument("heisenberg_sum(n) needs n >= 3");
      std::vector<std::string> labels{"x", "y", "z"};
      for (std::size_t i = 3; i < spec.n; ++i) labels.push_back("r" + std::to_string(i - 2));
      LieAlgebra::Builder b(labels);
      b.bracket(0, 1, 2, 1);
      Family f{std::move(b).build(), InnerProduct::identity(spec.n), {}, {}};
      f.meta.name = "heisenberg_sum(" + std::to_string(spec.n) + ")";
      f.meta.expected_transitive = true;
      f.meta.expected_certificate = symmetry::Certificate::Status::maximal;
      f.meta.completely_solvable = true;
      return f;
    }
    case Kind::almost_abelian: {
      std::string name = "almost_abelian(";
      for (std::size_t i = 0; i < spec.w.size(); ++i) name += (i ? "," : "") + liemax::to_string(spec.w[i]);
      return almost_abelian(spec.w, name + ")");
    }
    case Kind::borel_hyperbolic: {
      if (spec.n < 1) throw std::invalid_argument("borel_hyperbolic(n) needs n >= 1");
      auto f = almost_abelian(RatVector(spec.n - 1, Rational(1)), "borel_hyperbolic(" + std::to_string(spec.n) + ")");
      f.meta.expected_transitive = true;
      return f;
    }
    case Kind::motion_group_r2: {
      LieAlgebra::Builder b(3);
      b.bracket(0, 2, 1, -1);
      b.bracket(1, 2, 0, 1);
      Family f{std::move(b).build(), InnerProduct::identity(3), {}, {}};
      f.meta.name = "motion_group_r2";
      f.meta.expected_transitive = false;
      f.meta.expected_certificate = symmetry::Certificate::Status::maximal;
      f.meta.completely_solvable = false;
      f.meta.note = "cohomogeneity one with a singular orbit; certified with the v1<->v2, v3->-v3 swap";
      f.extra_generators.push_back(RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
      return f;
    }
    case Kind::complex_hyperbolic: {
      if (spec.n < 1) throw std::invalid_argument("complex_hyperbolic(n) needs n >= 1");
      const std::size_t n = spec.n;
      std::vector<std::string> labels;
      for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
      for (std::size_t i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
      labels.push_back("z");
      labels.push_back("v");
      const std::size_t z = 2 * n, v = 2 * n + 1;
      LieAlgebra::Builder b(labels);
      const Rational half(1, 2);
      for (std::size_t i = 0; i < n; ++i) {
        b.bracket(i, n + i, z, 1);
        b.bracket(i, v, i, half);
        b.bracket(n + i, v, n + i, half);
      }
      b.bracket(z, v, z, 1);
      Family f{std::move(b).build(), InnerProduct::identity(2 * n + 2), {}, {}};
      f.meta.name = "complex_hyperbolic(" + std::to_string(n) + ")";
      f.meta.expected_certificate = symmetry::Certificate::Status::inconclusive;
      f.meta.completely_solvable = true;
      f.meta.note = "maximal metric whose orbit is not isolated; the finite-group certificate cannot decide it";
      return f;
    }
    case Kind::graph: {
      if (!spec.graph) throw std::invalid_argument("graph family needs a graph");
      const auto dg = spec.direction ? graphs::DirectedGraph(*spec.graph, *spec.direction)
                                     : graphs::DirectedGraph::canonical(*spec.graph);
      auto alg = graphs::attach_algebra(dg);
      const std::size_t dim = alg.dim();
      Family f{std::move(alg), InnerProduct::identity(dim), {}, {}};
      const auto& g = *spec.graph;
      f.meta.name = "graph(p=" + std::to_string(g.vertex_count()) + ",q=" + std::to_string(g.edge_count()) + ")";
      f.meta.expected_transitive = g.edge_count() <= 1;
      f.meta.completely_solvable = true;
      if (g.vertex_count() <= graphs::kDefaultVertexLimit && graphs::edge_transitivity_check(g))
        f.meta.expected_certificate = symmetry::Certificate::Status::maximal;
      return f;
    }
  }
  throw std::invalid_argument("unknown family");
}

symmetry::SymmetryGroup default_group(const FamilySpec& spec, const Family& family) {
  symmetry::SymmetryGroup group(family.alg.dim());
  if (spec.kind == Kind::graph) {
    const auto dg = spec.direction ? graphs::DirectedGraph(*spec.graph, *spec.direction)
                                   : graphs::DirectedGraph::canonical(*spec.graph);
    group = graphs::graph_symmetry_group(dg, family.alg);
  } else {
    group = symmetry::sign_diagonal_subgroup(family.alg);
  }
  for (const auto& g : family.extra_generators) group.add(family.alg, g, symmetry::Provenance::user);
  return group;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::abelian: return "abelian";
    case Kind::heisenberg_sum: return "heisenberg-sum";
    case Kind::almost_abelian: return "almost-abelian";
    case Kind::borel_hyperbolic: return "borel-hyperbolic";
    case Kind::motion_group_r2: return "motion-group-r2";
    case Kind::complex_hyperbolic: return "complex-hyperbolic";
    case Kind::graph: return "graph";
  }
  return "unknown";
}

Kind kind_from_string(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '_', '-');
  for (Kind k : {Kind::abelian, Kind::heisenberg_sum, Kind::almost_abelian, Kind::borel_hyperbolic,
                 Kind::motion_group_r2, Kind::complex_hyperbolic, Kind::graph})
    if (to_string(k) == t) return k;
  if (t == "motion-group") return Kind::motion_group_r2;
  if (t == "heisenberg") return Kind::heisenberg_sum;
  throw std::invalid_argument("unknown family '" + s + "'");
}

} // namespace liemax::families
