#include "liemax/curvature.hpp"
#include "liemax/errors.hpp"
#include "liemax/graph_algebra.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace liemax;
using namespace liemax::graphs;
using symmetry::Certificate;

namespace {

LieAlgebra algebra(const SimpleGraph& g) { return attach_algebra(DirectedGraph::canonical(g)); }

std::size_t nonzero_pairs(const LieAlgebra& alg) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) count += !alg.bracket_basis(i, j).empty();
  return count;
}

} // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedGraph(named::path(3), {2, 0}), std::invalid_argument);
  const SimpleGraph g(4, {{2, 3}, {0, 1}});
  CHECK(g.edges().front() == Edge{0, 1});
}

TEST_CASE("attached algebras") {
  const auto k2 = algebra(named::complete(2));
  CHECK(k2.dim() == 3);
  CHECK(k2.constant(0, 1, 2) == 1);
  CHECK(core::validate(k2).ok());
  CHECK(algebra(named::empty(4)).is_abelian());
  const auto k3 = algebra(named::complete(3));
  CHECK(k3.dim() == 6);
  CHECK(nonzero_pairs(k3) == 3);
  CHECK(core::validate(k3).ok());
  for (const auto& g : {named::petersen(), named::cycle(6), named::star(4)}) {
    const auto alg = algebra(g);
    CHECK(core::validate(alg).ok());
    CHECK(core::unimodularity_check(alg));
    CHECK(nonzero_pairs(alg) == g.edge_count());
  }
  CHECK(algebra(named::complete(3)).label(3) == "1-2");
}

TEST_CASE("vertex reflections") {
  const auto k2 = DirectedGraph::canonical(named::complete(2));
  CHECK(vertex_reflection(k2, 0) == RatMatrix::diagonal({-1, 1, -1}));
  CHECK(vertex_reflection(k2, 1) == RatMatrix::diagonal({1, -1, -1}));
  const auto iso = DirectedGraph::canonical(SimpleGraph(3, {{0, 1}}));
  CHECK(vertex_reflection(iso, 2) == RatMatrix::diagonal({1, 1, -1, 1}));
  const auto c4 = DirectedGraph::canonical(named::cycle(4));
  const auto alg = attach_algebra(c4);
  const auto group = vertex_reflections(c4);
  CHECK(group.size() == 4);
  for (std::size_t v = 0; v < 4; ++v) {
    const auto r = vertex_reflection(c4, v);
    std::size_t negated_edges = 0;
    for (std::size_t e = 4; e < 8; ++e) negated_edges += r(e, e) == -1;
    CHECK(negated_edges == 2);
    CHECK(symmetry::is_orthogonal_automorphism(alg, r));
  }
}

TEST_CASE("automorphism counts against brute force") {
  CHECK(graph_automorphisms(named::complete(4)).size() == 24);
  CHECK(graph_automorphisms(named::path(4)).size() == 2);
  CHECK(graph_automorphisms(named::petersen()).size() == 120);
  CHECK(oracle::brute_force_automorphism_count(named::petersen()) == 120);
  for (const auto& g : {named::cycle(6), named::star(4), named::path(5), SimpleGraph(6, {{0, 1}, {1, 2}, {3, 4}}),
                        SimpleGraph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 3}})})
    CHECK(graph_automorphisms(g).size() == oracle::brute_force_automorphism_count(g));
  for (const auto& a : graph_automorphisms(named::petersen())) CHECK(oracle::is_graph_automorphism(named::petersen(), a.vertex));
}

TEST_CASE("automorphism limits") {
  CHECK_THROWS_AS(graph_automorphisms(named::complete(6), 100), LimitExceeded);
  CHECK_THROWS_AS(graph_automorphisms(named::empty(13)), LimitExceeded);
  CHECK(graph_automorphisms(named::path(13), kDefaultAutomorphismCap, 13).size() == 2);
}

TEST_CASE("edge transitivity") {
  CHECK(edge_transitivity_check(named::complete(4)));
  CHECK_FALSE(edge_transitivity_check(named::path(4)));
  CHECK(edge_transitivity_check(named::cycle(5)));
  CHECK(edge_transitivity_check(named::petersen()));
  CHECK(edge_transitivity_check(named::empty(3)));
  const auto orbits = edge_orbits(named::path(4), graph_automorphisms(named::path(4)));
  // Edges sorted: {1,2}=0, {2,3}=1, {3,4}=2.
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<std::size_t>{0, 2});
  CHECK(orbits[1] == std::vector<std::size_t>{1});
}

TEST_CASE("lifted automorphisms") {
  const auto k2 = DirectedGraph::canonical(named::complete(2));
  const auto autos = graph_automorphisms(k2.graph());
  REQUIRE(autos.size() == 2);
  const auto id = lift_automorphism(k2, autos[0]);
  CHECK(id == RatMatrix::identity(3));
  const auto swap = lift_automorphism(k2, autos[1]);
  CHECK(swap == RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});

  // C3 directed 1->2->3->1: the rotation preserves the direction.
  const auto c3 = named::cycle(3);  // edges {0,1}, {0,2}, {1,2}
  const DirectedGraph uniform(c3, {0, 2, 1});
  GraphAutomorphism rot{{1, 2, 0}, {}};
  for (std::size_t e = 0; e < 3; ++e) {
    const auto [a, b] = c3.edges()[e];
    rot.edge.push_back(*c3.edge_index(rot.vertex[a], rot.vertex[b]));
  }
  const auto lifted = lift_automorphism(uniform, rot);
  for (std::size_t e = 3; e < 6; ++e)
    for (std::size_t f = 3; f < 6; ++f) CHECK(lifted(e, f) >= 0);

  for (const auto& g : {named::petersen(), named::path(4), named::star(3)}) {
    const auto dg = DirectedGraph::from_mask(g, 0b1011);
    const auto alg = attach_algebra(dg);
    for (const auto& a : graph_automorphisms(g)) CHECK(symmetry::is_orthogonal_automorphism(alg, lift_automorphism(dg, a)));
  }
}

TEST_CASE("lifts compose up to signs") {
  const auto g = named::cycle(5);
  const auto dg = DirectedGraph::from_mask(g, 0b00110);
  const auto autos = graph_automorphisms(g);
  for (const auto& a : autos)
    for (const auto& b : autos) {
      const auto prod = lift_automorphism(dg, a) * lift_automorphism(dg, b);
      GraphAutomorphism ab{std::vector<std::size_t>(5), std::vector<std::size_t>(5)};
      for (std::size_t v = 0; v < 5; ++v) ab.vertex[v] = a.vertex[b.vertex[v]];
      for (std::size_t e = 0; e < 5; ++e) ab.edge[e] = a.edge[b.edge[e]];
      const auto lifted = lift_automorphism(dg, ab);
      for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) CHECK(abs(prod(i, j)) == abs(lifted(i, j)));
    }
}

TEST_CASE("isomorphism") {
  const SimpleGraph c5 = named::cycle(5);
  const SimpleGraph relabeled({"a", "b", "c", "d", "e"}, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(graph_isomorphic(c5, relabeled).has_value());
  CHECK_FALSE(graph_isomorphic(c5, named::path(5)).has_value());
  // A 4-vertex, 6-edge simple graph is K4.
  const SimpleGraph six(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(graph_isomorphic(six, named::complete(4)).has_value());
  const auto w = graph_isomorphic(named::petersen(), named::petersen());
  REQUIRE(w);
}

TEST_CASE("isomorphic graphs give identical Ricci spectra and statuses") {
  const SimpleGraph a(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  const SimpleGraph b(5, {{4, 3}, {3, 2}, {2, 0}, {3, 1}});
  REQUIRE(graph_isomorphic(a, b));
  const auto da = DirectedGraph::canonical(a), db = DirectedGraph::canonical(b);
  const auto alga = attach_algebra(da), algb = attach_algebra(db);
  CHECK(curvature::ricci_spectrum(curvature::ricci_tensor(alga)) == curvature::ricci_spectrum(curvature::ricci_tensor(algb)));
  CHECK(symmetry::maximality_certificate(alga, graph_symmetry_group(da, alga)).status ==
        symmetry::maximality_certificate(algb, graph_symmetry_group(db, algb)).status);
}

TEST_CASE("direction independence") {
  const auto k2 = direction_independence_check(named::complete(2));
  CHECK(k2.directions_checked == 2);
  CHECK(k2.consistent());
  const auto c3 = direction_independence_check(named::cycle(3));
  CHECK(c3.directions_checked == 8);
  CHECK(c3.consistent());
  for (const auto& o : c3.outcomes) CHECK(o.status == Certificate::Status::maximal);
  const auto star = direction_independence_check(named::star(3), false);
  CHECK(star.directions_checked == 8);
  CHECK(star.consistent());
  CHECK_THROWS_AS(direction_independence_check(named::complete(5)), LimitExceeded);
}

TEST_CASE("named graphs") {
  CHECK(named::by_name("k4").edge_count() == 6);
  CHECK(named::by_name("complete:4").edge_count() == 6);
  CHECK(named::by_name("c5").edge_count() == 5);
  CHECK(named::by_name("petersen").edge_count() == 15);
  CHECK(named::by_name("star:3").vertex_count() == 4);
  CHECK(named::by_name("p4").edge_count() == 3);
  CHECK_THROWS_AS(named::by_name("nope"), std::invalid_argument);
  for (std::size_t v = 0; v < 10; ++v) CHECK(named::petersen().degree(v) == 3);
}
