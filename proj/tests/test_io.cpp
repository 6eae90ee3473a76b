#include "liemax/errors.hpp"
#include "liemax/families.hpp"
#include "liemax/io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace liemax;
namespace fam = liemax::families;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    io::parse_lie_algebra(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string graph_error_of(const std::string& text) {
  try {
    io::parse_graph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("every built-in family round-trips through JSON") {
  std::vector<fam::FamilySpec> specs = {
      fam::FamilySpec::abelian(3),          fam::FamilySpec::heisenberg_sum(5),
      fam::FamilySpec::almost_abelian({1, 2}), fam::FamilySpec::almost_abelian({Rational(-3, 7), 0, Rational(5, 2)}),
      fam::FamilySpec::borel_hyperbolic(4), fam::FamilySpec::motion_group_r2(),
      fam::FamilySpec::complex_hyperbolic(1), fam::FamilySpec::complex_hyperbolic(2),
      fam::FamilySpec::from_graph(graphs::named::petersen()), fam::FamilySpec::from_graph(graphs::named::path(4))};
  for (const auto& spec : specs) {
    const auto alg = fam::build(spec).alg;
    const auto text = io::lie_algebra_to_json(alg).dump();
    const auto back = io::parse_lie_algebra(text);
    CHECK(back == alg);
    CHECK(back.fingerprint() == alg.fingerprint());
    // Canonical table identical entry by entry via the dense oracle.
    CHECK(oracle::cube(back) == oracle::cube(alg));
  }
}

TEST_CASE("h3 JSON parses with antisymmetric completion") {
  const auto alg = io::parse_lie_algebra(
      R"({"dim":3,"basis":["x","y","z"],"brackets":[{"i":1,"j":2,"terms":[{"k":3,"num":1,"den":1}]}]})");
  CHECK(alg.constant(0, 1, 2) == 1);
  CHECK(alg.constant(1, 0, 2) == -1);
  CHECK(alg.label(2) == "z");
  CHECK(core::validate(alg).ok());
}

TEST_CASE("string rationals and default denominator") {
  const auto alg = io::parse_lie_algebra(
      R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":2,"num":"3","den":"4"}]}]})");
  CHECK(alg.constant(0, 1, 1) == Rational(3, 4));
  const auto alg2 = io::parse_lie_algebra(R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":2,"num":5}]}]})");
  CHECK(alg2.constant(0, 1, 1) == 5);
}

TEST_CASE("listed reverse pair is taken literally") {
  const auto alg = io::parse_lie_algebra(R"({"dim":2,"brackets":[
      {"i":1,"j":2,"terms":[{"k":1,"num":1}]},
      {"i":2,"j":1,"terms":[{"k":1,"num":1}]}]})");
  const auto report = core::validate(alg);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == core::Violation::Kind::antisymmetry);
  // Serialization keeps the broken entry.
  CHECK(io::parse_lie_algebra(io::lie_algebra_to_json(alg).dump()) == alg);
}

TEST_CASE("parse errors carry field or line context") {
  CHECK(parse_error_of(R"({"dim":2,)").find("line") != std::string::npos);
  CHECK(parse_error_of(R"({"brackets":[]})").find("dim") != std::string::npos);
  CHECK(parse_error_of(R"({"dim":2,"brackets":[{"i":1,"j":3,"terms":[]}]})").find("brackets[0].j") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":7,"num":1}]}]})")
            .find("brackets[0].terms[0].k") != std::string::npos);
  CHECK(parse_error_of(R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":1,"num":1,"den":0}]}]})") != "");
  CHECK(parse_error_of(R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[]},{"i":1,"j":2,"terms":[]}]})")
            .find("duplicate") != std::string::npos);
}

TEST_CASE("text graph format") {
  const auto in = io::parse_graph("# path\n4 3\n1 2\n2 3\n3 4\n");
  CHECK(in.graph.vertex_count() == 4);
  CHECK(in.graph.edge_count() == 3);
  CHECK(in.graph.adjacent(1, 2));
  CHECK_FALSE(in.direction.has_value());
  // Round trip.
  const auto back = io::parse_graph(io::graph_to_text(in.graph));
  CHECK(back.graph.edges() == in.graph.edges());
  CHECK(back.graph.labels() == in.graph.labels());
}

TEST_CASE("text graph with named labels keeps isolated vertices") {
  const auto in = io::parse_graph("3 1\na b\n");
  CHECK(in.graph.vertex_count() == 3);
  CHECK(in.graph.edge_count() == 1);
  CHECK(in.graph.labels()[0] == "a");
  CHECK(in.graph.labels()[1] == "b");
}

TEST_CASE("text graph errors name the line") {
  CHECK(graph_error_of("4 3\n1 2\n2 3\n").find("found 2") != std::string::npos);
  CHECK(graph_error_of("4 1\n1 2 3\n").find("line 2") != std::string::npos);
  CHECK(graph_error_of("x y\n").find("line 1") != std::string::npos);
  CHECK(graph_error_of("3 1\n1 1\n") != "");
  CHECK(graph_error_of("3 2\n1 2\n2 1\n") != "");
  CHECK(graph_error_of("") != "");
}

TEST_CASE("JSON graph with explicit direction") {
  const auto in = io::parse_graph(R"({"vertices":3,"edges":[[1,2],[2,3]],"direction":[[2,1],[2,3]]})");
  CHECK(in.graph.vertex_count() == 3);
  REQUIRE(in.direction.has_value());
  CHECK((*in.direction)[0] == 1);
  CHECK((*in.direction)[1] == 1);
  CHECK(graph_error_of(R"({"vertices":3,"edges":[[1,2]],"direction":[[3,1]]})") != "");
}

TEST_CASE("generator files") {
  const auto gens = io::parse_generators(R"([[[1,0],[0,-1]]])", 2);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0](1, 1) == -1);
  const auto gens2 = io::parse_generators(R"({"generators":[[["3/5","-4/5"],["4/5","3/5"]]]})", 2);
  CHECK(gens2[0](0, 0) == Rational(3, 5));
  CHECK_THROWS_AS(io::parse_generators(R"([[[1,0]]])", 2), ParseError);
}

TEST_CASE("report serialization uses exact fractions") {
  CHECK(io::to_json(Rational(-5, 2)) == "-5/2");
  CHECK(io::to_json(Rational(3)) == "3/1");
  const auto alg = fam::build(fam::FamilySpec::almost_abelian({1, 2})).alg;
  const auto j = io::to_json(curvature::ricci_tensor(alg));
  CHECK(j["scal"] == "-14/1");
  CHECK(j["ric_operator"][0][0] == "-5/1");
}
