#pragma once

#include "liemax/graph.hpp"
#include "liemax/lie_core.hpp"
#include "liemax/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liemax::families {

enum class Kind {
  abelian,             // R^n
  heisenberg_sum,      // h_3 ⊕ R^{n-3}
  almost_abelian,      // s_w: [v_1, v_i] = w_i v_i
  borel_hyperbolic,    // s_w with w = (1, ..., 1)
  motion_group_r2,     // [v_1, v_3] = -v_2, [v_2, v_3] = v_1
  complex_hyperbolic,  // [x_i, y_i] = z, [x_i, v] = x_i/2, [y_i, v] = y_i/2, [z, v] = z
  graph,               // n_{G_d}
};

struct FamilySpec {
  Kind kind;
  std::size_t n = 0;  // dimension (abelian, heisenberg_sum, borel) or CH^n parameter
  RatVector w;        // almost_abelian: w_2..w_n
  std::optional<graphs::SimpleGraph> graph;
  std::optional<std::vector<std::size_t>> direction;  // start vertices; canonical if absent

  static FamilySpec abelian(std::size_t n) { return {Kind::abelian, n, {}, {}, {}}; }
  static FamilySpec heisenberg_sum(std::size_t n) { return {Kind::heisenberg_sum, n, {}, {}, {}}; }
  static FamilySpec almost_abelian(RatVector w) { return {Kind::almost_abelian, w.size() + 1, std::move(w), {}, {}}; }
  static FamilySpec borel_hyperbolic(std::size_t n) { return {Kind::borel_hyperbolic, n, {}, {}, {}}; }
  static FamilySpec motion_group_r2() { return {Kind::motion_group_r2, 3, {}, {}, {}}; }
  static FamilySpec complex_hyperbolic(std::size_t n) { return {Kind::complex_hyperbolic, n, {}, {}, {}}; }
  static FamilySpec from_graph(graphs::SimpleGraph g) { return {Kind::graph, 0, {}, std::move(g), {}}; }
};

/// Documented expectations; `completely_solvable` is recorded metadata only.
struct Metadata {
  std::string name;
  std::optional<bool> expected_transitive;
  std::optional<symmetry::Certificate::Status> expected_certificate;
  std::optional<RatVector> expected_ricci_diagonal;
  std::optional<bool> completely_solvable;
  std::string note;
};

struct Family {
  LieAlgebra alg;
  InnerProduct ip;
  Metadata meta;
  /// Known orthogonal automorphisms beyond the sign-diagonal subgroup.
  std::vector<RatMatrix> extra_generators;
};

/// Throws std::invalid_argument for out-of-range parameters.
Family build(const FamilySpec& spec);

/// Default certification group: sign diagonals, plus reflections and lifts
/// for graph algebras, plus the family's extra generators.
symmetry::SymmetryGroup default_group(const FamilySpec& spec, const Family& family);

/// diag(-|w|^2, -w_2 a, ..., -w_n a) with a = w_2 + ... + w_n.
RatVector almost_abelian_ricci_diagonal(const RatVector& w);

/// True iff w and w' agree as multisets.
bool w_permutation_equivalence(const RatVector& w, const RatVector& w2);

std::string to_string(Kind k);
/// Accepts "almost-abelian", "almost_abelian", "heisenberg-sum", ... .
Kind kind_from_string(const std::string& s);

} // namespace liemax::families
