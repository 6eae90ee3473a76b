#pragma once

#include "liemax/curvature.hpp"
#include "liemax/graph.hpp"
#include "liemax/lie_core.hpp"
#include "liemax/symmetry.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace liemax::io {

using Json = nlohmann::ordered_json;

/// Whole file as text; ParseError when unreadable.
std::string read_file(const std::string& path);

/// {"dim": n, "basis": [...], "brackets": [{"i", "j", "terms": [{"k", "num", "den"}]}]}
/// with 1-based indices. An entry with i < j also fixes [v_j, v_i] unless that
/// pair is listed too; entries with i >= j are taken literally so invalid
/// tables stay representable for validation.
LieAlgebra parse_lie_algebra(const std::string& text);
LieAlgebra parse_lie_algebra(const Json& doc);
inline LieAlgebra parse_lie_algebra(const char* text) { return parse_lie_algebra(std::string(text)); }
Json lie_algebra_to_json(const LieAlgebra& alg);

struct GraphInput {
  graphs::SimpleGraph graph;
  std::optional<std::vector<std::size_t>> direction;  // start vertex per sorted edge
};

/// Text ("p q" header then q lines "u v"; '#' starts a comment) or JSON
/// ({"vertices"?, "edges": [[u, v], ...], "direction"?: [[start, end], ...]}),
/// detected by the first non-blank character.
GraphInput parse_graph(const std::string& text);
GraphInput parse_graph_text(const std::string& text);
GraphInput parse_graph_json(const Json& doc);
std::string graph_to_text(const graphs::SimpleGraph& g);

/// Exact orthogonal automorphisms supplied by the user: a list of matrices
/// (or {"generators": [...]}) whose entries are integers, "p/q" strings or
/// {"num", "den"} objects.
std::vector<RatMatrix> parse_generators(const std::string& text, std::size_t dim);

/// Parses a JSON document, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

Json to_json(const Rational& q);
Json to_json(const RatMatrix& m);
Json to_json(const RatVector& v);
Json to_json(const core::ValidationReport& report, const LieAlgebra& alg);
Json to_json(const symmetry::Certificate& cert);
Json to_json(const core::TransitivityResult& t);
Json to_json(const curvature::RicciData& ric);
Json to_json(const std::optional<curvature::SolitonDecomposition>& sol);

} // namespace liemax::io
