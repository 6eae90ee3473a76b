#include "liemax/io.hpp"

#include "liemax/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace liemax::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    const auto pos = what.find("parse error");
    throw ParseError(pos == std::string::npos ? what : what.substr(pos));
  }
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) { throw ParseError(field + ": " + msg); }

long long require_int(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) fail(where + "." + key, "must be an integer");
  return v.get<long long>();
}

mpz_class json_integer(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()));
    return mpz_class(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) fail(where, "not an integer: '" + s + "'");
    return z;
  }
  fail(where, "must be an integer");
}

Rational json_rational(const Json& v, const std::string& where) {
  if (v.is_object()) {
    if (!v.contains("num")) fail(where, "missing \"num\"");
    const mpz_class num = json_integer(v.at("num"), where + ".num");
    const mpz_class den = v.contains("den") ? json_integer(v.at("den"), where + ".den") : mpz_class(1);
    if (den == 0) fail(where + ".den", "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(json_integer(v, where));
  fail(where, "expected an integer, \"p/q\" string or {num, den} object");
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

} // namespace

LieAlgebra parse_lie_algebra(const std::string& text) { return parse_lie_algebra(parse_json(text)); }

LieAlgebra parse_lie_algebra(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const long long dim = require_int(doc, "dim", "document");
  if (dim < 1) fail("dim", "must be positive");
  const auto n = static_cast<std::size_t>(dim);

  std::vector<std::string> labels = default_labels(n);
  if (doc.contains("basis")) {
    const Json& b = doc.at("basis");
    if (!b.is_array() || b.size() != n) fail("basis", "must be an array of " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) fail("basis[" + std::to_string(i) + "]", "must be a string");
      labels[i] = b[i].get<std::string>();
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != n) fail("basis", "labels must be distinct");
  }

  std::map<std::pair<std::size_t, std::size_t>, SparseVec> entries;
  if (doc.contains("brackets")) {
    const Json& list = doc.at("brackets");
    if (!list.is_array()) fail("brackets", "must be an array");
    for (std::size_t e = 0; e < list.size(); ++e) {
      const std::string where = "brackets[" + std::to_string(e) + "]";
      const Json& br = list[e];
      const long long i = require_int(br, "i", where), j = require_int(br, "j", where);
      if (i < 1 || i > dim) fail(where + ".i", "index out of range 1.." + std::to_string(dim));
      if (j < 1 || j > dim) fail(where + ".j", "index out of range 1.." + std::to_string(dim));
      const std::pair<std::size_t, std::size_t> key(i - 1, j - 1);
      if (entries.count(key)) fail(where, "duplicate bracket (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!br.contains("terms") || !br.at("terms").is_array()) fail(where, "missing \"terms\" array");
      RatVector dense(n);
      const Json& terms = br.at("terms");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + ".terms[" + std::to_string(t) + "]";
        const long long k = require_int(terms[t], "k", tw);
        if (k < 1 || k > dim) fail(tw + ".k", "index out of range 1.." + std::to_string(dim));
        dense[k - 1] += json_rational(terms[t], tw);
      }
      entries[key] = to_sparse(dense);
    }
  }

  LieAlgebra::Builder builder(labels);
  for (const auto& [key, value] : entries) {
    const auto [i, j] = key;
    const bool mirrored = entries.count({j, i}) > 0;
    if (i < j && !mirrored) builder.bracket(i, j, value);
    else if (i > j && !mirrored) {
      SparseVec neg = value;
      for (auto& [k, c] : neg) c = -c;
      builder.bracket(j, i, neg);
    } else builder.raw(i, j, value);
  }
  return std::move(builder).build();
}

Json lie_algebra_to_json(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Json brackets = Json::array();
  auto emit = [&](std::size_t i, std::size_t j) {
    Json terms = Json::array();
    for (const auto& [k, c] : alg.bracket_basis(i, j)) {
      Json term;
      term["k"] = k + 1;
      term["num"] = c.get_num().get_str();
      term["den"] = c.get_den().get_str();
      // Small values as plain integers keep files readable.
      if (c.get_num().fits_slong_p()) term["num"] = c.get_num().get_si();
      if (c.get_den().fits_slong_p()) term["den"] = c.get_den().get_si();
      terms.push_back(term);
    }
    Json br;
    br["i"] = i + 1;
    br["j"] = j + 1;
    br["terms"] = terms;
    brackets.push_back(br);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!alg.bracket_basis(i, j).empty()) emit(i, j);
  // Entries that break antisymmetry are written literally.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      SparseVec neg = alg.bracket_basis(j, i);
      for (auto& [k, c] : neg) c = -c;
      if (alg.bracket_basis(i, j) != (i == j ? SparseVec{} : neg)) emit(i, j);
    }
  Json doc;
  doc["dim"] = n;
  doc["basis"] = alg.labels();
  doc["brackets"] = brackets;
  return doc;
}

namespace {

bool is_index_label(const std::string& s, std::size_t p) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    return false;
  const auto v = std::stoul(s);
  return v >= 1 && v <= p && std::to_string(v) == s;
}

struct LabelTable {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
};

// Integer labels 1..p name the vertices directly; otherwise labels are
// numbered by first appearance and missing isolated vertices are padded.
LabelTable resolve_labels(const std::vector<std::string>& seen, std::size_t p) {
  LabelTable t;
  if (std::all_of(seen.begin(), seen.end(), [&](const std::string& s) { return is_index_label(s, p); })) {
    for (std::size_t i = 1; i <= p; ++i) t.labels.push_back(std::to_string(i));
  } else {
    for (const auto& s : seen)
      if (!t.index.count(s)) {
        t.index[s] = t.labels.size();
        t.labels.push_back(s);
      }
    for (std::size_t k = 1; t.labels.size() < p; ++k) {
      const std::string s = "v" + std::to_string(k);
      if (!t.index.count(s)) {
        t.index[s] = t.labels.size();
        t.labels.push_back(s);
      }
    }
  }
  t.index.clear();
  for (std::size_t i = 0; i < t.labels.size(); ++i) t.index[t.labels[i]] = i;
  return t;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

} // namespace

GraphInput parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<std::pair<std::string, std::string>> raw;
  std::vector<std::size_t> raw_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": expected two fields, got '" + line + "'");
    if (!header) {
      try {
        std::size_t pa = 0, pb = 0;
        const long long p = std::stoll(a, &pa), q = std::stoll(b, &pb);
        if (pa != a.size() || pb != b.size() || p < 0 || q < 0) throw std::invalid_argument("");
        header = {p, q};
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": header must be 'p q' with non-negative integers");
      }
      continue;
    }
    raw.emplace_back(a, b);
    raw_lines.push_back(lineno);
  }
  if (!header) throw ParseError("line 1: missing 'p q' header");
  const auto p = static_cast<std::size_t>(header->first);
  if (raw.size() != static_cast<std::size_t>(header->second))
    throw ParseError("line " + std::to_string(lineno) + ": header declares " + std::to_string(header->second) +
                     " edges, found " + std::to_string(raw.size()));
  std::vector<std::string> seen;
  for (const auto& [a, b] : raw) {
    seen.push_back(a);
    seen.push_back(b);
  }
  const LabelTable table = resolve_labels(seen, p);
  if (table.labels.size() != p)
    throw ParseError("line 1: header declares " + std::to_string(p) + " vertices, edges use " +
                     std::to_string(table.labels.size()));
  std::vector<graphs::Edge> edges;
  std::vector<std::size_t> starts;
  std::set<graphs::Edge> dup;
  for (std::size_t e = 0; e < raw.size(); ++e) {
    const std::size_t u = table.index.at(raw[e].first), v = table.index.at(raw[e].second);
    const std::string where = "line " + std::to_string(raw_lines[e]);
    if (u == v) throw ParseError(where + ": loop at vertex '" + raw[e].first + "'");
    const graphs::Edge edge{std::min(u, v), std::max(u, v)};
    if (!dup.insert(edge).second) throw ParseError(where + ": duplicate edge");
    edges.push_back(edge);
  }
  return {graphs::SimpleGraph(table.labels, edges), std::nullopt};
}

namespace {

std::string label_of(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(where + ": vertex label must be a string or integer");
}

} // namespace

GraphInput parse_graph_json(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) fail("document", "missing \"edges\" array");
  const Json& list = doc.at("edges");
  std::vector<std::pair<std::string, std::string>> raw;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    if (!list[e].is_array() || list[e].size() != 2) fail(where, "must be a pair [u, v]");
    raw.emplace_back(label_of(list[e][0], where), label_of(list[e][1], where));
  }
  LabelTable table;
  if (doc.contains("vertices")) {
    const Json& vs = doc.at("vertices");
    if (vs.is_number_integer()) {
      if (vs.get<long long>() < 0) fail("vertices", "must be non-negative");
      std::vector<std::string> seen;
      for (const auto& [a, b] : raw) seen.insert(seen.end(), {a, b});
      table = resolve_labels(seen, vs.get<std::size_t>());
      if (table.labels.size() != vs.get<std::size_t>()) fail("vertices", "edges use more vertices than declared");
    } else if (vs.is_array()) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string s = label_of(vs[i], "vertices[" + std::to_string(i) + "]");
        if (table.index.count(s)) fail("vertices", "duplicate label '" + s + "'");
        table.index[s] = table.labels.size();
        table.labels.push_back(s);
      }
    } else {
      fail("vertices", "must be a count or an array of labels");
    }
  } else {
    std::vector<std::string> seen;
    for (const auto& [a, b] : raw) seen.insert(seen.end(), {a, b});
    table = resolve_labels(seen, 0);
  }
  std::vector<graphs::Edge> edges;
  std::set<graphs::Edge> dup;
  for (std::size_t e = 0; e < raw.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    for (const auto& s : {raw[e].first, raw[e].second})
      if (!table.index.count(s)) fail(where, "unknown vertex '" + s + "'");
    const std::size_t u = table.index.at(raw[e].first), v = table.index.at(raw[e].second);
    if (u == v) fail(where, "loop at vertex '" + raw[e].first + "'");
    const graphs::Edge edge{std::min(u, v), std::max(u, v)};
    if (!dup.insert(edge).second) fail(where, "duplicate edge");
    edges.push_back(edge);
  }
  graphs::SimpleGraph g(table.labels, edges);
  GraphInput out{g, std::nullopt};
  if (doc.contains("direction")) {
    const Json& dir = doc.at("direction");
    if (!dir.is_array() || dir.size() != g.edge_count())
      fail("direction", "must list one [start, end] pair per edge");
    std::vector<std::size_t> start(g.edge_count(), g.vertex_count());
    for (std::size_t e = 0; e < dir.size(); ++e) {
      const std::string where = "direction[" + std::to_string(e) + "]";
      if (!dir[e].is_array() || dir[e].size() != 2) fail(where, "must be a pair [start, end]");
      const std::string a = label_of(dir[e][0], where), b = label_of(dir[e][1], where);
      if (!table.index.count(a) || !table.index.count(b)) fail(where, "unknown vertex");
      const auto idx = g.edge_index(table.index.at(a), table.index.at(b));
      if (!idx) fail(where, "not an edge of the graph");
      if (start[*idx] != g.vertex_count()) fail(where, "edge directed twice");
      start[*idx] = table.index.at(a);
    }
    out.direction = start;
  }
  return out;
}

GraphInput parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(parse_json(text));
  return parse_graph_text(text);
}

std::string graph_to_text(const graphs::SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << g.labels()[a] << ' ' << g.labels()[b] << '\n';
  return out.str();
}

std::vector<RatMatrix> parse_generators(const std::string& text, std::size_t dim) {
  const Json doc = parse_json(text);
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("generators")) fail("document", "missing \"generators\"");
    list = &doc.at("generators");
  }
  if (!list->is_array()) fail("generators", "must be an array of matrices");
  std::vector<RatMatrix> out;
  for (std::size_t g = 0; g < list->size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    const Json& rows = (*list)[g];
    if (!rows.is_array() || rows.size() != dim) fail(where, "must have " + std::to_string(dim) + " rows");
    RatMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::string rw = where + "[" + std::to_string(r) + "]";
      if (!rows[r].is_array() || rows[r].size() != dim) fail(rw, "must have " + std::to_string(dim) + " entries");
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = json_rational(rows[r][c], rw + "[" + std::to_string(c) + "]");
    }
    out.push_back(std::move(m));
  }
  return out;
}

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_fraction_string(x));
  return out;
}

Json to_json(const core::ValidationReport& report, const LieAlgebra& alg) {
  Json out;
  out["ok"] = report.ok();
  Json list = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    if (v.kind == core::Violation::Kind::antisymmetry) {
      item["identity"] = "antisymmetry";
      item["pair"] = {v.i + 1, v.j + 1};
      item["labels"] = {alg.label(v.i), alg.label(v.j)};
    } else {
      item["identity"] = "jacobi";
      item["triple"] = {v.i + 1, v.j + 1, v.k + 1};
      item["labels"] = {alg.label(v.i), alg.label(v.j), alg.label(v.k)};
    }
    list.push_back(item);
  }
  out["violations"] = list;
  return out;
}

Json to_json(const symmetry::Certificate& cert) {
  Json out;
  out["status"] = symmetry::to_string(cert.status);
  out["dim_normal"] = cert.dim_normal;
  out["dim_invariant"] = cert.dim_invariant;
  out["dim_invariant_normal"] = cert.dim_invariant_normal;
  out["witness"] = cert.witness ? to_json(cert.witness->matrix()) : Json(nullptr);
  out["group"] = {{"generators", cert.generator_count}, {"provenance", cert.provenance}};
  out["algebra_hash"] = cert.algebra_hash;
  return out;
}

Json to_json(const core::TransitivityResult& t) {
  Json out;
  out["transitive"] = t.transitive;
  out["codimension"] = t.codimension;
  out["tangent_dim"] = t.tangent_dim;
  return out;
}

Json to_json(const curvature::RicciData& ric) {
  Json out;
  out["ric_operator"] = to_json(ric.ric_operator);
  out["scal"] = to_fraction_string(ric.scal);
  return out;
}

Json to_json(const std::optional<curvature::SolitonDecomposition>& sol) {
  Json out;
  out["soliton"] = sol.has_value() && sol->residual_zero;
  if (sol) {
    out["c"] = to_fraction_string(sol->c);
    out["derivation"] = to_json(sol->derivation);
  }
  return out;
}

} // namespace liemax::io
