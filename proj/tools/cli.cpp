#include "cli.hpp"

#include "liemax/curvature.hpp"
#include "liemax/errors.hpp"
#include "liemax/families.hpp"
#include "liemax/flows.hpp"
#include "liemax/graph_algebra.hpp"
#include "liemax/io.hpp"
#include "liemax/symmetry.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace liemax::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

/// Input that parsed but failed a mathematical check.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string family;
  std::string w;
  std::size_t n = 0;
  std::string graph;
  std::string named_graph;
  std::string generators;
};

struct CommonOptions {
  std::string out;
  std::string format = "json";
  std::size_t jobs = 1;
  std::size_t limit_aut = graphs::kDefaultAutomorphismCap;
  std::size_t limit_group = symmetry::kDefaultGroupCap;
  std::size_t limit_vertices = graphs::kDefaultVertexLimit;
  double tol_flow = flows::kSelfSimilarityTolerance;
  bool timing = false;
};

struct GroupFlags {
  bool no_sign = false;
  bool no_reflections = false;
  bool no_lifts = false;
};

struct Loaded {
  std::string source;
  LieAlgebra alg;
  std::optional<families::FamilySpec> spec;  // graph or built-in family
  std::vector<RatMatrix> extra;              // family and user generators
};

RatVector parse_w(const std::string& text) {
  RatVector w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError("--w: " + std::string(e.what()));
    }
  }
  return w;
}

graphs::SimpleGraph graph_from_named(const std::string& name) {
  try {
    return graphs::named::by_name(name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("--named-graph: ") + e.what());
  }
}

Loaded from_graph(io::GraphInput in, std::string source) {
  auto spec = families::FamilySpec::from_graph(std::move(in.graph));
  spec.direction = std::move(in.direction);
  auto fam = families::build(spec);
  return {std::move(source), std::move(fam.alg), std::move(spec), {}};
}

Loaded load_file(const std::string& path) {
  const std::string text = io::read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return from_graph(io::parse_graph_text(text), path);
  const Json doc = io::parse_json(text);
  if (doc.contains("edges")) return from_graph(io::parse_graph_json(doc), path);
  Loaded l{path, io::parse_lie_algebra(doc), std::nullopt, {}};
  if (doc.contains("generators")) l.extra = io::parse_generators(doc.dump(), l.alg.dim());
  return l;
}

Loaded load(const InputOptions& in) {
  const int sources = !in.path.empty() + !in.graph.empty() + !in.named_graph.empty() +
                      (!in.family.empty() && families::kind_from_string(in.family) != families::Kind::graph);
  if (sources == 0) throw ParseError("no input: give a file, --family, --graph or --named-graph");
  if (sources > 1) throw ParseError("more than one input given");
  Loaded l;
  if (!in.graph.empty()) l = from_graph(io::parse_graph(io::read_file(in.graph)), in.graph);
  else if (!in.named_graph.empty()) l = from_graph({graph_from_named(in.named_graph), std::nullopt}, in.named_graph);
  else if (!in.path.empty()) l = load_file(in.path);
  else {
    using families::Kind;
    using families::FamilySpec;
    const Kind kind = families::kind_from_string(in.family);
    FamilySpec spec = FamilySpec::abelian(in.n);
    switch (kind) {
      case Kind::abelian: spec = FamilySpec::abelian(in.n); break;
      case Kind::heisenberg_sum: spec = FamilySpec::heisenberg_sum(in.n ? in.n : 3); break;
      case Kind::almost_abelian:
        if (in.w.empty()) throw ParseError("--family almost-abelian needs --w");
        spec = FamilySpec::almost_abelian(parse_w(in.w));
        break;
      case Kind::borel_hyperbolic: spec = FamilySpec::borel_hyperbolic(in.n); break;
      case Kind::motion_group_r2: spec = FamilySpec::motion_group_r2(); break;
      case Kind::complex_hyperbolic: spec = FamilySpec::complex_hyperbolic(in.n ? in.n : 1); break;
      case Kind::graph: break;  // handled above
    }
    auto fam = families::build(spec);
    l = {fam.meta.name, std::move(fam.alg), spec, std::move(fam.extra_generators)};
  }
  if (l.spec && l.spec->kind != families::Kind::graph && l.extra.empty())
    l.extra = families::build(*l.spec).extra_generators;
  if (!in.generators.empty()) {
    auto user = io::parse_generators(io::read_file(in.generators), l.alg.dim());
    l.extra.insert(l.extra.end(), user.begin(), user.end());
  }
  return l;
}

void require_valid(const Loaded& l) {
  const auto report = core::validate(l.alg);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw ValidationFailure(std::string("input is not a Lie algebra: ") +
                            (v.kind == core::Violation::Kind::antisymmetry ? "antisymmetry" : "Jacobi") +
                            " fails at (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) +
                            (v.kind == core::Violation::Kind::jacobi ? "," + std::to_string(v.k + 1) : "") + ")");
  }
}

symmetry::SymmetryGroup make_group(const Loaded& l, const GroupFlags& flags, const CommonOptions& common) {
  symmetry::SymmetryGroup group(l.alg.dim());
  if (l.spec && l.spec->kind == families::Kind::graph) {
    const auto dg = l.spec->direction ? graphs::DirectedGraph(*l.spec->graph, *l.spec->direction)
                                      : graphs::DirectedGraph::canonical(*l.spec->graph);
    graphs::GraphGroupOptions opts;
    opts.sign_diagonal = !flags.no_sign;
    opts.reflections = !flags.no_reflections;
    opts.lifts = !flags.no_lifts;
    opts.automorphism_cap = common.limit_aut;
    opts.vertex_limit = common.limit_vertices;
    group = graphs::graph_symmetry_group(dg, l.alg, opts);
  } else if (!flags.no_sign) {
    group = symmetry::sign_diagonal_subgroup(l.alg);
  }
  for (const auto& g : l.extra) {
    try {
      group.add(l.alg, g, symmetry::Provenance::user);
    } catch (const std::invalid_argument& e) {
      throw ValidationFailure(std::string("user generator rejected: ") + e.what());
    }
  }
  return group;
}

Json header(const std::string& command, const Loaded& l) {
  Json j;
  j["tool"] = "liemax";
  j["version"] = kVersion;
  j["command"] = command;
  j["input"] = {{"source", l.source}, {"dim", l.alg.dim()}, {"fingerprint", l.alg.fingerprint()}};
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Top-level result fields as a header line plus one row.
std::string result_csv(const Json& result) {
  std::string head, row;
  for (auto it = result.begin(); it != result.end(); ++it) {
    if (!head.empty()) head += ',', row += ',';
    head += csv_field(it.key());
    row += csv_field(scalar_text(it.value()));
  }
  return head + "\n" + row + "\n";
}

void emit_text(const std::string& text, const CommonOptions& common, std::ostream& out) {
  if (common.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(common.out, std::ios::binary);
  if (!f) throw ParseError(common.out + ": cannot write file");
  f << text;
}

void emit(Json report, const CommonOptions& common, std::ostream& out,
          std::chrono::steady_clock::time_point start) {
  if (common.timing)
    report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (common.format == "csv") emit_text(result_csv(report["result"]), common, out);
  else emit_text(report.dump(2) + "\n", common, out);
}

Json reversibility_json(const symmetry::ReversibilityResult& r) {
  using S = symmetry::ReversibilityResult::Status;
  Json j;
  j["status"] = r.status == S::reversible ? "reversible" : r.status == S::failing ? "failing" : "undecided";
  if (r.status == S::failing) j["pair"] = {r.first + 1, r.second + 1};
  j["explored"] = r.explored;
  return j;
}

const graphs::SimpleGraph& require_graph(const Loaded& l) {
  if (!l.spec || l.spec->kind != families::Kind::graph) throw ParseError("this command needs a graph input");
  return *l.spec->graph;
}

// ---- batch ----------------------------------------------------------------

struct BatchRow {
  std::string name, dim, status, dim_normal, edge_transitive, soliton;
  Json report;
};

BatchRow batch_item(const fs::path& file, const CommonOptions& common) {
  BatchRow row;
  row.name = file.filename().string();
  try {
    const Loaded l = load_file(file.string());
    require_valid(l);
    const auto group = make_group(l, {}, common);
    const auto der = core::derivation_algebra(l.alg);
    const auto cert = symmetry::maximality_certificate(l.alg, group, core::scaled_derivation_algebra(l.alg, der));
    const auto ric = curvature::ricci_tensor(l.alg);
    const auto sol = curvature::ricci_soliton_check(l.alg, ric, der);
    row.dim = std::to_string(l.alg.dim());
    row.status = symmetry::to_string(cert.status);
    row.dim_normal = std::to_string(cert.dim_normal);
    row.soliton = sol && sol->residual_zero ? "true" : "false";
    row.report = header("batch", l);
    row.report["input"]["source"] = row.name;
    row.report["result"] = {{"certificate", io::to_json(cert)}, {"soliton", io::to_json(sol)}};
    if (l.spec && l.spec->kind == families::Kind::graph) {
      const bool et = graphs::edge_transitivity_check(*l.spec->graph, common.limit_aut, common.limit_vertices);
      row.edge_transitive = et ? "true" : "false";
      row.report["result"]["edge_transitive"] = et;
    }
  } catch (const std::exception& e) {
    row.dim = row.dim_normal = row.edge_transitive = row.soliton = "";
    row.status = "ERROR";
    row.report = {{"tool", "liemax"}, {"version", kVersion}, {"command", "batch"}, {"input", {{"source", row.name}}},
                  {"error", e.what()}};
  }
  return row;
}

int cmd_batch(const std::string& dir, const std::string& reports, const CommonOptions& common, std::ostream& out) {
  if (!fs::is_directory(dir)) throw ParseError(dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.') files.push_back(entry.path());
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  std::vector<BatchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = batch_item(files[i], common);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(common.jobs, files.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (!reports.empty()) {
    fs::create_directories(reports);
    for (const auto& r : rows) {
      std::ofstream f(fs::path(reports) / (r.name + ".json"), std::ios::binary);
      if (!f) throw ParseError(reports + ": cannot write reports");
      f << r.report.dump(2) << "\n";
    }
  }
  std::string csv = "name,dim,status,dim_normal,edge_transitive,soliton\n";
  for (const auto& r : rows)
    csv += csv_field(r.name) + "," + r.dim + "," + r.status + "," + r.dim_normal + "," + r.edge_transitive + "," +
           r.soliton + "\n";
  emit_text(csv, common, out);
  return kOk;
}

// ---- flows ----------------------------------------------------------------

Eigen::MatrixXd read_float_matrix(const std::string& path, std::size_t n) {
  const Json doc = io::parse_json(io::read_file(path));
  if (!doc.is_array() || doc.size() != n) throw ParseError(path + ": expected " + std::to_string(n) + " rows");
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!doc[i].is_array() || doc[i].size() != n)
      throw ParseError(path + ": row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const Json& v = doc[i][j];
      if (v.is_number()) m(i, j) = v.get<double>();
      else if (v.is_string()) {
        try {
          m(i, j) = parse_rational(v.get<std::string>()).get_d();
        } catch (const std::invalid_argument& e) {
          throw ParseError(path + ": entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what());
        }
      } else throw ParseError(path + ": entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not a number");
    }
  }
  return m;
}

std::string trajectory_csv(const flows::FlowTrajectory& traj, std::size_t n) {
  std::ostringstream s;
  s.precision(17);
  s << "t";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s << ",g" << i + 1 << "_" << j + 1;
  for (std::size_t i = 0; i < n; ++i) s << ",ev" << i + 1;
  s << ",scal\n";
  for (const auto& smp : traj.samples) {
    s << smp.t;
    for (Eigen::Index i = 0; i < smp.gram.rows(); ++i)
      for (Eigen::Index j = 0; j < smp.gram.cols(); ++j) s << ',' << smp.gram(i, j);
    for (Eigen::Index i = 0; i < smp.eigenvalues.size(); ++i) s << ',' << smp.eigenvalues(i);
    s << ',' << smp.scal << '\n';
  }
  return s.str();
}

struct FlowOptions {
  double a = 2.0, b = 0.0, t_end = 1.0, step = 1e-3;
  std::string normalize = "unit_determinant";
  std::size_t sample_every = 10;
  std::string g0;
  std::string trajectory;
};

void add_input(CLI::App* app, InputOptions& in) {
  app->add_option("input", in.path, "Lie algebra JSON or graph file");
  app->add_option("--family", in.family, "built-in family (abelian, heisenberg-sum, almost-abelian, ...)");
  app->add_option("--w", in.w, "comma-separated rationals for almost-abelian");
  app->add_option("--n", in.n, "dimension parameter for a family");
  app->add_option("--graph", in.graph, "graph file (text or JSON)");
  app->add_option("--named-graph", in.named_graph, "named graph, e.g. k4, c5, petersen, star:3");
  app->add_option("--generators", in.generators, "JSON file of extra orthogonal automorphisms");
}

void add_common(CLI::App* app, CommonOptions& c) {
  app->add_option("--out", c.out, "write the report to this file");
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--jobs", c.jobs, "parallel inputs for batch")->check(CLI::PositiveNumber);
  app->add_option("--limit-aut", c.limit_aut, "graph automorphism cap");
  app->add_option("--limit-group", c.limit_group, "group element cap for 2-reversibility");
  app->add_option("--limit-vertices", c.limit_vertices, "vertex limit for automorphism search");
  app->add_option("--tol-flow", c.tol_flow, "self-similarity tolerance");
  app->add_flag("--timing", c.timing, "include wall time in reports");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximality certificates and curvature tools for metric Lie algebras", "liemax"};
  app.set_version_flag("--version", std::string("liemax ") + kVersion);
  app.require_subcommand(1);

  InputOptions in;
  CommonOptions common;
  GroupFlags group_flags;
  FlowOptions flow_opts;
  bool no_certify = false;
  std::size_t max_edges = graphs::kDefaultDirectionEdgeLimit;
  std::string iso, batch_dir, reports_dir;

  auto* validate = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
  auto* certify = app.add_subcommand("certify", "maximality certificate");
  auto* ricci = app.add_subcommand("ricci", "Ricci tensor, scalar curvature, Einstein check");
  auto* soliton = app.add_subcommand("soliton", "Ricci soliton decomposition Ric = cI + D");
  auto* transitivity = app.add_subcommand("transitivity", "transitivity of the scaled automorphism action");
  auto* flow = app.add_subcommand("flow", "integrate -a Ric - b scal g");
  auto* graph = app.add_subcommand("graph", "graph automorphisms, edge transitivity, isomorphism");
  auto* directions = app.add_subcommand("directions", "compare all directions of a graph");
  auto* batch = app.add_subcommand("batch", "certify every file of a corpus directory");

  for (auto* sub : {validate, certify, ricci, soliton, transitivity, flow, graph, directions}) add_input(sub, in);
  for (auto* sub : {validate, certify, ricci, soliton, transitivity, flow, graph, directions, batch}) add_common(sub, common);
  for (auto* sub : {certify, directions}) {
    sub->add_flag("--no-sign-diagonal", group_flags.no_sign, "omit sign-diagonal generators");
    sub->add_flag("--no-reflections", group_flags.no_reflections, "omit vertex reflections");
    sub->add_flag("--no-lifts", group_flags.no_lifts, "omit lifted graph automorphisms");
  }
  flow->add_option("--a", flow_opts.a, "Ricci coefficient");
  flow->add_option("--b", flow_opts.b, "scal coefficient");
  flow->add_option("--t-end", flow_opts.t_end, "final time");
  flow->add_option("--step", flow_opts.step, "RK4 step");
  flow->add_option("--normalize", flow_opts.normalize, "none, unit_determinant or unit_bracket_norm");
  flow->add_option("--sample-every", flow_opts.sample_every, "steps between samples");
  flow->add_option("--g0", flow_opts.g0, "JSON matrix with the initial Gram (default identity)");
  flow->add_option("--trajectory", flow_opts.trajectory, "write the trajectory CSV to this file");
  graph->add_option("--iso", iso, "second graph (file or name) to test for isomorphism");
  directions->add_flag("--no-certify", no_certify, "skip certificates, compare curvature only");
  directions->add_option("--max-edges", max_edges, "largest edge count to sweep");
  batch->add_option("dir", batch_dir, "corpus directory")->required();
  batch->add_option("--reports", reports_dir, "directory for per-input JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (batch->parsed()) return cmd_batch(batch_dir, reports_dir, common, out);

    const Loaded l = load(in);
    if (validate->parsed()) {
      if (l.spec && l.spec->kind == families::Kind::graph && !l.alg.dim()) throw ParseError("empty graph");
      const auto report = core::validate(l.alg);
      Json j = header("validate", l);
      j["result"] = io::to_json(report, l.alg);
      emit(j, common, out, start);
      return report.ok() ? kOk : kValidation;
    }

    require_valid(l);
    Json j;
    int code = kOk;
    if (certify->parsed()) {
      const auto group = make_group(l, group_flags, common);
      const auto cert = symmetry::maximality_certificate(l.alg, group);
      j = header("certify", l);
      j["result"] = io::to_json(cert);
      j["result"]["two_reversible"] = reversibility_json(symmetry::two_reversible_check(l.alg, group, common.limit_group));
      code = cert.status == symmetry::Certificate::Status::maximal ? kOk : kInconclusive;
    } else if (ricci->parsed()) {
      const auto ric = curvature::ricci_tensor(l.alg);
      j = header("ricci", l);
      j["result"] = io::to_json(ric);
      const auto lambda = curvature::einstein_check(l.alg, InnerProduct::identity(l.alg.dim()));
      j["result"]["einstein"] = lambda.has_value();
      j["result"]["einstein_constant"] = lambda ? io::to_json(*lambda) : Json(nullptr);
      j["result"]["unimodular"] = core::unimodularity_check(l.alg);
    } else if (soliton->parsed()) {
      j = header("soliton", l);
      j["result"] = io::to_json(curvature::ricci_soliton_check(l.alg, InnerProduct::identity(l.alg.dim())));
    } else if (transitivity->parsed()) {
      j = header("transitivity", l);
      j["result"] = io::to_json(core::orbit_transitivity_check(l.alg));
      j["result"]["unimodular"] = core::unimodularity_check(l.alg);
    } else if (flow->parsed()) {
      const auto n = static_cast<Eigen::Index>(l.alg.dim());
      flows::FlowProblem p{l.alg, flow_opts.g0.empty() ? Eigen::MatrixXd::Identity(n, n) : read_float_matrix(flow_opts.g0, l.alg.dim())};
      p.a = flow_opts.a;
      p.b = flow_opts.b;
      p.t_end = flow_opts.t_end;
      p.step = flow_opts.step;
      p.sample_every = flow_opts.sample_every;
      try {
        p.normalization = flows::normalization_from_string(flow_opts.normalize);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("--normalize: ") + e.what());
      }
      flows::FlowTrajectory traj;
      try {
        traj = flows::integrate(p);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("flow problem: ") + e.what());
      }
      if (!flow_opts.trajectory.empty()) {
        std::ofstream f(flow_opts.trajectory, std::ios::binary);
        if (!f) throw ParseError(flow_opts.trajectory + ": cannot write file");
        f << trajectory_csv(traj, l.alg.dim());
      }
      if (common.format == "csv") {
        emit_text(trajectory_csv(traj, l.alg.dim()), common, out);
        return traj.status == flows::FlowStatus::completed ? kOk : kLimit;
      }
      j = header("flow", l);
      Json r;
      r["status"] = flows::to_string(traj.status);
      r["steps"] = traj.steps;
      r["samples"] = traj.samples.size();
      r["a"] = p.a;
      r["b"] = p.b;
      r["step"] = p.step;
      r["t_end"] = p.t_end;
      r["normalization"] = flows::to_string(p.normalization);
      if (traj.samples.size() >= 2) {
        const auto d = flows::self_similarity_diagnostics(traj);
        r["ratio_drift"] = d.ratio_drift;
        r["max_soliton_residual"] = d.max_soliton_residual;
        r["self_similar"] = d.ratio_drift < common.tol_flow;
        if (p.a == 0) r["scaling_deviation"] = flows::scaling_deviation(traj);
      }
      r["tolerance"] = common.tol_flow;
      j["result"] = r;
      code = traj.status == flows::FlowStatus::completed ? kOk : kLimit;
    } else if (graph->parsed()) {
      const auto& g = require_graph(l);
      const auto autos = graphs::graph_automorphisms(g, common.limit_aut, common.limit_vertices);
      Json orbits = Json::array();
      for (const auto& orbit : graphs::edge_orbits(g, autos)) {
        Json o = Json::array();
        for (auto e : orbit) o.push_back(g.labels()[g.edges()[e].first] + "-" + g.labels()[g.edges()[e].second]);
        orbits.push_back(o);
      }
      j = header("graph", l);
      j["result"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"automorphisms", autos.size()},
                     {"edge_orbits", orbits}, {"edge_transitive", orbits.size() <= 1}};
      if (!iso.empty()) {
        const auto other = fs::exists(iso) ? io::parse_graph(io::read_file(iso)).graph : graph_from_named(iso);
        const auto w = graphs::graph_isomorphic(g, other, common.limit_vertices);
        j["result"]["isomorphic"] = w.has_value();
        if (w) {
          Json map = Json::object();
          for (std::size_t v = 0; v < w->size(); ++v) map[g.labels()[v]] = other.labels()[(*w)[v]];
          j["result"]["witness"] = map;
        }
      }
    } else if (directions->parsed()) {
      const auto& g = require_graph(l);
      graphs::GraphGroupOptions opts;
      opts.sign_diagonal = !group_flags.no_sign;
      opts.reflections = !group_flags.no_reflections;
      opts.lifts = !group_flags.no_lifts;
      opts.automorphism_cap = common.limit_aut;
      opts.vertex_limit = common.limit_vertices;
      const auto report = graphs::direction_independence_check(g, !no_certify, max_edges, opts);
      Json mism = Json::array();
      for (const auto& m : report.mismatches) mism.push_back({{"mask", m.mask}, {"field", m.field}});
      const auto& ref = report.outcomes.front();
      j = header("directions", l);
      j["result"] = {{"directions_checked", report.directions_checked},
                     {"consistent", report.consistent()},
                     {"mismatches", mism},
                     {"ricci_charpoly", io::to_json(ref.ricci_charpoly)},
                     {"soliton", ref.soliton}};
      if (!no_certify) j["result"]["status"] = symmetry::to_string(ref.status);
      code = report.consistent() ? kOk : kValidation;
    }
    emit(j, common, out, start);
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const LimitExceeded& e) {
    err << "error: limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const std::length_error& e) {
    err << "error: limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
}

} // namespace liemax::cli
