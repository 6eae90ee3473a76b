#include "cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using liemax::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "liemax");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(LIEMAX_CORPUS_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("liemax_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

} // namespace

TEST_CASE("validate exit codes") {
  CHECK(invoke({"validate", corpus("h3.json")}).code == 0);

  const auto dir = scratch("validate");
  write(dir / "anti.json", R"({"dim":2,"brackets":[{"i":1,"j":2,"terms":[{"k":1,"num":1}]},
                                                  {"i":2,"j":1,"terms":[{"k":1,"num":1}]}]})");
  const auto r = invoke({"validate", (dir / "anti.json").string()});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["violations"][0]["identity"] == "antisymmetry");
  CHECK(j["result"]["violations"][0]["pair"] == nlohmann::json::array({1, 2}));

  write(dir / "broken.json", R"({"dim": 2, "brackets": [)");
  const auto m = invoke({"validate", (dir / "broken.json").string()});
  CHECK(m.code == 2);
  CHECK(m.err.find("line") != std::string::npos);

  CHECK(invoke({"validate", (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("certify exit codes") {
  const auto r = invoke({"certify", "--family", "almost-abelian", "--w", "1,2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["status"] == "MAXIMAL");
  CHECK(j["version"] == liemax::cli::kVersion);
  CHECK_FALSE(j.contains("wall_time_s"));

  CHECK(invoke({"certify", "--graph", corpus("k4.txt")}).code == 0);
  const auto p4 = invoke({"certify", "--graph", corpus("p4.txt")});
  CHECK(p4.code == 3);
  CHECK_FALSE(nlohmann::json::parse(p4.out)["result"]["witness"].is_null());
  CHECK(invoke({"certify", "--family", "complex-hyperbolic", "--n", "1"}).code == 3);
  CHECK(invoke({"certify", "--family", "motion-group"}).code == 0);
  CHECK(invoke({"certify", "--family", "motion-group", "--no-sign-diagonal"}).code == 3);
  CHECK(invoke({"certify", "--timing", "--named-graph", "c5"}).out.find("wall_time_s") != std::string::npos);
}

TEST_CASE("bad user generator is a validation failure") {
  const auto dir = scratch("gens");
  write(dir / "g.json", "[[[2,0,0],[0,1,0],[0,0,1]]]");
  CHECK(invoke({"certify", "--family", "almost-abelian", "--w", "1,2", "--generators", (dir / "g.json").string()})
            .code == 1);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"certify"}).code == 2);
  CHECK(invoke({"certify", "--family", "nope"}).code == 2);
  CHECK(invoke({"certify", "--family", "almost-abelian", "--w", "1,x"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"--version"}).code == 0);
}

TEST_CASE("limit exceeded maps to exit 4") {
  CHECK(invoke({"graph", "--named-graph", "petersen", "--limit-aut", "10"}).code == 4);
  CHECK(invoke({"directions", "--named-graph", "petersen"}).code == 4);
  CHECK(invoke({"flow", "--family", "almost-abelian", "--w", "1,2", "--b", "-60", "--a", "0", "--normalize",
                "none", "--step", "0.05"})
            .code == 4);
}

TEST_CASE("other subcommands") {
  const auto ric = nlohmann::json::parse(invoke({"ricci", "--family", "almost-abelian", "--w", "1,2"}).out);
  CHECK(ric["result"]["scal"] == "-14/1");
  const auto sol = nlohmann::json::parse(invoke({"soliton", "--family", "almost-abelian", "--w", "1,2"}).out);
  CHECK(sol["result"]["c"] == "-5/1");
  const auto tr = invoke({"transitivity", "--family", "borel-hyperbolic", "--n", "3"});
  CHECK(nlohmann::json::parse(tr.out)["result"]["transitive"] == true);
  const auto g = nlohmann::json::parse(invoke({"graph", "--graph", corpus("c5.txt"), "--iso", "c5"}).out);
  CHECK(g["result"]["automorphisms"] == 10);
  CHECK(g["result"]["edge_transitive"] == true);
  CHECK(g["result"]["isomorphic"] == true);
  const auto d = invoke({"directions", "--graph", corpus("p4.txt")});
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["result"]["directions_checked"] == 8);
  CHECK(invoke({"ricci", "--graph", corpus("k3.txt"), "--format", "csv"}).out.rfind("ric_operator,", 0) == 0);
}

TEST_CASE("flow is deterministic and writes a trajectory") {
  const auto dir = scratch("flow");
  const std::vector<std::string> args = {"flow", corpus("h3.json"), "--t-end", "0.2", "--step", "0.01"};
  const auto a = invoke(args), b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["result"]["self_similar"] == true);
  auto with_traj = args;
  with_traj.push_back("--trajectory");
  with_traj.push_back((dir / "t.csv").string());
  CHECK(invoke(with_traj).code == 0);
  std::ifstream f(dir / "t.csv");
  std::string header;
  std::getline(f, header);
  CHECK(header.rfind("t,g1_1", 0) == 0);
}

TEST_CASE("batch summary") {
  const auto dir = scratch("batch");
  for (const auto* name : {"k4.txt", "c5.txt", "petersen.txt"}) fs::copy_file(corpus(name), dir / name);
  const auto r = invoke({"batch", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "name,dim,status,dim_normal,edge_transitive,soliton\n"
        "c5.txt,10,MAXIMAL,24,true,true\n"
        "k4.txt,10,MAXIMAL,20,true,true\n"
        "petersen.txt,25,MAXIMAL,164,true,true\n");

  // Parallel runs and repeated runs agree byte for byte.
  CHECK(invoke({"batch", dir.string(), "--jobs", "3"}).out == r.out);

  write(dir / "bad.txt", "3 2\n1 2\n");
  const auto reports = scratch("batch_reports");
  const auto e = invoke({"batch", dir.string(), "--jobs", "2", "--reports", reports.string()});
  CHECK(e.code == 0);
  CHECK(e.out.find("bad.txt,,ERROR,,,\n") != std::string::npos);
  CHECK(e.out.find("petersen.txt,25,MAXIMAL") != std::string::npos);
  CHECK(fs::exists(reports / "k4.txt.json"));
  std::ifstream bad(reports / "bad.txt.json");
  const auto bj = nlohmann::json::parse(bad);
  CHECK(bj.contains("error"));
}

TEST_CASE("batch edge cases") {
  const auto empty = scratch("empty");
  const auto r = invoke({"batch", empty.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "name,dim,status,dim_normal,edge_transitive,soliton\n");
  CHECK(invoke({"batch", (empty / "nope").string()}).code == 2);
}

TEST_CASE("--out writes the report to a file") {
  const auto dir = scratch("out");
  const auto r = invoke({"certify", "--named-graph", "k4", "--out", (dir / "r.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(dir / "r.json");
  CHECK(nlohmann::json::parse(f)["result"]["status"] == "MAXIMAL");
}
