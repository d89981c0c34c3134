// Copyright 2026 The covwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "covwalk/cli.hpp"
#include "covwalk/gates.hpp"
#include "covwalk/groups.hpp"
#include "covwalk/io.hpp"
#include "test_support.hpp"

namespace covwalk {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("covwalk_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(NAN), "null");
  EXPECT_EQ(format_double(INFINITY), "null");
  for (double x : {M_PI, 1e-300, -2.5e17, 1.0 / 3.0}) EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(DumpJson, LayoutAndRoundTrip) {
  Json j = {{"schema", 1}, {"v", {0.1, 2, 3.5}}, {"nested", {{"a", true}, {"b", nullptr}}}, {"s", "x\"y"}};
  const std::string text = dump_json(j);
  EXPECT_NE(text.find("[0.10000000000000001, 2, 3.5]"), std::string::npos);
  EXPECT_EQ(text, dump_json(j));
  const Json back = Json::parse(text);
  EXPECT_EQ(back["v"][0].get<double>(), 0.1);
  EXPECT_EQ(back["s"].get<std::string>(), "x\"y");
  EXPECT_TRUE(back["nested"]["b"].is_null());
}

TEST(GraphJson, RoundTrip) {
  const auto g = testing::random_graph(9, 0.4, 12);
  const Json j = graph_to_json(g);
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(graph_from_json(Json::parse(dump_json(j))), g);

  const WeightedGraph labelled(2, {{0, 1, 2.0}}, {"a", "b"});
  EXPECT_EQ(graph_from_json(graph_to_json(labelled)), labelled);
  EXPECT_FALSE(graph_to_json(cycle(3)).contains("labels"));
}

TEST(GraphJson, Parsing) {
  const auto g = graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2, 0.5], [1, 2, 0.25], [2, 2, 3]]})"));
  EXPECT_EQ(g.weight(0, 1), 1.0);
  EXPECT_EQ(g.weight(1, 2), 0.75);
  EXPECT_EQ(g.weight(2, 2), 3.0);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1]], "extra": 1})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 5]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1, -1]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1]], "schema": 2})")), std::invalid_argument);
}

TEST(VertexMapJson, RoundTrip) {
  const VertexMap m({2, 0, 1, 1}, 3);
  const Json j = vertex_map_to_json(m);
  EXPECT_EQ(j, Json::parse("[2, 0, 1, 1]"));
  EXPECT_EQ(vertex_map_from_json(j).images(), m.images());
  EXPECT_THROW(vertex_map_from_json(j, 5), std::invalid_argument);
  EXPECT_THROW(vertex_map_from_json(Json::parse("[0, -1]")), std::invalid_argument);
}

TEST(GatesJson, Layout) {
  const auto seq = compile_cycle_walk(3, 1.0, 16);
  const Json j = gates_to_json(seq);
  EXPECT_EQ(j["width"], 3);
  EXPECT_EQ(j["gates"].size(), seq.gates().size());
  EXPECT_EQ(j["counts"]["total"], seq.counts().total());
  std::size_t oracle_at = 0;
  for (std::size_t i = 0; i < seq.gates().size(); ++i) {
    EXPECT_EQ(j["gates"][i]["kind"], gate_kind(seq.gates()[i]));
    if (j["gates"][i]["kind"] == "diagonal_oracle") oracle_at = i;
  }
  // inverse QFT, oracle, QFT
  EXPECT_EQ(oracle_at, seq.gates().size() / 2);
}

TEST(ReadJson, Malformed) {
  std::istringstream bad("{\"n\": ");
  EXPECT_THROW(read_json(bad), std::invalid_argument);
}

TEST(Cli, GenPipesIntoWalk) {
  const auto gen = run({"gen", "cycle", "--m", "8"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const auto walk = run({"walk", "--t", "1", "--initial", "vertex:0", "--hamiltonian", "adjacency"}, gen.out);
  ASSERT_EQ(walk.code, 0) << walk.err;
  std::istringstream csv(walk.out);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "vertex,probability");
  const Eigen::MatrixXcd u = testing::expm_oracle(adjacency_matrix(cycle(8)).dense(), 1.0);
  double total = 0;
  for (int v = 0; v < 8; ++v) {
    ASSERT_TRUE(std::getline(csv, line));
    const auto comma = line.find(',');
    EXPECT_EQ(std::stoi(line.substr(0, comma)), v);
    const double p = std::stod(line.substr(comma + 1));
    EXPECT_NEAR(p, std::norm(u(v, 0)), 1e-12);
    total += p;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Cli, CoverCommands) {
  TempDir dir;
  ASSERT_EQ(run({"gen", "hypercube", "--n", "4", "--out", dir.file("y.json")}).code, 0);
  ASSERT_EQ(run({"gen", "path-quotient", "--n", "4", "--out", dir.file("x.json"), "--pi-out", dir.file("pi.json")}).code, 0);
  const auto verify = run({"cover", "verify", "--Y", dir.file("y.json"), "--X", dir.file("x.json"), "--pi", dir.file("pi.json")});
  EXPECT_EQ(verify.code, 0) << verify.err;
  const Json report = Json::parse(verify.out);
  EXPECT_TRUE(report["is_cover"].get<bool>());
  EXPECT_NEAR(report["mu"].get<double>(), 1.0, 1e-12);

  const auto quotient = run({"cover", "quotient", "--Y", dir.file("y.json"), "--pi", dir.file("pi.json")});
  ASSERT_EQ(quotient.code, 0);
  const auto x = graph_from_json(Json::parse(quotient.out));
  EXPECT_NEAR(x.weight(0, 1), 2.0, 1e-12);

  const auto walk = run({"cover", "walkcheck", "--Y", dir.file("y.json"), "--pi", dir.file("pi.json"), "--t", "3"});
  EXPECT_EQ(walk.code, 0) << walk.out;

  // a base that is not covered
  std::ofstream(dir.file("c5.json")) << dump_json(graph_to_json(cycle(5)));
  const auto fail = run({"cover", "verify", "--Y", dir.file("y.json"), "--X", dir.file("c5.json"), "--pi", dir.file("pi.json")});
  EXPECT_EQ(fail.code, cli::kExitVerificationFailure);
}

TEST(Cli, CoverVerifyFailureExitsOne) {
  TempDir dir;
  std::ofstream(dir.file("y.json")) << dump_json(graph_to_json(cycle(6)));
  std::ofstream(dir.file("x.json")) << dump_json(graph_to_json(cycle(3)));
  std::ofstream(dir.file("pi.json")) << "[0, 0, 1, 1, 2, 2]";
  const auto r = run({"cover", "verify", "--Y", dir.file("y.json"), "--X", dir.file("x.json"), "--pi", dir.file("pi.json")});
  EXPECT_EQ(r.code, cli::kExitVerificationFailure);
  EXPECT_FALSE(Json::parse(r.out)["is_cover"].get<bool>());
  const auto q = run({"cover", "quotient", "--Y", dir.file("y.json"), "--pi", dir.file("pi.json")});
  EXPECT_EQ(q.code, cli::kExitVerificationFailure);
}

TEST(Cli, CompileVerify) {
  const auto r = run({"compile", "cycle", "--n", "5", "--t", "2", "--bits", "32", "--verify"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_LE(j["distance"].get<double>(), j["bound"].get<double>());

  TempDir dir;
  EXPECT_EQ(run({"compile", "torus", "--m", "2", "--n", "2", "--t", "1", "--verify", "--emit", dir.file("g.json")}).code, 0);
  const Json gates = Json::parse(slurp(dir.file("g.json")));
  EXPECT_EQ(gates["width"], 4);
  EXPECT_EQ(gates["schema"], 1);

  EXPECT_EQ(run({"compile", "circulant", "--row", "0,1,0,0,0,1", "--t", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compile", "circulant", "--row", "0,1,0,0,0,1", "--t", "1", "--dense-fallback"}).code, 0);
  EXPECT_EQ(run({"compile", "circulant", "--row", "0,1,0,0,0,0,0,1", "--t", "1", "--verify"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"walk"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"walk", "--t", "1", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"walk", "--t", "1"}, "{\"n\": 2, \"edges\": [[0, 1]], \"zz\": 1}").code, cli::kExitUsage);
  EXPECT_EQ(run({"walk", "--t", "1", "--graph", "/nonexistent/g.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "paley", "--q", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "cycle", "--m", "abc"}).code, cli::kExitUsage);
  const auto r = run({"walk", "--t", "1", "--initial", "vertex:9"}, run({"gen", "cycle", "--m", "4"}).out);
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, EverySubcommandHasHelp) {
  const std::vector<std::vector<std::string>> cmds = {
      {"gen", "cycle"}, {"gen", "hypercube"}, {"gen", "cayley"}, {"gen", "schreier"}, {"gen", "torus"},
      {"gen", "paley"}, {"gen", "path-quotient"}, {"walk"}, {"cover", "verify"}, {"cover", "quotient"},
      {"cover", "walkcheck"}, {"compile", "cycle"}, {"compile", "circulant"}, {"compile", "torus"},
      {"hiddencover", "solve"}, {"hiddencover", "dihedral"}, {"demo", "hypercube"}};
  for (auto c : cmds) {
    c.push_back("--help");
    const auto r = run(c);
    EXPECT_EQ(r.code, 0) << c[0];
    EXPECT_NE((r.out + r.err).find("--out"), std::string::npos) << c[0] << " " << c[1];
  }
}

TEST(Cli, GenFamilies) {
  const auto cay = run({"gen", "cayley", "--group", "dihedral:7", "--gens", "s,sinv,t"});
  ASSERT_EQ(cay.code, 0) << cay.err;
  const auto g = graph_from_json(Json::parse(cay.out));
  EXPECT_EQ(g.num_vertices(), 14u);
  EXPECT_DOUBLE_EQ(is_regular(g).degree, 3.0);

  TempDir dir;
  const auto sch = run({"gen", "schreier", "--group", "cyclic:6", "--gens", "1,5", "--subgroup", "3", "--pi-out",
                        dir.file("pi.json")});
  ASSERT_EQ(sch.code, 0) << sch.err;
  const auto sg = graph_from_json(Json::parse(sch.out));
  EXPECT_EQ(sg.labels(), (std::vector<std::string>{"0H", "1H", "2H"}));
  EXPECT_EQ(adjacency_matrix(sg).dense(), adjacency_matrix(cycle(3)).dense());
  EXPECT_EQ(Json::parse(slurp(dir.file("pi.json"))).size(), 6u);

  EXPECT_EQ(graph_from_json(Json::parse(run({"gen", "torus", "--m", "2", "--size", "4"}).out)), torus(2, 4));
  EXPECT_EQ(graph_from_json(Json::parse(run({"gen", "paley", "--q", "13"}).out)), paley_graph(13));
}

TEST(Cli, HiddenCoverCommands) {
  const auto a = run({"hiddencover", "solve", "--n", "35", "--trials", "20", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["wrong"], 0);
  EXPECT_EQ(j["trials"], 20);
  EXPECT_EQ(a.out, run({"hiddencover", "solve", "--n", "35", "--trials", "20", "--seed", "7"}).out);
  EXPECT_NE(a.out, run({"hiddencover", "solve", "--n", "35", "--trials", "20", "--seed", "8"}).out);

  const auto d = run({"hiddencover", "dihedral", "--n", "5"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.out.substr(0, d.out.find('\n')), "subgroup_generator,index,eigenvalue");
}

TEST(Cli, DemoHypercube) {
  const auto r = run({"demo", "hypercube", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  for (const auto& row : j["residuals"]) {
    EXPECT_LE(row["residual_basis_0"].get<double>(), 1e-9);
    EXPECT_LE(row["residual_random"].get<double>(), 1e-9);
  }
}

TEST(Cli, CheapDemosAreByteIdentical) {
  for (const std::string name : {"covers", "containment", "dihedral", "compiler"}) {
    const auto a = run({"demo", name});
    const auto b = run({"demo", name});
    EXPECT_EQ(a.code, 0) << name << a.err;
    EXPECT_EQ(a.out, b.out) << name;
  }
  const auto names = cli::demo_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "determinism"), names.end());
}

}  // namespace
}  // namespace covwalk
