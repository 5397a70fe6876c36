#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "centra/cli.hpp"

using namespace centra;
using namespace centra::cli;

namespace {

const std::string kData = CENTRA_DATA_DIR;

int run(const std::string& args, std::string* out = nullptr) {
  const auto tmp = std::filesystem::temp_directory_path() / ("centra_cli_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string(CENTRA_CLI) + " " + args + " > " + tmp.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(tmp);
    std::stringstream s;
    s << in.rdbuf();
    *out = s.str();
  }
  std::filesystem::remove(tmp);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::json analyze_json(const GroupSpec& spec) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_analyze(spec, "json", out, err), kOk) << err.str();
  return nlohmann::json::parse(out.str());
}

}  // namespace

TEST(Analyze, DihedralEightReport) {
  const auto r = analyze_json({GroupSpec::Kind::builtin, "dihedral:8"});
  EXPECT_EQ(r["schema_version"], "1.0");
  EXPECT_EQ(r["group"]["order"], 8);
  EXPECT_EQ(r["group"]["center_order"], 2);
  EXPECT_EQ(r["group"]["p"], 2);
  EXPECT_TRUE(r["group"]["is_f_group"].get<bool>());
  EXPECT_TRUE(r["group"]["f_group_witness"].is_null());
  EXPECT_EQ(r["lattice"]["nodes"], 5);
  EXPECT_EQ(r["lattice"]["hasse_edges"], 6);
  EXPECT_EQ(r["partition"]["classes"], 4);
  EXPECT_EQ(r["center_poset"]["mu"], nlohmann::json({1, -1, -1, -1}));
  EXPECT_EQ(r["center_poset"]["nonminimal_mu_sum"], -3);
  EXPECT_TRUE(r["center_poset"]["class_size_congruence"]["pass"].get<bool>());
  EXPECT_EQ(r["graphs"]["commuting"]["edges"], 3);
  EXPECT_TRUE(r["pass"].get<bool>());
  for (const auto& c : r["checks"]) EXPECT_NE(c["status"], "fail") << c.dump();
}

TEST(Analyze, NonFGroupReportsWitness) {
  const auto r = analyze_json({GroupSpec::Kind::builtin, "symmetric:4"});
  EXPECT_FALSE(r["group"]["is_f_group"].get<bool>());
  EXPECT_FALSE(r["group"]["f_group_witness"].is_null());
  EXPECT_TRUE(r["group"]["p"].is_null());
  EXPECT_TRUE(r["center_poset"]["class_size_congruence"].is_null());
}

TEST(Analyze, AbelianGroupSkipsGraphs) {
  const auto r = analyze_json({GroupSpec::Kind::builtin, "cyclic:6"});
  EXPECT_TRUE(r["graphs"].is_null());
  EXPECT_EQ(r["notices"].size(), 1u);
  EXPECT_EQ(r["lattice"]["nodes"], 1);
}

TEST(Analyze, ProductAndFilesAgree) {
  const auto a = analyze_json({GroupSpec::Kind::product, "dihedral:8,cyclic:2"});
  EXPECT_EQ(a["group"]["order"], 16);
  EXPECT_EQ(a["group"]["center_order"], 4);
  const auto t = analyze_json({GroupSpec::Kind::table, kData + "/q8.tbl"});
  const auto q = analyze_json({GroupSpec::Kind::builtin, "quaternion8"});
  EXPECT_EQ(t["lattice"], q["lattice"]);
  EXPECT_EQ(t["center_poset"], q["center_poset"]);
  const auto g = analyze_json({GroupSpec::Kind::product, "gens:" + kData + "/s4.gens,table:" + kData + "/q8.tbl"});
  EXPECT_EQ(g["group"]["order"], 192);
}

TEST(Analyze, TextFormat) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_analyze({GroupSpec::Kind::builtin, "heisenberg:3"}, "text", out, err), kOk);
  EXPECT_NE(out.str().find("order 27"), std::string::npos);
  EXPECT_NE(out.str().find("3-group"), std::string::npos);
  EXPECT_NE(out.str().find("F-group"), std::string::npos);
}

TEST(Analyze, ErrorsMapToExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_analyze({GroupSpec::Kind::table, "/nonexistent.tbl"}, "json", out, err), kIo);
  EXPECT_EQ(cmd_analyze({GroupSpec::Kind::builtin, "dihedral:7"}, "json", out, err), kUsage);
  EXPECT_EQ(cmd_analyze({GroupSpec::Kind::builtin, "dihedral:8"}, "yaml", out, err), kUsage);
  EXPECT_EQ(cmd_analyze({GroupSpec::Kind::product, "dihedral:8"}, "json", out, err), kUsage);
  EXPECT_FALSE(err.str().empty());
}

TEST(Verify, AllSuitesPassOnDihedralEight) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify({GroupSpec::Kind::builtin, "dihedral:8"}, "all", VerifyOptions{}, out, err), kOk);
  EXPECT_NE(out.str().find("PASS algebra/triple_centralizer"), std::string::npos);
  EXPECT_NE(out.str().find("0 failed"), std::string::npos);
}

TEST(Verify, Order2187FactsFailOnWrongGroup) {
  std::ostringstream out, err;
  VerifyOptions o;
  o.expect_order2187 = true;
  EXPECT_EQ(cmd_verify({GroupSpec::Kind::builtin, "heisenberg:3"}, "moebius", o, out, err), kCheckFailed);
  EXPECT_NE(out.str().find("FAIL moebius/order2187_mu_facts"), std::string::npos);
}

TEST(Verify, WrongPrimeIsReported) {
  std::ostringstream out, err;
  VerifyOptions o;
  o.prime = 3;
  EXPECT_EQ(cmd_verify({GroupSpec::Kind::builtin, "dihedral:8"}, "moebius", o, out, err), kCheckFailed);
  EXPECT_EQ(cmd_verify({GroupSpec::Kind::builtin, "dihedral:8"}, "bogus", o, out, err), kUsage);
}

TEST(Emit, ArtifactsRender) {
  const Group d8 = load_builtin("dihedral:8");
  for (const auto& a : emit_artifacts()) EXPECT_FALSE(render_artifact(d8, a).empty()) << a;
  EXPECT_THROW(render_artifact(d8, "nope"), ParseError);
  EXPECT_EQ(render_artifact(d8, "lattice-dot").rfind("digraph lattice {", 0), 0u);
}

TEST(Emit, WritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / ("centra_emit_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::ostringstream err;
  const auto path = (dir / "t.tbl").string();
  ASSERT_EQ(cmd_emit({GroupSpec::Kind::builtin, "quaternion8"}, "cayley-table", path, err), kOk);
  const Group back = load_table_file(path);
  EXPECT_EQ(back.labels(), quaternion_group().labels());
  EXPECT_EQ(cmd_emit({GroupSpec::Kind::builtin, "quaternion8"}, "lattice-dot", (dir / "missing" / "x.dot").string(), err),
            kIo);
  std::filesystem::remove_all(dir);
}

TEST(Binary, ExitCodes) {
  std::string out;
  EXPECT_EQ(run("analyze --builtin dihedral:8", &out), 0);
  EXPECT_EQ(nlohmann::json::parse(out)["lattice"]["nodes"], 5);
  EXPECT_EQ(run("analyze"), 2);
  EXPECT_EQ(run("analyze --builtin dihedral:8 --table x"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("analyze --builtin dihedral:8 --format xml"), 2);
  EXPECT_EQ(run("analyze --table /nonexistent/q.tbl"), 3);
  EXPECT_EQ(run("analyze --gens " + kData + "/q8.tbl"), 2);
  EXPECT_EQ(run("verify --builtin heisenberg:3 --suite moebius --order2187"), 1);
  EXPECT_EQ(run("verify --builtin dihedral:8 --suite graphs", &out), 0);
  EXPECT_NE(out.find("PASS graphs/quotient_consistency"), std::string::npos);
  EXPECT_EQ(run("emit lattice-dot - --builtin dihedral:8", &out), 0);
  EXPECT_EQ(out.rfind("digraph lattice {", 0), 0u);
  EXPECT_EQ(run("emit no-such - --builtin dihedral:8"), 2);
}

TEST(Binary, OrderBoundFromEnvironment) {
  EXPECT_EQ(run("analyze --builtin dihedral:16"), 0);
  EXPECT_EQ(::setenv("CENTRA_MAX_ORDER", "10", 1), 0);
  EXPECT_EQ(run("analyze --builtin dihedral:16"), 2);
  EXPECT_EQ(run("analyze --builtin dihedral:8"), 0);
  EXPECT_EQ(run("analyze --product dihedral:8,cyclic:2"), 2);
  EXPECT_EQ(::setenv("CENTRA_MAX_ORDER", "zero", 1), 0);
  EXPECT_EQ(run("analyze --builtin dihedral:8"), 2);
  ::unsetenv("CENTRA_MAX_ORDER");
}

TEST(Binary, Deterministic) {
  std::string a, b;
  ASSERT_EQ(run("analyze --product dihedral:8,dihedral:8", &a), 0);
  ASSERT_EQ(run("analyze --product dihedral:8,dihedral:8", &b), 0);
  EXPECT_EQ(a, b);
}
