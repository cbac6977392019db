#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dcs/cli.hpp"

using namespace dcs;
using namespace dcs::cli;
namespace fs = std::filesystem;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out dcs_run(std::vector<std::string> args) {
  args.insert(args.begin(), "dcs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = run(static_cast<int>(argv.size()), argv.data(), o, e);
  return {code, o.str(), e.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "dcs_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const json& j) {
  const fs::path p = scratch(name);
  std::ofstream(p) << j.dump();
  return p;
}

json d0_points() {
  return json::array({{-1, 1, 1}, {-1, 1, 2}, {-1, 2, 1}, {-1, 2, 2}, {0, 1, 1}, {0, 1, 2}});
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(dcs_run({}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"verify", "--claim", "C99"}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"verify", "--all", "--claim", "C6"}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"verify", "--claim", "C6", "--samples", "10"}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"verify", "--claim", "C6", "--grid", "banana"}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"verify", "--claim", "C6", "--freeze"}).code, kExitUsage);
  const Out w = dcs_run({"winding", "alpha*", "fiber"});
  EXPECT_EQ(w.code, kExitUsage);
  EXPECT_FALSE(w.err.empty());
  EXPECT_EQ(dcs_run({"winding", "alpha", "no_such_functional"}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"membership", "/nonexistent/file.json"}).code, kExitUsage);
  EXPECT_EQ(dcs_run({"--help"}).code, kExitPass);
}

TEST(Cli, VerifyExitCodes) {
  const Out ok = dcs_run({"verify", "--claim", "C13.4", "C14.2", "--no-stability"});
  EXPECT_EQ(ok.code, kExitPass) << ok.err;
  EXPECT_NE(ok.out.find("C13.4"), std::string::npos);
  EXPECT_NE(ok.out.find("2 claims: 2 pass"), std::string::npos) << ok.out;
  // below the rounding floor a clean claim cannot pass or fail
  EXPECT_EQ(dcs_run({"verify", "--claim", "C6.2", "--tol", "1e-30", "--no-stability"}).code,
            kExitInconclusive);
  EXPECT_EQ(dcs_run({"verify", "--claim", "C9.8", "--no-stability"}).code, kExitFail);
}

TEST(Cli, JsonReport) {
  const fs::path p = scratch("report.json");
  const Out r = dcs_run({"verify", "--claim", "C13.4", "--json", p.string()});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  std::ifstream in(p);
  const json j = json::parse(in);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("claims").size(), 1u);
  const json& c = j.at("claims")[0];
  EXPECT_EQ(c.at("verdict"), "pass");
  EXPECT_EQ(c.at("integers").at("fiber-windings"), json::array({1, 1, 2}));
  EXPECT_EQ(j.at("environment").at("grid").at("circle"), 512);
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  RunConfig cfg;
  cfg.filter = {"C3", "C13.4", "YB3"};
  cfg.threads = 1;
  const std::string a = run_verify(cfg).dump();
  const std::string b = run_verify(cfg).dump();
  cfg.threads = 3;
  const std::string c = run_verify(cfg).dump();
  EXPECT_EQ(std::hash<std::string>{}(a), std::hash<std::string>{}(b));
  EXPECT_EQ(a, c);
}

TEST(Cli, GoldenComparison) {
  RunConfig cfg;
  cfg.filter = {"C13.4", "C14.1"};
  const json fresh = run_verify(cfg).to_json();
  EXPECT_TRUE(compare_golden(fresh, fresh).empty());

  json nudged = fresh;
  for (auto& c : nudged["claims"]) {
    for (auto& [k, v] : c["margins"].items()) {
      if (v.is_number_float() && v.get<double>() != 0.0) v = v.get<double>() * (1 + 1e-14);
    }
  }
  EXPECT_TRUE(compare_golden(nudged, fresh).empty());

  json moved = fresh;
  moved["claims"][1]["margins"]["min-margin"] = 0.5 * (1 + 1e-9);
  EXPECT_FALSE(compare_golden(moved, fresh).empty());

  json flipped = fresh;
  flipped["claims"][0]["integers"]["fiber-windings"][2] = 3;
  EXPECT_FALSE(compare_golden(flipped, fresh).empty());

  json env = fresh;
  env["environment"]["seed"] = 1;
  EXPECT_FALSE(compare_golden(env, fresh).empty());

  // freeze, then compare through the command line
  const fs::path g = scratch("golden.json");
  EXPECT_EQ(dcs_run({"verify", "--claim", "C13.4", "--golden", g.string(), "--freeze"}).code, kExitPass);
  EXPECT_EQ(dcs_run({"verify", "--claim", "C13.4", "--golden", g.string()}).code, kExitPass);
  // a different environment is a mismatch
  EXPECT_EQ(dcs_run({"verify", "--claim", "C13.4", "--golden", g.string(), "--seed", "7"}).code, kExitFail);
}

TEST(Cli, ThreadsFromEnvironment) {
  ::setenv("DCS_THREADS", "2", 1);
  EXPECT_EQ(resolve_threads(0), 2);
  EXPECT_EQ(resolve_threads(5), 5);
  ::setenv("DCS_THREADS", "zero", 1);
  EXPECT_THROW(resolve_threads(0), UsageError);
  ::unsetenv("DCS_THREADS");
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(Cli, ConfigFile) {
  RunConfig cfg;
  cfg.merge_json(json{{"grid", {{"circle", 256}}}, {"seed", 11}, {"claims", {"C13.4"}}});
  EXPECT_EQ(cfg.opt.grid.circle, 256);
  EXPECT_EQ(cfg.opt.seed, 11u);
  EXPECT_EQ(cfg.filter, std::vector<std::string>{"C13.4"});
  RunConfig round;
  round.merge_json(cfg.to_json());
  EXPECT_EQ(round.to_json(), cfg.to_json());
  EXPECT_THROW(cfg.merge_json(json::array()), UsageError);

  cfg.opt.grid.circle = 16;
  EXPECT_THROW(cfg.check(), UsageError);

  const fs::path p = write("config.json", json{{"claims", {"C14.2"}}, {"stability", false}});
  const Out r = dcs_run({"verify", "--config", p.string(), "--format", "json"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("claims").size(), 1u);
  EXPECT_EQ(j.at("environment").at("stability"), false);
}

TEST(Cli, Winding) {
  const Out r = dcs_run({"winding", "alpha", "fiber"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("vector (1,0,0)"), std::string::npos) << r.out;
  const Out j = dcs_run({"winding", "Psi_tilde", "fiber", "--format", "json"});
  ASSERT_EQ(j.code, kExitPass) << j.err;
  EXPECT_EQ(json::parse(j.out).at("windings"), json::array({1, 1, 2}));
}

TEST(Cli, Membership) {
  const Out base =
      dcs_run({"membership", write("d0.json", {{"points", d0_points()}, {"tag", "planar"}}).string()});
  EXPECT_EQ(base.code, kExitPass) << base.err;
  EXPECT_EQ(json::parse(base.out).at("verdict"), "pass");

  json pts = d0_points();
  pts[1] = pts[0];
  const Out coinc = dcs_run({"membership", write("coinc.json", {{"points", pts}, {"tag", "planar"}}).string()});
  EXPECT_EQ(coinc.code, kExitFail);
  const json cj = json::parse(coinc.out);
  EXPECT_NE(std::find(cj.at("failures").begin(), cj.at("failures").end(), "pairwise-distinct"),
            cj.at("failures").end());

  const json solid = json::array({{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 0, 1, 1}});
  const Out sp = dcs_run({"membership", write("solid.json", {{"points", solid}, {"tag", "planar"}}).string()});
  EXPECT_EQ(sp.code, kExitFail);
  const Out ss = dcs_run({"membership", write("solid2.json", {{"points", solid}, {"tag", "solid"}}).string()});
  EXPECT_EQ(ss.code, kExitPass) << ss.out;

  // complex coordinates as [re, im]
  json cx = d0_points();
  cx[0] = json::array({json::array({-1, 0}), json::array({1, 0}), json::array({1, 0})});
  EXPECT_EQ(dcs_run({"membership", write("cx.json", {{"points", cx}, {"tag", "planar"}}).string()}).code,
            kExitPass);

  EXPECT_EQ(dcs_run({"membership", write("five.json", {{"points", json::array({{1, 0, 0}})}, {"tag", "planar"}})
                                       .string()})
                .code,
            kExitUsage);
}

TEST(Cli, AtlasExport) {
  const Out r = dcs_run({"atlas", "export"});
  ASSERT_EQ(r.code, kExitPass);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.contains("items"));
  EXPECT_TRUE(j.contains("claims"));
  EXPECT_EQ(j.at("claims").size(), Atlas::instance().claims().size());
}
