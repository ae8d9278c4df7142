#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "chg/set_io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  json report;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chgsets");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = chg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  json j = out.str().empty() ? json() : json::parse(out.str());
  return {code, j, err.str()};
}

json stable(json j) {
  j.erase("elapsed_ms");
  j.erase("versions");
  return j;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "chg_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

const std::string kFixtures = CHG_FIXTURE_DIR;

}  // namespace

TEST(Cli, SphereReport) {
  auto r = run({"construct", "sphere", "--p", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["schema"], 1);
  EXPECT_GE(r.report["set_size"].get<int>(), 20);
  EXPECT_TRUE(r.report["verdict"]["holds"].get<bool>());
  EXPECT_EQ(r.report["versions"]["rng"], "mt19937_64+splitmix64/v1");
}

TEST(Cli, BoundsReport) {
  auto r = run({"bounds", "--n", "125", "--h", "3", "--g", "3"});
  ASSERT_EQ(r.code, 0);
  bool found = false;
  for (const auto& b : r.report["bounds"]) {
    if (b["formula"] == "eq3_group") {
      EXPECT_NEAR(b["value"].get<double>(), 43, 1e-9);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyFailureExitCode) {
  auto r = run({"verify", "--set", kFixtures + "/ap5.txt", "--h", "2", "--g", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.report["verdict"]["holds"].get<bool>());
  EXPECT_EQ(r.report["verdict"]["witness"]["pattern"], json::parse("[0,1]"));
  EXPECT_EQ(r.report["verdict"]["witness"]["bases"], json::parse("[1,2]"));
}

TEST(Cli, ParameterErrors) {
  EXPECT_EQ(run({"construct", "sphere", "--p", "4"}).code, 4);
  EXPECT_EQ(run({"construct", "sphere", "--p", "2"}).code, 4);
  EXPECT_EQ(run({"bounds", "--n", "10", "--h", "3", "--g", "2"}).code, 4);
  EXPECT_EQ(run({"verify", "--set", "/nonexistent/file", "--h", "2", "--g", "2"}).code, 4);
  EXPECT_EQ(run({"nonsense"}).code, 4);
}

TEST(Cli, ResourceCap) {
  auto r = run({"search", "--n-max", "30", "--h", "2", "--g", "2", "--node-cap", "10"});
  EXPECT_EQ(r.code, 3);
  auto v = run({"verify", "--set", kFixtures + "/ap5.txt", "--h", "3", "--g", "3", "--subset-cap", "2"});
  EXPECT_EQ(v.code, 3);
}

TEST(Cli, RetryExhaustion) {
  // One attempt at a tiny n fails for some seed; find one.
  bool seen = false;
  for (int seed = 1; seed <= 40 && !seen; ++seed) {
    auto r = run({"construct", "weak", "--n", "20", "--h", "3", "--g", "3", "--seed",
                  std::to_string(seed), "--max-attempts", "1"});
    if (r.code == 5) {
      seen = true;
      EXPECT_EQ(r.report["attempt_log"].size(), 1u);
    } else {
      EXPECT_EQ(r.code, 0);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Cli, DeterministicApartFromTiming) {
  std::vector<std::vector<std::string>> cmds{
      {"construct", "weak", "--n", "5000", "--h", "2", "--g", "2", "--seed", "42"},
      {"construct", "norm", "--q", "3", "--h", "3"},
      {"search", "--n-max", "10", "--h", "2", "--g", "2"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(stable(a.report).dump(), stable(b.report).dump());
  }
  auto t1 = run({"construct", "weak", "--n", "5000", "--h", "2", "--g", "2", "--seed", "42", "--threads", "1"});
  auto t3 = run({"construct", "weak", "--n", "5000", "--h", "2", "--g", "2", "--seed", "42", "--threads", "3"});
  auto params = [](json j) {
    j = stable(j);
    j["params"].erase("threads");
    return j.dump();
  };
  EXPECT_EQ(params(t1.report), params(t3.report));
}

TEST(Cli, OutRoundTrip) {
  struct Case {
    std::vector<std::string> args;
    std::string h, g;
  };
  std::vector<Case> cases{
      {{"construct", "sphere", "--p", "7"}, "3", "3"},
      {{"construct", "sphere", "--embed", "500"}, "3", "3"},
      {{"construct", "norm", "--q", "3", "--h", "2"}, "2", "3"},
      {{"construct", "norm", "--q", "2", "--h", "3", "--embed"}, "3", "7"},
      {{"construct", "weak", "--n", "3000", "--h", "2", "--g", "2", "--seed", "3"}, "2", "2"},
  };
  int i = 0;
  for (auto c : cases) {
    auto path = scratch("set" + std::to_string(i++) + ".txt").string();
    c.args.push_back("--out");
    c.args.push_back(path);
    auto built = run(c.args);
    ASSERT_EQ(built.code, 0) << built.err;
    std::vector<std::string> v{"verify", "--set", path, "--h", c.h, "--g", c.g};
    const bool weak = c.args[1] == "weak";
    if (weak) v.push_back("--weak");
    auto checked = run(v);
    EXPECT_EQ(checked.code, 0);
    EXPECT_EQ(checked.report["set_size"], built.report["set_size"]);
    EXPECT_EQ(checked.report["verdict"]["holds"], built.report["verdict"]["holds"]);
  }
}

TEST(Cli, SearchCsv) {
  auto path = scratch("table.csv");
  auto r = run({"search", "--n-max", "8", "--h", "2", "--g", "2", "--csv", path.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "n,best_size,optimal,greedy_size,bound_eq3,thm1_main");
  std::vector<std::string> sizes;
  while (std::getline(in, line)) {
    auto a = line.find(','), b = line.find(',', a + 1);
    sizes.push_back(line.substr(a + 1, b - a - 1));
  }
  EXPECT_EQ(sizes, (std::vector<std::string>{"1", "2", "2", "3", "3", "3", "4", "4"}));
}

TEST(Cli, ZMatrixAndPbm) {
  auto set = scratch("norm32.txt");
  ASSERT_EQ(run({"construct", "norm", "--q", "3", "--h", "2", "--out", set.string()}).code, 0);
  auto pbm = scratch("m.pbm");
  auto r = run({"zmatrix", "--set", set.string(), "--g", "3", "--h", "2", "--pbm", pbm.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["zmatrix"]["ones"], 36);
  EXPECT_TRUE(r.report["zmatrix"]["row_sums_uniform"].get<bool>());
  EXPECT_TRUE(r.report["verdict"]["holds"].get<bool>());
  std::ifstream in(pbm);
  std::string magic;
  in >> magic;
  EXPECT_EQ(magic, "P1");
  EXPECT_EQ(run({"zmatrix", "--set", kFixtures + "/ap5.txt", "--g", "2", "--h", "2"}).code, 4);
}
