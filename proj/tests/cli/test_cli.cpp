#include "cli.hpp"

#include "affblocks/drinfeld.hpp"
#include "affblocks/json_io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using affblocks::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = affblocks::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return affblocks::parse_json(r.out);
}

const std::string kFundamental2 = R"({"n":3,"components":[["a*v^1"],["a*v^-1"],[]]})";

}  // namespace

TEST(Cli, DominantCheck) {
  EXPECT_EQ(run({"dominant-check", "--n", "3", "--q", kFundamental2}).out, "true\n");
  EXPECT_EQ(run({"dominant-check", "--n", "2", "--q", "[[],[\"a\"]]"}).out, "false\n");
  EXPECT_EQ(run_json({"dominant-check", "--n", "2", "--q", "[[\"a\"],[]]"})["dominant"], true);
  EXPECT_EQ(run({"dominant-check", "--n", "2", "--q", "[[\"a*v^\"],[]]"}).code, 1);
}

TEST(Cli, FundamentalTextAndJsonAgree) {
  Result text = run({"fundamental", "--n", "3", "--i", "2", "--a", "a"});
  ASSERT_EQ(text.code, 0) << text.err;
  Json j = run_json({"fundamental", "--n", "3", "--i", "2", "--a", "a"});
  EXPECT_EQ(affblocks::parse_tuple(text.out.substr(0, text.out.size() - 1)), affblocks::tuple_from_json(j));
  EXPECT_EQ(j, affblocks::parse_json(kFundamental2));
}

TEST(Cli, KappaDecomposeElliptic) {
  EXPECT_EQ(run({"kappa", "--n", "3", "--q", kFundamental2}).out, "P[1]: 1\nP[2]: (a*v^0)^1\n");
  EXPECT_EQ(run({"decompose", "--n", "3", "--q", kFundamental2}).out, "Q[2;a*v^0]\n");
  Json d = run_json({"decompose", "--q", kFundamental2});
  ASSERT_EQ(d["factors"].size(), 1u);
  EXPECT_EQ(d["factors"][0]["i"], 2);
  EXPECT_EQ(d["factors"][0]["a"], "a*v^0");
  Json e = run_json({"elliptic", "--q", kFundamental2});
  EXPECT_EQ(e["r"], 2);
  EXPECT_EQ(e["class"].size(), 2u);
  EXPECT_EQ(run({"decompose", "--n", "2", "--q", "[[],[]]"}).out, "1\n");
}

TEST(Cli, SameBlock) {
  const std::string x = kFundamental2;
  const std::string y = R"([["a*v^1","a*v^-1"],[],[]])";
  const std::string z = R"([["b*v^1","a*v^-1"],[],[]])";
  EXPECT_EQ(run({"same-block", "--n", "3", "--a", x, "--b", y}).out, "true\n");
  EXPECT_EQ(run({"same-block", "--n", "3", "--a", x, "--b", z}).out, "false\n");
  Json j = run_json({"same-block", "--a", x, "--b", y});
  EXPECT_EQ(j["same_block"], true);
  EXPECT_EQ(j["a"], j["b"]);
}

TEST(Cli, Character) {
  Result r = run({"character", "--n", "2", "--i", "1", "--a", "a"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  Json j = run_json({"character", "--n", "4", "--i", "2", "--a", "a"});
  EXPECT_EQ(j["terms"].size(), 6u);
  EXPECT_EQ(run({"character", "--n", "2", "--i", "3", "--a", "a"}).code, 1);
}

TEST(Cli, FactorizeLweight) {
  Result r = run({"factorize-lweight", "--n", "3", "--j", "3", "--a", "a"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("step 2 a*v^0\nstep 1 a*v^0\n"), std::string::npos) << r.out;
  Json j = run_json({"factorize-lweight", "--n", "2", "--j", "[2]", "--a", "a"});
  ASSERT_EQ(j["chain"].size(), 1u);
  EXPECT_EQ(j["chain"][0]["k"], 1);
  EXPECT_EQ(run({"factorize-lweight", "--n", "3", "--j", "2,1", "--a", "a"}).code, 1);
}

TEST(Cli, BetaCoords) {
  Result r = run({"beta-coords", "--n", "2", "--x", "L[1;a*v^0]^1,L[2;a*v^0]^-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("in_rn=true", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("plus=true"), std::string::npos);
  Json j = run_json({"beta-coords", "--n", "2", "--x", "L[1;a*v^0]^1"});
  EXPECT_EQ(j["in_rn"], false);
  EXPECT_TRUE(j["coords"].is_null());
}

TEST(Cli, SegmentsAndHecke) {
  const std::string seg = R"({"segments":[{"center":"a","length":2}]})";
  EXPECT_EQ(run({"segments-to-drinfeld", "--n", "3", "--segments", seg}).out,
            "(a*v^1)^1 ; (a*v^-1)^1 ; 1\n");
  EXPECT_EQ(run({"segments-to-drinfeld", "--n", "2", "--segments", seg}).code, 1);
  const std::string split = R"([{"center":"a*v^-1","length":1},{"center":"a*v^1","length":1}])";
  EXPECT_EQ(run({"hecke-same-block", "--a", seg, "--b", split}).out, "true\n");
  EXPECT_EQ(run_json({"hecke-same-block", "--a", seg, "--b", R"([{"center":"b","length":2}])"})["same_block"],
            false);
}

TEST(Cli, FileSuppliesMissingOptions) {
  auto path = std::filesystem::temp_directory_path() / "affblocks_cli_file.json";
  {
    std::ofstream f(path);
    f << R"({"n": 3, "q": {"n": 3, "components": [["a*v^1"], ["a*v^-1"], []]}})";
  }
  EXPECT_EQ(run({"--file", path.string(), "decompose"}).out, "Q[2;a*v^0]\n");
  EXPECT_EQ(run({"--file", path.string(), "decompose", "--n", "4"}).code, 1);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--file", path.string(), "decompose"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"fundamental", "--n", "3", "--i", "1"}).code, 2);
  EXPECT_EQ(run({"fundamental", "--n", "three", "--i", "1", "--a", "a"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyIsDeterministic) {
  std::vector<std::string> args{"verify", "--seed", "7", "--iters", "40"};
  Result first = run(args);
  Result second = run(args);
  EXPECT_EQ(first.code, 0) << first.out;
  EXPECT_EQ(first.out, second.out);
  Json j = run_json({"verify", "--suite", "hecke", "--seed", "7", "--iters", "40"});
  EXPECT_EQ(j["passed"], true);
  for (const auto& r : j["results"]) EXPECT_EQ(r["suite"], "hecke");
}

TEST(Cli, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    std::string cmd = std::string("\"") + AFFBLOCKS_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("fundamental --n 2 --i 1 --a a"), 0);
  EXPECT_EQ(status("fundamental --n 2 --i 1 --a 'a*v^'"), 1);
  EXPECT_EQ(status("fundamental --n 2"), 2);
}
