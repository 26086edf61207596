#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "homcover/cli.hpp"
#include "homcover/error.hpp"
#include "json.hpp"

namespace {

using namespace homcover;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, HnPrintsTwelve) {
  CliRun r = run({"hn", "--group", "C2xC3", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("h=12"), std::string::npos) << r.out;
}

TEST(Cli, RankAndInfo) {
  CliRun rank = run({"rank", "--group", "C2^3"});
  EXPECT_EQ(rank.code, kExitOk);
  EXPECT_NE(rank.out.find("rank=3"), std::string::npos) << rank.out;
  CliRun info = run({"info", "--group", "A5"});
  EXPECT_EQ(info.code, kExitOk);
  EXPECT_NE(info.out.find("order=60"), std::string::npos);
  EXPECT_NE(info.out.find("solvable=false"), std::string::npos);
}

TEST(Cli, GammaCount) {
  CliRun r = run({"gamma-count", "--group", "A5", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("count=2280"), std::string::npos) << r.out;
}

TEST(Cli, OrbitsJsonLines) {
  CliRun r = run({"orbits", "--group", "S3", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  auto summary = nlohmann::json::parse(line);
  EXPECT_EQ(summary["h"], 3);
  EXPECT_EQ(summary["free_action"], true);
  int orbit_lines = 0;
  while (std::getline(lines, line)) {
    auto rec = nlohmann::json::parse(line);
    EXPECT_EQ(rec["size"], 6);
    ++orbit_lines;
  }
  EXPECT_EQ(orbit_lines, 3);
}

TEST(Cli, CoverExport) {
  std::string path = ::testing::TempDir() + "c2.cover";
  CliRun r = run({"cover", "--group", "C2", "--n", "2", "--export", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "cover base=C2 n=2 h=3 order=4");
  int generators = 0;
  for (std::string line; std::getline(in, line);) ++generators;
  EXPECT_EQ(generators, 2);
  std::remove(path.c_str());
}

TEST(Cli, VerifyPqSuitePasses) {
  CliRun r = run({"verify", "--group", "pq(2,3)", "--n", "2", "--suite", "pq"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("cover_order=108"), std::string::npos);
}

TEST(Cli, VerifyFailureExitsOne) {
  CliRun r = run({"verify", "--group", "C2xC3", "--n", "2", "--suite", "lifting"});
  EXPECT_EQ(r.code, kExitCheckFailed) << r.out;
  EXPECT_NE(r.out.find("witness="), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"hn", "--group", "C2x", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"hn", "--group", "C2"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"hn", "--group", "pq(3,5)", "--n", "2"}).code, kExitUsage);
  CliRun cap = run({"cover", "--group", "A5", "--n", "2"});
  EXPECT_EQ(cap.code, kExitCap);
  EXPECT_NE(cap.err.find("CoverTooLarge"), std::string::npos) << cap.err;
  EXPECT_EQ(run({"gamma-count", "--group", "S4", "--n", "2", "--max-candidates", "10"}).code, kExitOk);
  EXPECT_EQ(run({"orbits", "--group", "S4", "--n", "2", "--max-candidates", "10"}).code, kExitCap);
  EXPECT_EQ(run({"info", "--group", "C100", "--max-order", "50"}).code, kExitCap);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, CommandRoundTrip) {
  std::vector<std::vector<std::string>> cases = {
      {"hn", "--group", "C2xC3", "--n", "2"},
      {"verify", "--group", "S3", "--n", "2", "--suite", "pq", "--seed", "9", "--threads", "3",
       "--samples", "17", "--format", "json"},
      {"tower", "--group", "C6", "--n", "3", "--m", "2", "--max-closure", "1000"},
      {"cover", "--group", "C2", "--n", "2", "--export", "x.cover", "--elements"},
  };
  for (const auto& args : cases) {
    Command c = parse_command(args);
    EXPECT_EQ(parse_command(print_command(c)), c);
  }
  EXPECT_THROW(parse_command({"hn", "--n", "x"}), Error);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args = {"verify", "--group", "C2xC2", "--n", "2", "--seed", "5", "--threads", "4"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
