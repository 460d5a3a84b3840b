#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace kemeny {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, KemenyJson) {
  const auto r = run({"kemeny", "path:3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["tau"], "1");
  EXPECT_EQ(rational_from_json(j["kemeny"]), Rational(3, 2));
  EXPECT_EQ(j["moments"].size(), 3u);
  const auto s = Json::parse(run({"kemeny", "spider:2,3", "--format", "json"}).out);
  EXPECT_EQ(rational_from_json(s["kemeny"]), Rational(19, 2));
}

TEST(Cli, DecimalRendering) {
  const auto r = run({"kemeny", "path:3", "--decimal", "3"});
  EXPECT_NE(r.out.find("1.500"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"kemeny", "nonsense"}).code, 2);
  EXPECT_EQ(run({"kemeny", "path:1"}).code, 2);
  EXPECT_EQ(run({"kemeny", temp_file("kem_bad.txt", "3 x\n")}).code, 2);
  EXPECT_EQ(run({"kemeny", temp_file("kem_disc.txt", "4 2\n1 2\n3 4\n")}).code, 3);
  EXPECT_EQ(run({"braess", "path:5", "--edge", "1,2"}).code, 4);
  EXPECT_EQ(run({"braess", "path:5"}).code, 2);
  EXPECT_EQ(run({"kemeny", "path:5", "--bogus"}).code, 2);
  EXPECT_EQ(run({"braess", "spider:2,3", "--census", "--fast"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BraessCensusCsv) {
  const auto r = run({"braess", "path:8", "--census", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "u,v,num,den,braess,category");
  int rows = 0;
  int braess = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.find(",true,") != std::string::npos) ++braess;
  }
  EXPECT_EQ(rows, 21);
  EXPECT_EQ(braess, 2);
  const auto s = Json::parse(run({"braess", "spider:2,5", "--census", "--format", "json"}).out);
  EXPECT_EQ(s["braess_count"], 0);
}

TEST(Cli, FastVerify) {
  const auto r = run({"braess", "broom:10,3", "--census", "--fast", "--verify", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["totals"]["B1"], 3);
  EXPECT_EQ(run({"braess", "path:12", "--census", "--fast", "--verify"}).code, 0);
}

TEST(Cli, SingleEdge) {
  const auto j = Json::parse(run({"braess", "path:8", "--edge", "3,1", "--format", "json"}).out);
  EXPECT_EQ(j["braess"], true);
  EXPECT_EQ(rational_from_json(j["delta"]), Rational(17, 48));
}

TEST(Cli, DeterministicAcrossParallelism) {
  const auto a = run({"braess", "broom:6,3", "--census", "--format", "json"});
  const auto b = run({"braess", "broom:6,3", "--census", "--format", "json", "--parallelism", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run({"braess", "broom:6,3", "--census", "--format", "json"}).out);
}

TEST(Cli, GraphRoundTrip) {
  const std::string path = (std::filesystem::temp_directory_path() / "kem_rt.txt").string();
  ASSERT_EQ(run({"graph", "spider:3,4", "-o", path}).code, 0);
  std::ifstream in(path);
  EXPECT_EQ(read_edge_list(in), build(family::Spider{3, 4}));
  EXPECT_EQ(run({"kemeny", path, "--format", "json"}).out.find("\"n\": 13") != std::string::npos, true);
}

TEST(Cli, AsymptoticsTables) {
  const auto c = run({"asymptotics", "constants", "--tol", "1e-4", "--format", "csv"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("S1_inf,0.4001"), std::string::npos) << c.out;
  const auto p = run({"asymptotics", "path-count", "--k", "1000,2000", "--tol", "1e-4", "--format", "csv"});
  EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "k,exact_count,predicted,gap,relative_error");
  const auto b = run({"asymptotics", "broom-trend", "--jmax", "5", "--format", "csv"});
  EXPECT_NE(b.out.find("32,2,1,6,15,"), std::string::npos) << b.out;
  EXPECT_EQ(run({"asymptotics", "nope"}).code, 2);
}

TEST(Cli, ConfigFile) {
  const auto cfg = temp_file("kem_tol.conf", "path_gap = 0.5\nseries_tol = 1e-3\n");
  const auto r = run({"asymptotics", "path-gap", "--k", "10000", "--config", cfg, "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(",yes"), std::string::npos);
  EXPECT_EQ(run({"asymptotics", "constants", "--config", temp_file("kem_bad.conf", "oops\n")}).code, 2);
}

TEST(Settings, Parse) {
  std::istringstream in("# c\n a = 1.5 \nb=x # tail\n\n");
  const auto s = Settings::parse(in);
  EXPECT_DOUBLE_EQ(s.number("a"), 1.5);
  EXPECT_THROW(s.number("b"), ParseError);
  EXPECT_THROW(s.number("c"), ParseError);
  EXPECT_DOUBLE_EQ(s.number("c", 2.0), 2.0);
}

TEST(Io, CensusJsonSchema) {
  const auto c = broom_census_fast(5, 2);
  const auto j = census_json(c);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["family"], "broom:5,2");
  EXPECT_EQ(j["entries"].size(), c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    EXPECT_EQ(rational_from_json(j["entries"][i]["delta"]), c.entries[i].delta);
  }
}

}  // namespace
}  // namespace kemeny
