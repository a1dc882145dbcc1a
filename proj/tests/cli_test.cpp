#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gtest/gtest.h"

namespace {

using nlohmann::json;

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell. stderr is merged into `out` when requested.
Result run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(SCHUBERT_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

TEST(Cli, SchubertText) {
  EXPECT_EQ(run("schubert 1324").out, "x1 + x2\n");
  EXPECT_EQ(run("schubert 2413").out, "x1^2*x2 + x1*x2^2\n");
  EXPECT_EQ(run("schubert 4321").out, "x1^3*x2^2*x3\n");
  EXPECT_EQ(run("schubert 1234").out, "1\n");
  EXPECT_EQ(run("schubert 2413 --method chain").out, "x1^2*x2 + x1*x2^2\n");
  EXPECT_EQ(run("schubert 1,3,2 --n 4").out, "x1 + x2\n");
}

TEST(Cli, SchubertJson) {
  const auto r = run("schubert 2413 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"([{"exp":[2,1,0,0],"coef":1},{"exp":[1,2,0,0],"coef":1}])"));
}

TEST(Cli, EnvironmentSelectsFormat) {
  ::setenv("SCHUBERT_FORMAT", "json", 1);
  const auto from_env = run("schubert 1324");
  ::unsetenv("SCHUBERT_FORMAT");
  EXPECT_EQ(from_env.out, run("schubert 1324 --format json").out);
  EXPECT_NE(from_env.out, run("schubert 1324").out);
}

TEST(Cli, Skew) {
  const std::string expected = "x1^3*x2 + x1^2*x2^2 + x1^3*x3 + x1^2*x2*x3\n";
  EXPECT_EQ(run("skew 2413 1324").out, expected);
  EXPECT_EQ(run("skew 2413 1324 --method chains").out, expected);
  EXPECT_EQ(run("skew 2413 1324 --method lr").out, expected);
  EXPECT_EQ(json::parse(run("skew 2413 1324 --expand").out), json::parse(R"({"3241":1,"3412":1,"4132":1})"));
  EXPECT_EQ(run("skew 4321 1432").out, run("schubert 1432").out);
}

TEST(Cli, SkewRejectsIncomparable) {
  const auto r = run("skew 1324 2413", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("error: u not <= w"), std::string::npos);
}

TEST(Cli, BadInputExitsWithError) {
  EXPECT_EQ(run("schubert 1224").status, 2);
  EXPECT_NE(run("schubert 2413 --format yaml").status, 0);
  EXPECT_NE(run("").status, 0);
}

TEST(Cli, Lr) {
  const auto r = run("lr 1324 2143");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("2413 1\n"), std::string::npos);
  EXPECT_EQ(run("lr 213 132").out, "231 1\n312 1\n");
  const auto j = run("lr 213 132 --format json");
  std::size_t lines = 0;
  std::size_t start = 0;
  for (std::size_t nl; (nl = j.out.find('\n', start)) != std::string::npos; start = nl + 1) {
    const auto row = json::parse(j.out.substr(start, nl - start));
    EXPECT_EQ(row.at("u"), "213");
    EXPECT_EQ(row.at("c"), 1);
    ++lines;
  }
  EXPECT_EQ(lines, 2u);
}

TEST(Cli, LrAppendsToCache) {
  const auto path =
      std::filesystem::temp_directory_path() / ("cli_lr_" + std::to_string(::getpid()) + ".ndjson");
  std::filesystem::remove(path);
  EXPECT_EQ(run("lr 213 132 --out " + path.string()).status, 0);
  EXPECT_EQ(run("lr 213 132 --out " + path.string()).status, 0);
  std::ifstream in(path);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) count += !line.empty();
  EXPECT_EQ(count, 2);
  std::filesystem::remove(path);
}

TEST(Cli, RcGraphs) {
  const auto ascii = run("rcgraphs 1432");
  EXPECT_NE(ascii.out.find(". + +\n. .\n+\n"), std::string::npos);
  const auto j = run("rcgraphs 1432 --render json");
  std::size_t count = 0;
  bool found = false;
  std::size_t start = 0;
  for (std::size_t nl; (nl = j.out.find('\n', start)) != std::string::npos; start = nl + 1) {
    const auto g = json::parse(j.out.substr(start, nl - start));
    found = found || g == json::parse(R"({"n":4,"crossings":[[1,3],[1,2],[3,1]]})");
    ++count;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(count, 5u);
}

TEST(Cli, Chains) {
  const auto r = run("chains 1432 4321 --type 1,2,0");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1432 -(1,1)-> 4132 -(2,1)-> 4231 -(2,2)-> 4321\n"), std::string::npos);
  const auto j = run("chains 1432 4321 --type 1,2 --format json");
  EXPECT_NE(j.out.find(R"({"end":"4321","start":"1432","steps":[[1,1],[2,1],[2,2]]})"), std::string::npos);
  EXPECT_EQ(run("chains 2413 1324").out, "");
}

TEST(Cli, Verify) {
  const auto r = run("verify --suite bijection --n 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("bijection n=4: pass", 0), 0u);
  const auto j = run("verify --suite routes --n 3 --format json");
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(json::parse(j.out).at("passed"), true);
}

}  // namespace
