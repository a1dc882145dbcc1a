#include "schubert/io.hpp"

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "gtest/gtest.h"

namespace schubert {
namespace {

using io::json;

Permutation P(const char* s) { return Permutation::parse(s); }

std::filesystem::path temp_path(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / (name + "_" + std::to_string(::getpid()) + ".ndjson");
  std::filesystem::remove(path);
  return path;
}

TEST(Io, ChainJson) {
  LabeledChain chain(P("1432"));
  chain.push({1, 1}, P("4132"));
  chain.push({2, 1}, P("4231"));
  chain.push({2, 2}, P("4321"));
  const json j = io::chain_to_json(chain);
  EXPECT_EQ(j, json::parse(R"({"start":"1432","steps":[[1,1],[2,1],[2,2]],"end":"4321"})"));
  EXPECT_EQ(io::chain_from_json(j), chain);
  json no_end = j;
  no_end.erase("end");
  EXPECT_EQ(io::chain_from_json(no_end), chain);
  EXPECT_THROW(io::chain_from_json(json::parse(R"({"start":"1432","steps":[[3,1]]})")), std::invalid_argument);
}

TEST(Io, RcGraphJson) {
  const RcGraph g(4, {{3, 1}, {1, 2}, {1, 3}});
  const json j = io::rcgraph_to_json(g);
  EXPECT_EQ(j, json::parse(R"({"n":4,"crossings":[[1,3],[1,2],[3,1]]})"));
  EXPECT_EQ(io::rcgraph_from_json(j), g);
}

TEST(Io, PolynomialJson) {
  const Polynomial p = Polynomial::parse("x1^2*x2 - 3*x1*x2^2");
  const json j = io::polynomial_to_json(p, 3);
  EXPECT_EQ(j, json::parse(R"([{"exp":[2,1,0],"coef":1},{"exp":[1,2,0],"coef":-3}])"));
  EXPECT_EQ(io::polynomial_from_json(j), p);
  EXPECT_EQ(io::polynomial_to_json(Polynomial()), json::array());
}

TEST(Io, ExpansionJson) {
  SchubertExpansion f(4);
  f.add(P("4132"), 1);
  f.add(P("3241"), 2);
  const json j = io::expansion_to_json(f);
  EXPECT_EQ(j.dump(), R"({"3241":2,"4132":1})");
  EXPECT_EQ(io::expansion_from_json(j, 4), f);
  EXPECT_THROW(io::expansion_from_json(json::array(), 4), std::invalid_argument);
}

TEST(Io, Compositions) {
  EXPECT_EQ(io::parse_composition("1,2,0"), (Composition{1, 2, 0}));
  EXPECT_EQ(io::parse_composition("3"), (Composition{3}));
  EXPECT_THROW(io::parse_composition("1,x"), std::exception);
  EXPECT_THROW(io::parse_composition("1,-1"), std::invalid_argument);
  EXPECT_EQ(io::composition_from_json(io::composition_to_json({1, 2, 0})), (Composition{1, 2, 0}));
}

TEST(Io, LrRecords) {
  const auto rows = io::lr_records(P("213"), P("132"), lr_coefficients(P("213"), P("132")));
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) EXPECT_EQ(io::lr_record_from_json(io::lr_record_to_json(r)), r);
  EXPECT_THROW(io::lr_record_from_json(json::parse(R"({"n":3,"u":"213","v":"132","w":"231","c":0})")),
               std::invalid_argument);
  EXPECT_THROW(io::lr_record_from_json(json::parse(R"({"n":3,"u":"213","v":"132","w":"321","c":1})")),
               std::invalid_argument);
}

TEST(Io, LrCacheAppendsAndDeduplicates) {
  const auto path = temp_path("lr_cache");
  const auto rows = io::lr_records(P("1324"), P("2143"), lr_coefficients(P("1324"), P("2143")));
  {
    io::LrCache cache(path);
    EXPECT_TRUE(cache.records().empty());
    EXPECT_EQ(cache.append(rows), rows.size());
    EXPECT_EQ(cache.append(rows), 0u);
  }
  {
    // A duplicated line on disk collapses on load.
    std::ofstream out(path, std::ios::app);
    out << io::lr_record_to_json(rows.front()).dump() << "\n";
  }
  io::LrCache reloaded(path);
  EXPECT_EQ(reloaded.records(), rows);
  EXPECT_TRUE(reloaded.contains(rows.front()));
  {
    std::ofstream out(path, std::ios::app);
    out << "{not json}\n";
  }
  EXPECT_THROW(io::LrCache{path}, std::invalid_argument);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace schubert
