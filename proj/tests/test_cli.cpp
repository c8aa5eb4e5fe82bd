#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace ramsum::cli {
namespace {

using nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

TEST(Compute, Examples) {
  EXPECT_EQ(call({"compute", "c", "--k", "4", "--j", "2"}).out, "-2\n");
  EXPECT_EQ(call({"compute", "c", "--k", "4", "--j", "-2"}).out, "-2\n");
  EXPECT_EQ(call({"compute", "S", "--k", "1", "--r", "5"}).out, "1\n");
  EXPECT_EQ(call({"compute", "S", "--k", "6", "--r", "3"}).out, "1/3\n");
  EXPECT_EQ(call({"compute", "E", "--ks", "2,3"}).out, "0\n");
  EXPECT_EQ(call({"compute", "S", "--ks", "2,2", "--r", "1"}).out, "3/4\n");
  EXPECT_EQ(call({"compute", "bernoulli", "--m", "12"}).out, "-691/2730\n");
  EXPECT_EQ(call({"compute", "phi", "--k", "100"}).out, "40\n");
  EXPECT_EQ(call({"compute", "mu", "--k", "30"}).out, "-1\n");
  EXPECT_EQ(call({"compute", "jordan", "--m", "2", "--k", "2"}).out, "3\n");
  EXPECT_EQ(call({"compute", "g", "--ks", "6,4", "--m", "2"}).out, "19200\n");
}

TEST(Compute, JsonAndCsv) {
  const auto r = call({"--format", "json", "compute", "bernoulli", "--m", "12", "--approx"});
  ASSERT_EQ(r.code, 0);
  const auto j = ordered_json::parse(r.out);
  EXPECT_EQ(j["function"], "bernoulli");
  EXPECT_EQ(j["value"]["num"], "-691");
  EXPECT_EQ(j["value"]["den"], "2730");
  EXPECT_NEAR(j["approx"].get<double>(), -691.0 / 2730.0, 1e-16);

  const auto c = call({"--format", "csv", "compute", "c", "--k", "9", "--j", "3"});
  EXPECT_EQ(c.out, "function,params,value\nc,k=9 j=3,-3\n");
}

TEST(Compute, UsageErrors) {
  EXPECT_EQ(call({"compute", "c", "--k", "4"}).code, kExitUsage);
  EXPECT_EQ(call({"compute", "c", "--k", "0", "--j", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"compute", "nope", "--k", "4"}).code, kExitUsage);
  EXPECT_EQ(call({"compute", "phi", "--k", "1099511627777"}).code, kExitUsage);
  EXPECT_EQ(call({"compute", "E", "--ks", "2,x"}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
  const auto e = call({"compute", "c", "--k", "0", "--j", "1"});
  EXPECT_FALSE(e.err.empty());
  EXPECT_TRUE(e.out.empty());
}

TEST(Table, RamanujanRow) {
  EXPECT_EQ(call({"table", "ramanujan-row", "--k", "6"}).out, "2,1,-1,-2,-1,1,2\n");
  const auto j = ordered_json::parse(call({"--format", "json", "table", "ramanujan-row", "--k", "6"}).out);
  EXPECT_EQ(j["k"], 6);
  EXPECT_EQ(j["values"].size(), 7u);
  const auto c = call({"--format", "csv", "table", "ramanujan-row", "--k", "4"}).out;
  EXPECT_EQ(c, "k,j,value\n4,0,2\n4,1,0\n4,2,-2\n4,3,0\n4,4,2\n");
}

TEST(Table, SrAndEValues) {
  const auto s = call({"table", "s-r", "--k-max", "5", "--r", "1", "--format", "csv"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(lines(s.out), 6u);
  EXPECT_EQ(s.out.substr(0, s.out.find('\n')), "k,r,value");
  EXPECT_NE(s.out.find("\n1,1,1\n"), std::string::npos);
  EXPECT_NE(s.out.find("\n2,1,1/4\n"), std::string::npos);
  EXPECT_NE(s.out.find("\n5,1,2/5\n"), std::string::npos);
  const auto e = call({"--format", "csv", "table", "e-values", "--n", "2", "--k-max", "4"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(lines(e.out), 17u);
  EXPECT_EQ(call({"table", "nope"}).code, kExitUsage);
}

TEST(Verify, ExitCodes) {
  const auto ok = call({"--format", "json", "verify", "--identity", "prop1", "--k-max", "100", "--r-max", "5"});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  const auto j = ordered_json::parse(ok.out);
  EXPECT_EQ(j["total"], 500);
  EXPECT_EQ(j["failed"], 0);

  EXPECT_EQ(call({"verify", "--identity", "prop4", "--k-max", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "--identity", "prop99"}).code, kExitUsage);
  EXPECT_EQ(call({"--tolerance", "1e-6", "verify", "--identity", "prop2"}).code, kExitUsage);

  // the r = 0 half-sum case is a genuine failure
  const auto bad = call({"--format", "json", "verify", "--identity", "half-sum", "--r-max", "3"});
  EXPECT_EQ(bad.code, kExitFailures);
  EXPECT_EQ(ordered_json::parse(bad.out)["failed"], 1);
}

TEST(Verify, ReportBodiesAreReproducible) {
  const std::vector<std::string> args = {"--format", "json", "verify", "--identity", "prop3",
                                         "--identity", "inverse-dft", "--k-max", "30",
                                         "--n-max", "30", "--random-functions", "2", "--no-timing"};
  auto with_threads = args;
  with_threads.insert(with_threads.begin(), {"--threads", "4"});
  const auto a = call(args);
  const auto b = call(args);
  const auto c = call(with_threads);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_FALSE(ordered_json::parse(a.out).contains("wall_time_seconds"));
}

TEST(Verify, CsvRoundTrip) {
  const auto r = call({"--format", "csv", "verify", "--identity", "prop2", "--k-max", "4", "--keep-cases"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 5u);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "identity,params,mode,lhs,rhs,abs_error,pass");
  std::string row;
  while (std::getline(in, row)) {
    EXPECT_EQ(row.rfind("prop2,k=", 0), 0u);
    EXPECT_EQ(row.substr(row.size() - 4), "true");
  }
}

}  // namespace
}  // namespace ramsum::cli
