#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace powermonoid::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, ScalarCommands) {
  auto r = call({"sum", "{-1,0,2}", "{0,1,3}"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{-1,0,1,2,3,5}\n");
  EXPECT_EQ(call({"bdim", "{-5,-4,-2,0,1,5,6,7}"}).out, "4\n");
  EXPECT_EQ(call({"kfold", "{-1,0,2}", "2"}).out, "{-2,-1,0,1,2,4}\n");
  EXPECT_EQ(call({"apply", "negation", "{-1,0,2}"}).out, "{-2,0,1}\n");
  EXPECT_EQ(call({"sum", "-1..1", "{0,5}", "--output", "json"}).out,
            "{\"op\":\"sum\",\"result\":\"{-1,0,1,4,5,6}\"}\n");
}

TEST(CliTest, StructuredCommands) {
  EXPECT_EQ(call({"runs", "{-5,-4,-2,0,1,5,6,7}"}).out, "[[-5,-4],[-2,-2],[0,1],[5,7]]\n");
  EXPECT_EQ(call({"factor", "{-1,0,2}"}).out,
            "{\"atom\":true,\"factorizations\":[],\"set\":\"{-1,0,2}\"}\n");
  const auto r = call({"verify", "lemma22"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"lemma\":\"lemma22\""), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  auto r = call({"sum", "{-1,0,2}", "bad"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("'bad'"), std::string::npos);
  EXPECT_EQ(call({"factor", "{1,2}"}).code, kExitUsage);
  EXPECT_EQ(call({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "lemma99"}).code, kExitUsage);
  EXPECT_EQ(call({"search-autos", "--window", "9"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "theorem", "--case", "1", "--A", "{-2,0,1,2,5}", "--B",
                  "{-2,0,1,5}"}).code,
            kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(CliTest, TheoremSwapsOrientation) {
  const auto r = call({"verify", "theorem", "--case", "1", "--A", "{-2,0,3,5}", "--B", "{-2,0,2,5}"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"swapped\":true"), std::string::npos);
  EXPECT_NE(r.out.find("\"witness_point\":2"), std::string::npos);
}

TEST(CliTest, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "sigma0", "--seed", "5", "--samples", "60"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(CliTest, SearchReportsSurvivors) {
  const auto r = call({"search-autos", "--window", "1", "--oracle"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"survivors\":2"), std::string::npos);
  EXPECT_NE(r.out.find("\"match\":true"), std::string::npos);
}

}  // namespace
}  // namespace powermonoid::cli
