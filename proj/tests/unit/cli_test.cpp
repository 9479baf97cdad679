#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "brauer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = brauer::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, Phi) {
  const auto r = run({"phi", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j.at("delta"), "-2");
  ASSERT_EQ(j.at("terms").size(), 3u);
  for (const auto& t : j.at("terms")) EXPECT_EQ(t.at("coeff"), "1");
  EXPECT_EQ(j.at("terms")[0].at("diagram").at("pairs"), nlohmann::json::parse("[[0,1],[2,3]]"));
  EXPECT_EQ(run({"phi", "--n", "1", "--format", "text"}).out,
            "(1)(2,2)[0-1,2-3] + (1)(2,2)[0-2,1-3] + (1)(2,2)[0-3,1-2]\n");
}

TEST(Cli, Rank) {
  const auto r = run({"rank", "--family", "sp", "--m", "2", "--k", "2", "--l", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r), nlohmann::json::parse(R"({"rank":2,"kernel_dim":1})"));
  const auto n = run({"rank", "--family", "sp", "--n", "1", "--k", "2", "--l", "2", "--jobs", "2"});
  EXPECT_EQ(n.out, r.out);
  const auto p = run({"rank", "--family", "sp", "--n", "1", "--k", "2", "--l", "2", "--modulus", "5"});
  EXPECT_EQ(p.out, r.out);
}

TEST(Cli, VerifyPau) {
  const auto r = run({"verify", "--suite", "pau", "--family", "sp", "--m", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j.at("suite"), "pau");
  EXPECT_TRUE(j.at("pass").get<bool>());
  for (const auto& rec : j.at("records")) {
    EXPECT_TRUE(rec.contains("case"));
    EXPECT_TRUE(rec.contains("expected"));
    EXPECT_TRUE(rec.contains("computed"));
  }
}

TEST(Cli, VerifySmallSuites) {
  for (const char* suite : {"relations", "presentation", "phi"}) {
    const auto r = run({"verify", "--suite", suite, "--format", "text"});
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out;
    EXPECT_NE(r.out.find("0 of "), std::string::npos);
  }
}

TEST(Cli, ComposeAndTensor) {
  const std::string cap = R"({"k":2,"l":0,"pairs":[[0,1]]})";
  const std::string cup = R"({"k":0,"l":2,"pairs":[[0,1]]})";
  auto r = run({"compose", cap, cup, "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "(d)(0,0)[]\n");
  r = run({"compose", cap, cup, "--delta", "3"});
  EXPECT_EQ(json_of(r).at("terms")[0].at("coeff"), "3");
  r = run({"tensor", cap, cup, "--format", "text"});
  EXPECT_EQ(r.out, "(1)(2,2)[0-1,2-3]\n");
  r = run({"star", cap, "--format", "text"});
  EXPECT_EQ(r.out, "(1)(0,2)[0-1]\n");
  r = run({"compose", cap, cap});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, MorphismInputRoundTrip) {
  const auto sigma = run({"sigma", "--r", "3", "--eps", "-1", "--delta", "-4"});
  ASSERT_EQ(sigma.code, 0) << sigma.err;
  const auto squared = run({"compose", sigma.out, sigma.out, "--format", "text"});
  ASSERT_EQ(squared.code, 0) << squared.err;
  // Sigma^2 = 3! Sigma.
  EXPECT_NE(squared.out.find("(6)(3,3)"), std::string::npos);
  EXPECT_EQ(squared.out.find("(1)(3,3)"), std::string::npos);
}

TEST(Cli, Words) {
  auto r = run({"word-eval", "--word", "0:U:0; 0:A:0"});
  EXPECT_EQ(json_of(r), nlohmann::json::parse(R"({"delta_power":1,"diagram":{"k":0,"l":0,"pairs":[]}})"));
  r = run({"word-eval", "--word", "", "--domain", "2", "--format", "text"});
  EXPECT_EQ(r.out, "d^0 (2,2)[0-2,1-3]\n");
  r = run({"word-synth", R"({"k":2,"l":2,"pairs":[[0,1],[2,3]]})"});
  EXPECT_EQ(json_of(r).at("word"), "0:A:0; 0:U:0");
  r = run({"word-eval", "--word", "0:Z:0"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ElementsAndFunctor) {
  auto r = run({"ep", "--m", "2", "--p", "1", "--method", "formula"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, run({"ep", "--m", "2", "--p", "1"}).out);
  r = run({"dpq", "--n", "1", "--p", "0", "--q", "0"});
  EXPECT_EQ(json_of(r).at("terms").size(), 6u);
  r = run({"functor-matrix", "--family", "o", "--m", "2", R"({"k":2,"l":0,"pairs":[[0,1]]})"});
  EXPECT_EQ(json_of(r), nlohmann::json::parse(R"({"rows":1,"cols":4,"entries":[[0,0,"1"],[0,3,"1"]]})"));
  r = run({"functor-matrix", "--family", "sp", "--n", "1", "--method", "layered", R"({"k":2,"l":0,"pairs":[[0,1]]})"});
  EXPECT_EQ(json_of(r), nlohmann::json::parse(R"({"rows":1,"cols":4,"entries":[[0,1,"1"],[0,2,"-1"]]})"));
  r = run({"trace", "--family", "sp", "--n", "1", R"({"k":2,"l":2,"pairs":[[0,1],[2,3]]})"});
  EXPECT_EQ(json_of(r), nlohmann::json::parse(R"({"trace":"-2","jones":"-2","pass":true})"));
}

TEST(Cli, KernelAndIdeals) {
  auto r = run({"kernel", "--family", "sp", "--n", "1", "--k", "2", "--l", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j.at("kernel_dim"), 1);
  EXPECT_EQ(j.at("basis").size(), 1u);
  r = run({"kernel", "--family", "o", "--m", "2", "--k", "3", "--l", "3", "--dimension-only"});
  EXPECT_EQ(json_of(r).at("kernel_dim"), 5);
  r = run({"ideal-span", "--generator", "phi:1", "--r", "3"});
  EXPECT_EQ(json_of(r).at("dimension"), 10);
  r = run({"ideal-span", "--generator", "ep:2:1", "--r", "3"});
  EXPECT_EQ(json_of(r).at("dimension"), 5);
  r = run({"ideal-span", "--tensor", "--family", "sp", "--n", "1", "--k", "4", "--l", "0"});
  EXPECT_EQ(json_of(r).at("dimension"), 1);
  r = run({"ideal-span", "--r", "3"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"rank", "--family", "sp", "--m", "3", "--k", "1", "--l", "1"}).code, 2);
  EXPECT_EQ(run({"rank", "--family", "o", "--k", "1", "--l", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"phi", "--n", "1", "--modulus", "4"}).code, 2);
  EXPECT_EQ(run({"compose", "{not json", "{}"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"kernel", "--family", "o", "--m", "2", "--k", "3", "--l", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}
