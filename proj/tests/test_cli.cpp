#include "fixdiv/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using namespace fixdiv;

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

}  // namespace

TEST(Cli, Examples) {
  EXPECT_EQ(call({"gamma", "--set", "Z x 2Z", "--m", "2,2", "--k", "3"}).out, "8\n");
  const auto cmp = call({"compare", "--set", "Z x 2Z", "--m", "2,2", "--k", "3"});
  EXPECT_EQ(cmp.code, exit_code::ok);
  EXPECT_NE(cmp.out.find("evrard=48\n"), std::string::npos);
  EXPECT_NE(cmp.out.find("bhargava=16\n"), std::string::npos);
  EXPECT_NE(cmp.out.find("gamma=8\n"), std::string::npos);
  EXPECT_EQ(call({"fixdiv", "--set", "Z", "--poly", "5*x+3"}).out, "1\n");
}

TEST(Cli, BoundsTableRows) {
  const auto t = call({"compare", "--set", "Z", "--k", "3"});
  EXPECT_EQ(t.out, "(3) 6\n");
  const auto big = call({"compare", "--set", "Z x 2Z", "--k", "3"});
  EXPECT_NE(big.out.find("(3,1) 12\n"), std::string::npos);
  EXPECT_NE(big.out.find("(2,3) 48\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, exit_code::usage);
  EXPECT_EQ(call({"frobnicate"}).code, exit_code::usage);
  EXPECT_EQ(call({"gamma", "--set", "Z x 2Z", "--m", "2"}).code, exit_code::usage);
  EXPECT_EQ(call({"fixdiv", "--set", "Z", "--poly", "5*x+3", "--method", "fastest"}).code, exit_code::usage);
  const auto bad = call({"construct", "--set", "Z x 2Z", "--m", "2,2", "--k", "3", "--ideal", "16"});
  EXPECT_EQ(bad.code, exit_code::domain);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(call({"fixdiv", "--set", "Z", "--poly", "x/2"}).code, exit_code::domain);
  EXPECT_EQ(call({"gamma", "--set", "Q", "--m", "1", "--k", "1"}).code, exit_code::domain);
  EXPECT_EQ(call({"ordering", "--set", "Z", "--prime", "2", "--length", "40", "--cap", "2"}).code,
            exit_code::cap_exceeded);
}

TEST(Cli, JsonSchema) {
  const auto r = call({"gamma", "--set", "Z x 2Z", "--m", "2,2", "--k", "3", "--json"});
  ASSERT_EQ(r.code, exit_code::ok);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verb"], "gamma");
  EXPECT_EQ(j["input"]["set"], "Z x 2Z");
  EXPECT_EQ(j["result"]["generator"], "8");
  EXPECT_EQ(j["result"]["factors"]["2"], "3");
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_TRUE(j["witnesses"].is_array());
}

TEST(Cli, FixdivJsonWitnesses) {
  const auto r = call({"fixdiv", "--set", "Z", "--poly", "x^2+x", "--method", "two-point", "--point", "1", "--json"});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["generator"], "2");
  EXPECT_EQ(j["witnesses"].size(), 2u);
}

TEST(Cli, AllMethodsAgree) {
  const auto r = call({"fixdiv", "--set", "Z x 2Z", "--poly", "x^2*y^2 + x*y + 2*y", "--method", "all"});
  ASSERT_EQ(r.code, exit_code::ok) << r.err;
  for (const char* name : {"grid ", "grid-improved ", "points ", "two-point ", "coeff ", "general "})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, MemberAndOrdering) {
  const auto m = call({"member", "--set", "Z x Z", "--prime", "5", "--poly",
                       "1 - 53/30*y + 1/2*x*y + 12/5*y^2 - 1/2*x*y^2 - 19/30*y^3"});
  EXPECT_EQ(m.code, exit_code::ok);
  EXPECT_EQ(m.out.substr(0, 6), "false\n");
  EXPECT_NE(m.out.find("(0,3)"), std::string::npos);
  const auto o = call({"ordering", "--set", "2Z", "--prime", "2", "--length", "3"});
  EXPECT_EQ(o.out, "0 0\n2 1\n4 3\n");
}

TEST(Cli, Helpers) {
  EXPECT_EQ(parse_exponent("2,2"), (Exponent{2, 2}));
  EXPECT_EQ(parse_ideal("2^3*3"), FactoredIdeal::of(Integer(24)));
  EXPECT_EQ(parse_ideal("8"), FactoredIdeal::of(Integer(8)));
  EXPECT_THROW(parse_ideal("2^"), DomainError);
}
