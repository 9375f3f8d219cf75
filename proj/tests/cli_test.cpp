#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

namespace calamity::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliWeekdayTest, Methods) {
  EXPECT_EQ(invoke({"weekday", "2000-04-04", "--method", "calamity"}).out, "Tuesday (2)\n");
  EXPECT_EQ(invoke({"weekday", "2025-03-14", "--method", "standard"}).out, "Friday (5)\n");
  EXPECT_EQ(invoke({"weekday", "2025-03-14", "--method", "oracle"}).out, "Friday (5)\n");
  EXPECT_EQ(invoke({"weekday", "2025-12-25", "--direction", "backward"}).out, "Thursday (4)\n");
}

TEST(CliWeekdayTest, Trace) {
  const Result r = invoke({"weekday", "2025-12-25", "--trace", "--direction", "auto"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("month code       25 (Dec)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("backward gap 3 + units digit 5 -> -1"), std::string::npos) << r.out;
}

TEST(CliWeekdayTest, JsonTrace) {
  const Result r = invoke({"weekday", "2025-12-25", "--trace", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("weekday").at("index"), 4);
  EXPECT_EQ(j.at("trace").at("target").at("offset"), 6);
}

TEST(CliWeekdayTest, UsageErrors) {
  EXPECT_EQ(invoke({"weekday", "2025-13-01"}).code, kUsage);
  EXPECT_EQ(invoke({"weekday", "1500-01-01"}).code, kUsage);
  EXPECT_EQ(invoke({"weekday", "yesterday"}).code, kUsage);
  EXPECT_EQ(invoke({"weekday", "2025-01-01", "--method", "zeller"}).code, kUsage);
  EXPECT_EQ(invoke({"weekday", "2025-01-01", "--method", "standard", "--trace"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
}

TEST(CliTablesTest, Systems) {
  const Result k0 = invoke({"tables", "--system", "0"});
  EXPECT_EQ(k0.code, 0);
  EXPECT_NE(k0.out.find("  43  00  00  34  52  16  34  61  25  43  00  25"), std::string::npos) << k0.out;
  EXPECT_NE(k0.out.find("1524"), std::string::npos);
  const Result k5 = invoke({"tables", "--system", "5"});
  EXPECT_NE(k5.out.find("  61  25  25  52  00  34  52  16  43  61  25  43"), std::string::npos) << k5.out;
  const Result leap = invoke({"tables", "--system", "0", "--leap"});
  EXPECT_NE(leap.out.find("  34  61  00  34"), std::string::npos) << leap.out;
  EXPECT_EQ(invoke({"tables", "--system", "7"}).code, kUsage);
}

TEST(CliClassifyTest, Systems) {
  const Result wang = invoke({"classify", "1/1", "3/5", "5/7", "7/9", "9/3", "2/12", "12/10", "10/8", "8/6", "6/4",
                              "4/2", "11/12"});
  EXPECT_EQ(wang.code, 0);
  EXPECT_EQ(wang.out.substr(0, 6), "k = 5\n");
  const Result conway = invoke({"classify", "1/3", "2/28", "3/7", "4/4", "5/9", "6/6", "7/11", "8/8", "9/5",
                                "10/10", "11/7", "12/12"});
  EXPECT_EQ(conway.out.substr(0, 6), "k = 0\n");
}

TEST(CliClassifyTest, NotUniformAndParseErrors) {
  const Result bad = invoke({"classify", "1/5", "2/28", "3/7", "4/4", "5/9", "6/6", "7/11", "8/8", "9/5", "10/10",
                             "11/7", "12/12"});
  EXPECT_EQ(bad.code, kCheckFailed);
  EXPECT_NE(bad.out.find("inconsistent months: Jan"), std::string::npos) << bad.out;
  EXPECT_EQ(invoke({"classify", "1/3", "2/28"}).code, kUsage);
  EXPECT_EQ(invoke({"classify", "1-3", "2/28", "3/7", "4/4", "5/9", "6/6", "7/11", "8/8", "9/5", "10/10", "11/7",
                    "12/12"})
                .code,
            kUsage);
}

TEST(CliVerifyTest, SingleLeapYear) {
  const Result r = invoke({"verify", "--from", "2000", "--to", "2000", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("dates_tested"), 366);
  EXPECT_EQ(j.at("failures"), 0);
  EXPECT_GT(j.at("checks_run").get<long>(), 366);
}

TEST(CliVerifyTest, RangeErrors) {
  EXPECT_EQ(invoke({"verify", "--from", "2001", "--to", "2000"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--from", "1500", "--to", "2000"}).code, kUsage);
}

TEST(CliMetricsTest, Table) {
  const Result r = invoke({"metrics", "--from", "1999", "--to", "1999"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Total operations"), std::string::npos);
  const Result j = invoke({"metrics", "--from", "1999", "--to", "1999", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("standard").at("total_per_date"), 5);
  EXPECT_EQ(doc.at("calamity").at("total_per_date"), 4);
  EXPECT_EQ(doc.at("standard").at("max_intermediate"), 123);
  EXPECT_EQ(doc.at("standard").at("divisions_per_date"), 1);
  EXPECT_EQ(invoke({"metrics", "--from", "2000", "--to", "1999"}).code, kUsage);
}

TEST(CliJsonTest, OutputsAreByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"weekday", "2024-02-29", "--trace", "--format", "json"},
           {"tables", "--system", "3", "--format", "json"},
           {"metrics", "--from", "2000", "--to", "2000", "--format", "json"}}) {
    const Result r = invoke(args);
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
  }
}

}  // namespace
}  // namespace calamity::cli
