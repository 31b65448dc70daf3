#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hyperfns/io.hpp"

using namespace hyperfns;
using namespace hyperfns::io;

TEST(FormatDouble, RoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(EvalResultJson, Schema) {
  const EvalResult r{Complex(1.5, -2.0), 1e-12, Status::NearPole};
  const json j = to_json(r);
  EXPECT_EQ(j["value"]["re"].get<double>(), 1.5);
  EXPECT_EQ(j["value"]["im"].get<double>(), -2.0);
  EXPECT_EQ(j["abs_err"].get<double>(), 1e-12);
  EXPECT_EQ(j["status"].get<std::string>(), "near_pole");
}

TEST(HarnessJson, Schema) {
  const json j = to_json(fourier::HarnessReport{1.0, 2.0, 0.5, 200.0, 1e-9});
  for (const char* k : {"lhs", "rhs", "ratio", "xi_max", "tail_estimate"}) EXPECT_TRUE(j.contains(k)) << k;
}

TEST(CatalogJson, InfiniteProgressions) {
  const json j = to_json(eis::pole_catalog(Space(7, 3), std::nullopt));
  ASSERT_TRUE(j.contains("e_poles"));
  EXPECT_EQ(j["e_poles"][0]["count"].get<std::string>(), "infinite");
  EXPECT_EQ(j["e_poles"][0]["step"].get<int>(), -2);
}

TEST(Fixture, ParsesDecimalStringsAndComplexObjects) {
  const json j = json::parse(R"({
    "case_id": "x", "digits": 50, "formula_ref": "r",
    "inputs": {"p": "3", "t": "1.5", "lambda": {"re": "0.7", "im": "-0.30000000000000000000000000000000000001"}},
    "expected": {"re": "1.2345678901234567890123456789", "im": "0"}})");
  const FixtureRecord r = parse_fixture(j);
  EXPECT_EQ(r.integer("p"), 3);
  EXPECT_EQ(r.real("t"), 1.5);
  EXPECT_EQ(r.complex("lambda"), Complex(0.7, -0.3));
  EXPECT_EQ(r.expected.real(), 1.2345678901234567890123456789);
  EXPECT_EQ(r.digits, 50);
  EXPECT_TRUE(r.has("lambda"));
  EXPECT_FALSE(r.has("k"));
}

TEST(Fixture, RejectsMissingFields) {
  EXPECT_ANY_THROW(parse_fixture(json::parse(R"({"case_id": "x", "inputs": {}})")));
}

TEST(Fixture, DirectoryOverrideAndBothFileShapes) {
  const auto dir = std::filesystem::temp_directory_path() / "hyperfns_fixture_test";
  std::filesystem::create_directories(dir);
  const std::string rec = R"({"case_id":"a","inputs":{"z":"1"},"expected":{"re":"0","im":"0"},"digits":30})";
  std::ofstream(dir / "one.json") << "[" << rec << "]";
  std::ofstream(dir / "two.json") << R"({"suite":"two","cases":[)" << rec << "]}";
  ::setenv("HYPERFNS_FIXTURES", dir.c_str(), 1);
  EXPECT_EQ(fixture_dir(), dir.string());
  EXPECT_EQ(fixture_suites(), (std::vector<std::string>{"one", "two"}));
  EXPECT_EQ(load_fixtures("one").size(), 1u);
  EXPECT_EQ(load_fixtures("two")[0].case_id, "a");
  EXPECT_THROW(load_fixtures("three"), Error);
  ::unsetenv("HYPERFNS_FIXTURES");
  std::filesystem::remove_all(dir);
}

TEST(Fixture, CommittedFilesFollowSchema) {
  const auto suites = fixture_suites();
  ASSERT_FALSE(suites.empty());
  for (const auto& suite : suites) {
    std::ifstream in(std::filesystem::path(fixture_dir()) / (suite + ".json"));
    const json doc = json::parse(in);
    std::string prev;
    for (const auto& c : doc.at("cases")) {
      EXPECT_GE(c.at("digits").get<int>(), 30) << suite;
      EXPECT_TRUE(c.at("expected").at("re").is_string());
      const auto id = c.at("case_id").get<std::string>();
      EXPECT_LT(prev, id) << "case ids must be sorted and unique in " << suite;
      prev = id;
    }
  }
}
