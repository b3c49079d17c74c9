#include <gtest/gtest.h>

#include "twistchar/report.hpp"

using namespace twistchar;

namespace {

ScanConfig small_config() {
  ScanConfig c;
  c.theorems = {Theorem::SchurFac, Theorem::Symplectic};
  c.ts = {2, 3};
  c.ns = {1};
  c.max_size = 4;
  c.seeds = {1, 2};
  return c;
}

std::vector<std::string> json_lines(const ScanConfig& c, ScanSummary* summary = nullptr) {
  std::vector<std::string> lines;
  const auto s = run_scan(c, [&](const ScanRecord& r) { lines.push_back(record_json(r).dump()); });
  if (summary) *summary = s;
  lines.push_back(summary_json(s).dump());
  return lines;
}

}  // namespace

TEST(Scan, CanonicalOrder) {
  const auto cases = scan_cases(small_config());
  ASSERT_FALSE(cases.empty());
  for (std::size_t i = 1; i < cases.size(); ++i) {
    const auto& a = cases[i - 1];
    const auto& b = cases[i];
    const auto key = [](const ScanCase& c) {
      return std::tuple(static_cast<int>(c.theorem), c.t, c.n, c.lambda.size(), c.lambda.parts(),
                        c.seed);
    };
    EXPECT_LT(key(a), key(b));
  }
  for (const auto& c : cases) EXPECT_LE(c.lambda.length(), c.t * c.n);
}

TEST(Scan, MaxSizeZeroIsOnlyTheEmptyPartition) {
  ScanConfig c;
  c.theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  c.ts = {2, 4};
  c.ns = {1, 2};
  c.max_size = 0;
  const auto cases = scan_cases(c);
  EXPECT_EQ(cases.size(), 5u * 2 * 2);
  for (const auto& k : cases) EXPECT_TRUE(k.lambda.empty());
  ScanSummary s;
  json_lines(c, &s);
  EXPECT_EQ(s.cases, 20);
  EXPECT_EQ(s.mismatches, 0);
}

TEST(Scan, TnCapSkipsLargePairs) {
  auto c = small_config();
  c.ns = {1, 2, 3};
  c.max_tn = 4;
  for (const auto& k : scan_cases(c)) EXPECT_LE(k.t * k.n, 4);
}

TEST(Scan, OutputDoesNotDependOnWorkerCount) {
  auto c = small_config();
  c.jobs = 1;
  const auto a = json_lines(c);
  c.jobs = 4;
  const auto b = json_lines(c);
  EXPECT_EQ(a, b);
}

TEST(Scan, SummaryCounts) {
  ScanSummary s;
  json_lines(small_config(), &s);
  EXPECT_EQ(s.cases, static_cast<std::int64_t>(scan_cases(small_config()).size()));
  EXPECT_EQ(s.matches + s.mismatches + s.sampling_failures, s.cases);
  EXPECT_EQ(s.mismatches, 0);
  EXPECT_GT(s.vanish_confirmed, 0);
  EXPECT_TRUE(s.clean());
}

TEST(Scan, ValidateRejectsBadConfigs) {
  auto c = small_config();
  c.ts = {1};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.trials = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.max_size = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.theorems.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.seeds.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Report, RecordSchema) {
  for (const auto& line : json_lines(small_config())) {
    const auto j = nlohmann::json::parse(line);
    if (j.contains("summary")) {
      for (const char* key : {"cases", "match", "mismatch", "vanish_confirmed"})
        EXPECT_TRUE(j["summary"].contains(key)) << key;
      continue;
    }
    for (const char* key : {"theorem", "lambda", "t", "n", "seed", "match"})
      EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j["lambda"].is_array());
    EXPECT_TRUE(j["match"].is_boolean());
  }
}

TEST(Report, VerificationJson) {
  const auto r = verify(Theorem::Symplectic, {3, 2, 1, 1, 1}, 3, 2, 1, 2);
  const auto j = report_json(r);
  EXPECT_EQ(j["theorem"], "sympfact");
  EXPECT_EQ(j["lambda"], (std::vector<int>{3, 2, 1, 1, 1}));
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(j["sign_rule"], "simplified");
  ASSERT_EQ(j["trials"].size(), 2u);
  // Values are coefficient vectors in the power basis of Q(w_3).
  EXPECT_EQ(j["trials"][0]["lhs"].size(), 2u);
  EXPECT_EQ(j["trials"][0]["lhs"], j["trials"][0]["rhs"]);
  EXPECT_NE(report_text(r).find("result: match"), std::string::npos);
}

TEST(Report, ClassifyJson) {
  const auto j = classify_json({4, 2, 2, 1}, 2, 2);
  EXPECT_EQ(j["core"], (std::vector<int>{2, 1}));
  EXPECT_EQ(j["quotient"], nlohmann::json::parse("[[2],[1]]"));
  EXPECT_EQ(j["frobenius"]["arms"], (std::vector<int>{3, 0}));
  EXPECT_EQ(j["frobenius"]["legs"], (std::vector<int>{3, 1}));
  EXPECT_EQ(j["classes"], nlohmann::json::parse(R"(["self-conjugate"])"));

  const auto k = classify_json({3, 2, 1, 1, 1}, 3, 2);
  EXPECT_EQ(k["core"], (std::vector<int>{1, 1}));
  EXPECT_EQ(k["core_rank"], 1);
  EXPECT_EQ(k["residue_counts"], (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(k["quotient"], nlohmann::json::parse("[[],[1],[1]]"));
  EXPECT_NE(std::find(k["classes"].begin(), k["classes"].end(), "symplectic"), k["classes"].end());

  const auto e = classify_json({}, 2, 1);
  EXPECT_NE(std::find(e["classes"].begin(), e["classes"].end(), "empty"), e["classes"].end());
}

TEST(Report, SignRuleNames) {
  EXPECT_EQ(parse_sign_rule("expanded"), SignRule::Expanded);
  EXPECT_EQ(parse_sign_rule(to_string(SignRule::Simplified)), SignRule::Simplified);
  EXPECT_FALSE(parse_sign_rule("other").has_value());
}
