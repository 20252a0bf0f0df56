// Copyright 2026 The AGSC Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agsc/eval.h"

#include "agsc/providers/mock.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "support/synthetic.h"

namespace agsc {
namespace {

using testing::MakeSample;
using testing::MockConfig;

struct MockProviders {
  explicit MockProviders(ScriptedNliProvider::Rule rule = nullptr)
      : nli({}, std::move(rule)) {}
  Providers get() { return {&nli, &embed, &decomposer}; }
  ScriptedNliProvider nli;
  HashedBowEmbedder embed{32};
  MockDecomposer decomposer;
};

int64_t TotalDecomposerCalls(const CorpusResult& r) {
  int64_t total = 0;
  for (const auto& [i, report] : r.reports) {
    total += report.timing.decomposer_calls;
  }
  return total;
}

TEST(RunVariantTest, FullySupportedGivesZeroEverywhere) {
  MockProviders mocks([](const NliPair&) { return NliLogits{1000, 0, 0}; });
  Dataset d;
  d.samples.push_back(MakeSample(
      "s", {"Ann sings. Ann and Bob dance.", "Ann sings.", "Bob dances."}));
  for (MethodVariant v : AllVariants()) {
    CorpusResult r = RunVariant(d, v, MockConfig(), mocks.get());
    ASSERT_EQ(r.reports.size(), 1u) << VariantName(v);
    EXPECT_EQ(r.reports[0].second.final_score.u_final, 0.0) << VariantName(v);
    EXPECT_EQ(r.variant, VariantName(v));
  }
}

TEST(RunVariantTest, OverridesAreCleared) {
  MockProviders mocks;
  Dataset d;
  d.samples.push_back(MakeSample("s", {"A a=1. B b=2.", "A a=1."}));
  PipelineConfig config = MockConfig();
  config.granularity_override = GranularityMode::kAtomic;
  CorpusResult r =
      RunVariant(d, MethodVariant::kLuqSentence, config, mocks.get());
  ASSERT_EQ(r.reports.size(), 1u);
  EXPECT_EQ(TotalDecomposerCalls(r), 0);
}

TEST(RunVariantTest, DecomposerCallCounts) {
  Dataset d = testing::MakeNeutralHeavyCorpus({});
  const int sentences = testing::CountAnchorSentences(d);
  MockProviders atomic_mocks;
  MockProviders agsc_mocks;
  CorpusResult atomic = RunVariant(d, MethodVariant::kLuqAtomic, MockConfig(),
                                   atomic_mocks.get());
  CorpusResult agsc =
      RunVariant(d, MethodVariant::kAgsc, MockConfig(), agsc_mocks.get());
  EXPECT_EQ(TotalDecomposerCalls(atomic), sentences);
  EXPECT_EQ(atomic_mocks.decomposer.calls(), sentences);
  EXPECT_LT(TotalDecomposerCalls(agsc), TotalDecomposerCalls(atomic));
  EXPECT_GT(TotalDecomposerCalls(agsc), 0);
}

TEST(RunVariantTest, NoClusterMatchesLiteral) {
  testing::HallucinationCorpusOptions options;
  options.num_prompts = 8;
  Dataset d = testing::MakeHallucinationCorpus(options);
  MockProviders mocks;
  CorpusResult flat = RunVariant(d, MethodVariant::kAblateNoCluster,
                                 MockConfig(), mocks.get());
  CorpusResult literal =
      RunVariant(d, MethodVariant::kAgscLiteral, MockConfig(), mocks.get());
  auto a = VariantScores(flat);
  auto b = VariantScores(literal);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_NEAR(a[i].second, b[i].second, 1e-9);
  }
}

PromptReport Scored(const std::string& variant, const std::string& id,
                    double u, std::optional<double> label) {
  PromptReport r;
  r.variant = variant;
  r.prompt_id = id;
  r.final_score.u_final = u;
  r.factuality = label;
  r.timing.t_atom = 2.0;
  r.timing.decomposer_calls = 3;
  return r;
}

TEST(CompareTest, IdenticalScoresGiveIdenticalCorrelations) {
  std::vector<PromptReport> reports;
  const double u[] = {0.1, 0.5, 0.3, 0.9};
  const double f[] = {0.8, 0.4, 0.9, 0.1};
  for (const char* v : {"luq_atomic", "agsc"}) {
    for (int i = 0; i < 4; ++i) {
      reports.push_back(Scored(v, "p" + std::to_string(i), u[i], f[i]));
    }
  }
  Comparison c = Compare(reports);
  ASSERT_EQ(c.rows.size(), 2u);
  EXPECT_EQ(c.rows[0].variant, "agsc");  // canonical order
  EXPECT_EQ(c.rows[0].pcc, c.rows[1].pcc);
  EXPECT_EQ(c.rows[0].scc, c.rows[1].scc);
  EXPECT_LT(c.rows[0].scc, 0.0);
  EXPECT_EQ(c.rows[0].n, 4);
  EXPECT_EQ(c.rows[0].decomposer_calls, 12);
  EXPECT_DOUBLE_EQ(c.rows[0].t_atom_ms, 2.0);
  EXPECT_TRUE(c.warnings.empty());
}

TEST(CompareTest, MissingLabelsSkipWithWarning) {
  std::vector<PromptReport> reports = {
      Scored("agsc", "a", 0.1, 0.9), Scored("agsc", "b", 0.2, std::nullopt),
      Scored("luq_sentence", "a", 0.1, 0.9),
      Scored("luq_sentence", "b", 0.1, 0.5)};
  Comparison c = Compare(reports);
  EXPECT_TRUE(c.rows.empty());
  ASSERT_EQ(c.warnings.size(), 2u);
  EXPECT_NE(c.warnings[0].find("agsc"), std::string::npos);
  EXPECT_NE(c.warnings[1].find("constant"), std::string::npos);
}

TEST(CompareTest, TableFormat) {
  Comparison c;
  CorrelationReport row;
  row.variant = "agsc";
  row.pcc = -0.5;
  row.scc = -0.25;
  row.n = 3;
  row.decomposer_calls = 7;
  row.t_atom_ms = 1.5;
  c.rows.push_back(row);
  EXPECT_EQ(FormatTable(c),
            std::string(kTableHeader) +
                "\nagsc\t-0.500000\t-0.250000\t3\t7\t0.000\t1.500\t0.000\n");
}

TEST(LoadReportsTest, ReadsDirectoryTree) {
  const std::string dir = testing::MakeTempDir("load");
  std::filesystem::create_directories(dir + "/agsc");
  testing::WriteFile(dir + "/agsc/0000_a.jsonl",
                     SerializeReport(Scored("agsc", "a", 0.1, 0.9)));
  testing::WriteFile(dir + "/agsc/0001_b.jsonl",
                     SerializeReport(Scored("agsc", "b", 0.3, 0.2)));
  testing::WriteFile(dir + "/notes.txt", "ignored");
  auto reports = LoadReports(dir);
  ASSERT_TRUE(reports.ok()) << reports.status();
  ASSERT_EQ(reports->size(), 2u);
  EXPECT_EQ((*reports)[1].prompt_id, "b");
  EXPECT_FALSE(LoadReports(dir + "/missing").ok());
  testing::WriteFile(dir + "/agsc/0002_c.jsonl", "{broken");
  EXPECT_FALSE(LoadReports(dir).ok());
}

}  // namespace
}  // namespace agsc
