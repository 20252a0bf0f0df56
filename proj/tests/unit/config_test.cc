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

#include "agsc/config.h"

#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace agsc {
namespace {

TEST(ParseConfigTest, EmptyGivesDefaults) {
  auto c = ParseConfig("");
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->scoring.chunk_budget_chars, 1000);
  EXPECT_EQ(c->scoring.chunk_stride_chars, 500);
  EXPECT_EQ(c->scoring.direction, NliDirection::kReferencePremise);
  EXPECT_DOUBLE_EQ(c->granularity.tau, 0.1);
  EXPECT_EQ(c->clustering.k_limit, 15);
  EXPECT_EQ(c->variant, MethodVariant::kAgsc);
  EXPECT_EQ(c->EffectiveSpec(), ResolveVariant(MethodVariant::kAgsc));
  EXPECT_EQ(c->nli.kind, "mock");
}

TEST(ParseConfigTest, DottedKeysCommentsAndWhitespace) {
  auto c = ParseConfig(
      "# comment line\n"
      "  granularity.tau = 0.25   # trailing\n"
      "clustering.k_limit=7\n"
      "pipeline.variant = luq_atomic\n"
      "pipeline.seed = 99\n"
      "aggregation.mode = literal\n"
      "providers.nli.kind = http\n"
      "providers.nli.endpoint = http://127.0.0.1:9000\n"
      "providers.nli.retry.max_attempts = 5\n"
      "pipeline.clock = simulated\n");
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_DOUBLE_EQ(c->granularity.tau, 0.25);
  EXPECT_EQ(c->clustering.k_limit, 7);
  EXPECT_EQ(c->variant, MethodVariant::kLuqAtomic);
  EXPECT_EQ(c->seed, 99u);
  EXPECT_EQ(c->EffectiveSpec().aggregation, AggregationMode::kLiteral);
  EXPECT_EQ(c->EffectiveSpec().granularity, GranularityMode::kAtomic);
  EXPECT_EQ(c->EffectiveClustering().seed, 99u);
  EXPECT_EQ(c->nli.http.retry.max_attempts, 5);
  EXPECT_EQ(c->clock, ClockKind::kSimulated);
}

TEST(ParseConfigTest, ErrorsNameTheLine) {
  auto unknown = ParseConfig("granularity.tau = 0.1\nclustering.bogus = 3\n");
  ASSERT_FALSE(unknown.ok());
  EXPECT_EQ(unknown.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(unknown.status().message().find("line 2"), std::string::npos)
      << unknown.status();
  EXPECT_NE(unknown.status().message().find("clustering.bogus"),
            std::string::npos);
  EXPECT_FALSE(ParseConfig("granularity.tau = abc\n").ok());
  EXPECT_FALSE(ParseConfig("granularity.tau = 1.5\n").ok());
  EXPECT_FALSE(ParseConfig("no equals sign\n").ok());
  EXPECT_FALSE(ParseConfig("pipeline.variant = nope\n").ok());
  EXPECT_FALSE(ParseConfig("providers.nli.kind = http\n").ok());
  EXPECT_FALSE(ParseConfig("providers.embed.kind = rules\n").ok());
  EXPECT_TRUE(ParseConfig("providers.decompose.kind = rules\n").ok());
}

TEST(FormatConfigTest, RoundTrip) {
  auto c = ParseConfig(
      "granularity.tau = 0.3\n"
      "granularity.mode = neutral_guess\n"
      "clustering.method = kmeans\n"
      "clustering.units = sentences_only\n"
      "clustering.cov_reg = 0.001\n"
      "scoring.chunk_selection = mean\n"
      "pipeline.workers = 3\n"
      "pipeline.debug_dump = true\n"
      "providers.embed.dim = 16\n"
      "providers.decompose.latency_ms = 2.5\n");
  ASSERT_TRUE(c.ok()) << c.status();
  const std::string text = FormatConfig(*c);
  auto again = ParseConfig(text);
  ASSERT_TRUE(again.ok()) << again.status() << "\n" << text;
  EXPECT_EQ(FormatConfig(*again), text);
  EXPECT_EQ(again->granularity_override, GranularityMode::kNeutralGuess);
  EXPECT_EQ(again->clustering_override, ClusteringMethod::kKMeans);
  EXPECT_EQ(again->cluster_units, ClusterUnits::kSentencesOnly);
  EXPECT_DOUBLE_EQ(again->decompose.latency_ms, 2.5);
}

TEST(LoadConfigTest, MissingFile) {
  EXPECT_FALSE(LoadConfig("/nonexistent/agsc.conf").ok());
  const std::string dir = testing::MakeTempDir("config");
  testing::WriteFile(dir + "/a.conf", "pipeline.seed = 4\n");
  auto c = LoadConfig(dir + "/a.conf");
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->seed, 4u);
}

}  // namespace
}  // namespace agsc
