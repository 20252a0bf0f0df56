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

#include "agsc/router.h"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "agsc/clock.h"
#include "agsc/providers/mock.h"
#include "agsc/segmenter.h"
#include "gtest/gtest.h"

namespace agsc {
namespace {

NliLogits FromDistribution(double e, double c, double n) {
  return {std::log(e), std::log(c), std::log(n)};
}

class FixedDecomposer : public Decomposer {
 public:
  explicit FixedDecomposer(std::map<std::string, std::vector<std::string>> map)
      : map_(std::move(map)) {}
  absl::StatusOr<Decomposition> Decompose(std::string_view sentence,
                                          std::string_view) override {
    ++calls;
    auto it = map_.find(std::string(sentence));
    if (it == map_.end()) return absl::UnavailableError("down");
    return Decomposition{it->second, false, ""};
  }
  int calls = 0;

 private:
  std::map<std::string, std::vector<std::string>> map_;
};

DecisionKind RouteDistribution(double e, double c, double n) {
  return Route(MakeSignal(0, {e, c, n}), 0.1);
}

TEST(RouteTest, CanonicalTruthTable) {
  EXPECT_EQ(RouteDistribution(0.20, 0.15, 0.65), DecisionKind::kSkip);
  EXPECT_EQ(RouteDistribution(0.40, 0.10, 0.50), DecisionKind::kDecompose);
  EXPECT_EQ(RouteDistribution(0.60, 0.10, 0.30), DecisionKind::kKeep);
  // Gap exactly tau routes to skip (strict inequality).
  EXPECT_EQ(Route(RoutingSignal{0, {0.3, 0.2, 0.5}, NliLabel::kNeutral, 0.1},
                  0.1),
            DecisionKind::kSkip);
}

TEST(RouteTest, ContradictDominantIsKept) {
  EXPECT_EQ(RouteDistribution(0.1, 0.6, 0.3), DecisionKind::kKeep);
}

TEST(RouteTest, SignalFields) {
  RoutingSignal s = MakeSignal(4, {0.40, 0.10, 0.50});
  EXPECT_EQ(s.sentence_index, 4);
  EXPECT_EQ(s.dominant, NliLabel::kNeutral);
  EXPECT_NEAR(s.gap, 0.30, 1e-15);
}

TEST(DominantLabelTest, TiePrecedence) {
  EXPECT_EQ(DominantLabel({0.4, 0.4, 0.2}), NliLabel::kEntail);
  EXPECT_EQ(DominantLabel({0.4, 0.2, 0.4}), NliLabel::kEntail);
  EXPECT_EQ(DominantLabel({0.2, 0.4, 0.4}), NliLabel::kContradict);
  EXPECT_EQ(DominantLabel({1.0 / 3, 1.0 / 3, 1.0 / 3}), NliLabel::kEntail);
  EXPECT_EQ(DominantLabel({0.1, 0.2, 0.7}), NliLabel::kNeutral);
}

TEST(RouteAblationTest, Modes) {
  RoutingSignal skip = MakeSignal(0, {0.20, 0.15, 0.65});
  GranularityConfig config;
  config.mode = GranularityMode::kOff;
  EXPECT_EQ(RouteAblation(skip, config).kind, DecisionKind::kKeep);
  EXPECT_EQ(RouteAblation(skip, config).scoring,
            UnitScoring::kEntailmentSupport);
  config.mode = GranularityMode::kNeutralGuess;
  EXPECT_EQ(RouteAblation(skip, config).kind, DecisionKind::kKeep);
  EXPECT_EQ(RouteAblation(skip, config).scoring, UnitScoring::kFixedHalf);
  RoutingSignal decompose = MakeSignal(0, {0.40, 0.10, 0.50});
  EXPECT_EQ(RouteAblation(decompose, config).kind, DecisionKind::kDecompose);
  config.mode = GranularityMode::kNeutralWeight;
  EXPECT_EQ(RouteAblation(decompose, config).kind, DecisionKind::kKeep);
  EXPECT_EQ(RouteAblation(decompose, config).scoring,
            UnitScoring::kNeutralWeighted);
  config.mode = GranularityMode::kAtomic;
  EXPECT_EQ(RouteAblation(MakeSignal(0, {0.9, 0.05, 0.05}), config).kind,
            DecisionKind::kDecompose);
}

TEST(NamesTest, RoundTrip) {
  for (GranularityMode m :
       {GranularityMode::kAdaptive, GranularityMode::kOff,
        GranularityMode::kNeutralGuess, GranularityMode::kNeutralWeight,
        GranularityMode::kAtomic}) {
    EXPECT_EQ(ParseGranularityMode(GranularityModeName(m)), m);
  }
  for (DecisionKind k :
       {DecisionKind::kKeep, DecisionKind::kSkip, DecisionKind::kDecompose}) {
    EXPECT_EQ(ParseDecisionKind(DecisionKindName(k)), k);
  }
  for (UnitScoring s : {UnitScoring::kEntailmentSupport, UnitScoring::kFixedHalf,
                        UnitScoring::kNeutralWeighted}) {
    EXPECT_EQ(ParseUnitScoring(UnitScoringName(s)), s);
  }
  EXPECT_EQ(ParseNliLabel("neutral"), NliLabel::kNeutral);
  EXPECT_FALSE(ParseGranularityMode("bogus").has_value());
}

TEST(GranularityConfigTest, TauRange) {
  GranularityConfig c;
  EXPECT_TRUE(ValidateGranularityConfig(c).ok());
  c.tau = 1.5;
  EXPECT_FALSE(ValidateGranularityConfig(c).ok());
  c.tau = -0.1;
  EXPECT_FALSE(ValidateGranularityConfig(c).ok());
}

// Fixture: every hypothesis text maps to scripted logits.
class ApplyGranularityTest : public ::testing::Test {
 protected:
  void Script(const std::string& hypothesis, NliLogits logits) {
    logits_[hypothesis] = logits;
  }

  absl::StatusOr<GranularityResult> Run(const std::string& anchor,
                                        const GranularityConfig& config,
                                        Decomposer* decomposer) {
    nli_ = std::make_unique<ScriptedNliProvider>(
        std::map<std::pair<std::string, std::string>, NliLogits>{},
        [this](const NliPair& p) {
          auto it = logits_.find(p.hypothesis);
          return it == logits_.end() ? NliLogits{0, 0, 0} : it->second;
        });
    scorer_ = std::make_unique<NliScorer>(nli_.get(), ScoringConfig());
    sentences_ = SegmentSentences(anchor, 0);
    refs_ = {PrepareReference("Reference one.", 1, ScoringConfig()),
             PrepareReference("Reference two.", 2, ScoringConfig())};
    timing_ = TimingBreakdown();
    return ApplyGranularity(sentences_, refs_, "prompt", *scorer_, decomposer,
                            config, clock_, &timing_);
  }

  std::map<std::string, NliLogits> logits_;
  std::unique_ptr<ScriptedNliProvider> nli_;
  std::unique_ptr<NliScorer> scorer_;
  std::vector<Sentence> sentences_;
  std::vector<PreparedReference> refs_;
  SteadyClock clock_;
  TimingBreakdown timing_;
};

TEST_F(ApplyGranularityTest, AllEntailKeepsSentences) {
  Script("Alpha one.", {3, 0, 0});
  Script("Beta two.", {2, -1, 0});
  FixedDecomposer decomposer({});
  auto r = Run("Alpha one. Beta two.", GranularityConfig(), &decomposer);
  ASSERT_TRUE(r.ok()) << r.status();
  ASSERT_EQ(r->anchor_units.size(), 2u);
  EXPECT_EQ(r->anchor_units[0].unit.text, "Alpha one.");
  EXPECT_EQ(r->anchor_units[1].unit.text, "Beta two.");
  EXPECT_NEAR(r->anchor_units[0].uncertainty, 1 - BinaryEntail({3, 0, 0}),
              1e-15);
  EXPECT_EQ(decomposer.calls, 0);
  EXPECT_EQ(timing_.decomposer_calls, 0);
  EXPECT_EQ(timing_.nli_pairs, 4);
  for (const RoutingRecord& rec : r->records) {
    EXPECT_EQ(rec.decision, DecisionKind::kKeep);
    ASSERT_TRUE(rec.u_adaptive.has_value());
    EXPECT_DOUBLE_EQ(*rec.u_adaptive, rec.sentence_uncertainty);
  }
}

TEST_F(ApplyGranularityTest, DecomposedFactsAverage) {
  Script("Gamma three.", FromDistribution(0.40, 0.10, 0.50));
  Script("Fact zero.", {1000, 0, 0});
  Script("Fact one.", {0, 1000, 0});
  FixedDecomposer decomposer({{"Gamma three.", {"Fact zero.", "Fact one."}}});
  auto r = Run("Gamma three.", GranularityConfig(), &decomposer);
  ASSERT_TRUE(r.ok()) << r.status();
  ASSERT_EQ(r->records.size(), 1u);
  const RoutingRecord& rec = r->records[0];
  EXPECT_EQ(rec.decision, DecisionKind::kDecompose);
  ASSERT_EQ(rec.units.size(), 2u);
  EXPECT_DOUBLE_EQ(rec.units[0].uncertainty, 0.0);
  EXPECT_DOUBLE_EQ(rec.units[1].uncertainty, 1.0);
  EXPECT_DOUBLE_EQ(*rec.u_adaptive, 0.5);
  EXPECT_EQ(rec.units[1].unit.role, UnitRole::kAtomicFact);
  EXPECT_EQ(rec.units[1].unit.fact_index, 1);
  EXPECT_EQ(r->anchor_units.size(), 2u);
  EXPECT_EQ(decomposer.calls, 1);

  GranularityConfig collapsed;
  collapsed.collapse_facts = true;
  auto c = Run("Gamma three.", collapsed, &decomposer);
  ASSERT_TRUE(c.ok());
  ASSERT_EQ(c->anchor_units.size(), 1u);
  EXPECT_DOUBLE_EQ(c->anchor_units[0].uncertainty, 0.5);
  EXPECT_EQ(c->anchor_units[0].unit.role, UnitRole::kSentence);
}

TEST_F(ApplyGranularityTest, SkipYieldsNoUnits) {
  Script("Delta four.", FromDistribution(0.20, 0.15, 0.65));
  Script("Eps five.", FromDistribution(0.20, 0.15, 0.65));
  FixedDecomposer decomposer({});
  auto r = Run("Delta four. Eps five.", GranularityConfig(), &decomposer);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->anchor_units.empty());
  for (const RoutingRecord& rec : r->records) {
    EXPECT_EQ(rec.decision, DecisionKind::kSkip);
    EXPECT_FALSE(rec.u_adaptive.has_value());
    EXPECT_TRUE(rec.units.empty());
  }
}

TEST_F(ApplyGranularityTest, NeutralGuessFixesHalf) {
  Script("Delta four.", FromDistribution(0.20, 0.15, 0.65));
  GranularityConfig config;
  config.mode = GranularityMode::kNeutralGuess;
  auto r = Run("Delta four.", config, nullptr);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->anchor_units.size(), 1u);
  EXPECT_EQ(r->anchor_units[0].uncertainty, 0.5);
}

TEST_F(ApplyGranularityTest, NeutralWeightZeroLogits) {
  Script("Zero.", {0, 0, 0});
  GranularityConfig config;
  config.mode = GranularityMode::kNeutralWeight;
  auto r = Run("Zero.", config, nullptr);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->anchor_units.size(), 1u);
  EXPECT_NEAR(r->anchor_units[0].uncertainty, 0.6, 1e-12);
}

TEST_F(ApplyGranularityTest, OffKeepsSkipFixtureWithSupportUncertainty) {
  const NliLogits l = FromDistribution(0.20, 0.15, 0.65);
  Script("Delta four.", l);
  GranularityConfig config;
  config.mode = GranularityMode::kOff;
  auto r = Run("Delta four.", config, nullptr);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->anchor_units.size(), 1u);
  EXPECT_NEAR(r->anchor_units[0].uncertainty, 1 - BinaryEntail(l), 1e-15);
}

TEST_F(ApplyGranularityTest, DecomposerFailureFallsBack) {
  Script("X won A and received B.", FromDistribution(0.40, 0.10, 0.50));
  FixedDecomposer decomposer({});
  auto r = Run("X won A and received B.", GranularityConfig(), &decomposer);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->decomposer_fallback);
  EXPECT_TRUE(r->records[0].decomposer_fallback);
  EXPECT_EQ(r->records[0].units.size(), 2u);
}

TEST_F(ApplyGranularityTest, MissingDecomposerIsAnError) {
  Script("Gamma three.", FromDistribution(0.40, 0.10, 0.50));
  EXPECT_FALSE(Run("Gamma three.", GranularityConfig(), nullptr).ok());
}

}  // namespace
}  // namespace agsc
