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

#ifndef AGSC_ROUTER_H_
#define AGSC_ROUTER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "agsc/clock.h"
#include "agsc/corpus.h"
#include "agsc/providers/provider.h"
#include "agsc/scoring.h"
#include "agsc/timing.h"

namespace agsc {

enum class NliLabel { kEntail, kContradict, kNeutral };
enum class DecisionKind { kKeep, kSkip, kDecompose };

enum class GranularityMode {
  kAdaptive,       // keep / skip / decompose by dominant label and gap
  kOff,            // every sentence kept at sentence granularity
  kNeutralGuess,   // would-be-skipped sentences kept with U = 0.5
  kNeutralWeight,  // every sentence kept, neutral mass in the denominator
  kAtomic,         // every sentence decomposed
};

// How a kept unit's uncertainty is computed.
enum class UnitScoring {
  kEntailmentSupport,  // U = 1 - mean_t max_k binary entailment
  kFixedHalf,          // U = 0.5
  kNeutralWeighted,    // U = 1 - mean_t max_k e/(e + c + 0.5 n)
};

struct GranularityConfig {
  double tau = 0.1;
  GranularityMode mode = GranularityMode::kAdaptive;
  // Decomposed sentences enter aggregation as one unit carrying the mean
  // fact uncertainty instead of as individual facts.
  bool collapse_facts = false;
};

absl::Status ValidateGranularityConfig(const GranularityConfig& config);

const char* NliLabelName(NliLabel label);
const char* DecisionKindName(DecisionKind kind);
const char* GranularityModeName(GranularityMode mode);
const char* UnitScoringName(UnitScoring scoring);
std::optional<NliLabel> ParseNliLabel(std::string_view name);
std::optional<DecisionKind> ParseDecisionKind(std::string_view name);
std::optional<GranularityMode> ParseGranularityMode(std::string_view name);
std::optional<UnitScoring> ParseUnitScoring(std::string_view name);

struct RoutingSignal {
  int sentence_index = 0;
  NliDistribution distribution;
  NliLabel dominant = NliLabel::kEntail;
  double gap = 0.0;
};

// Argmax with ties resolved entail > contradict > neutral.
NliLabel DominantLabel(const NliDistribution& distribution);
RoutingSignal MakeSignal(int sentence_index,
                         const NliDistribution& distribution);

// Non-neutral dominant -> keep; neutral with gap <= tau -> skip; neutral
// with gap > tau -> decompose.
DecisionKind Route(const RoutingSignal& signal, double tau);

struct AblationRoute {
  DecisionKind kind = DecisionKind::kKeep;
  UnitScoring scoring = UnitScoring::kEntailmentSupport;
};

// Decision and scoring rule for any mode. For kAdaptive this is Route()
// with entailment-support scoring.
AblationRoute RouteAblation(const RoutingSignal& signal,
                            const GranularityConfig& config);

struct ScoredUnit {
  TextUnit unit;
  double uncertainty = 0.0;
};

struct RoutingRecord {
  int sentence_index = 0;
  std::string text;
  NliDistribution distribution;
  NliLabel dominant = NliLabel::kEntail;
  double gap = 0.0;
  DecisionKind decision = DecisionKind::kKeep;
  UnitScoring scoring = UnitScoring::kEntailmentSupport;
  // Sentence-level uncertainty before routing (entailment support).
  double sentence_uncertainty = 0.0;
  // Adaptive uncertainty; empty means SKIPPED.
  std::optional<double> u_adaptive;
  std::vector<ScoredUnit> units;
  bool decomposer_fallback = false;
};

struct GranularityResult {
  std::vector<RoutingRecord> records;
  // Anchor units after routing, in document order.
  std::vector<ScoredUnit> anchor_units;
  bool decomposer_fallback = false;
};

// Routes every anchor sentence, decomposes where required and scores the
// resulting units. NLI time is added to timing->t_nli, decomposer time to
// timing->t_atom; call and pair counts are accumulated as well.
absl::StatusOr<GranularityResult> ApplyGranularity(
    std::span<const Sentence> anchor_sentences,
    std::span<const PreparedReference> references, std::string_view prompt,
    NliScorer& scorer, Decomposer* decomposer,
    const GranularityConfig& config, const Clock& clock,
    TimingBreakdown* timing);

}  // namespace agsc

#endif  // AGSC_ROUTER_H_
