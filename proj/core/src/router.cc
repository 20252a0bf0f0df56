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

#include "absl/strings/str_cat.h"
#include "agsc/providers/rule_decomposer.h"

namespace agsc {

absl::Status ValidateGranularityConfig(const GranularityConfig& config) {
  if (!(config.tau >= 0.0 && config.tau <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("granularity.tau must lie in [0, 1], got ", config.tau));
  }
  return absl::OkStatus();
}

const char* NliLabelName(NliLabel label) {
  switch (label) {
    case NliLabel::kEntail:
      return "entail";
    case NliLabel::kContradict:
      return "contradict";
    case NliLabel::kNeutral:
      return "neutral";
  }
  return "?";
}

const char* DecisionKindName(DecisionKind kind) {
  switch (kind) {
    case DecisionKind::kKeep:
      return "keep";
    case DecisionKind::kSkip:
      return "skip";
    case DecisionKind::kDecompose:
      return "decompose";
  }
  return "?";
}

const char* GranularityModeName(GranularityMode mode) {
  switch (mode) {
    case GranularityMode::kAdaptive:
      return "adaptive";
    case GranularityMode::kOff:
      return "off";
    case GranularityMode::kNeutralGuess:
      return "neutral_guess";
    case GranularityMode::kNeutralWeight:
      return "neutral_weight";
    case GranularityMode::kAtomic:
      return "atomic";
  }
  return "?";
}

std::optional<NliLabel> ParseNliLabel(std::string_view name) {
  for (NliLabel l :
       {NliLabel::kEntail, NliLabel::kContradict, NliLabel::kNeutral}) {
    if (name == NliLabelName(l)) return l;
  }
  return std::nullopt;
}

std::optional<DecisionKind> ParseDecisionKind(std::string_view name) {
  for (DecisionKind k :
       {DecisionKind::kKeep, DecisionKind::kSkip, DecisionKind::kDecompose}) {
    if (name == DecisionKindName(k)) return k;
  }
  return std::nullopt;
}

std::optional<GranularityMode> ParseGranularityMode(std::string_view name) {
  for (GranularityMode m :
       {GranularityMode::kAdaptive, GranularityMode::kOff,
        GranularityMode::kNeutralGuess, GranularityMode::kNeutralWeight,
        GranularityMode::kAtomic}) {
    if (name == GranularityModeName(m)) return m;
  }
  return std::nullopt;
}

const char* UnitScoringName(UnitScoring scoring) {
  switch (scoring) {
    case UnitScoring::kEntailmentSupport:
      return "entailment_support";
    case UnitScoring::kFixedHalf:
      return "fixed_half";
    case UnitScoring::kNeutralWeighted:
      return "neutral_weighted";
  }
  return "?";
}

std::optional<UnitScoring> ParseUnitScoring(std::string_view name) {
  for (UnitScoring s : {UnitScoring::kEntailmentSupport, UnitScoring::kFixedHalf,
                        UnitScoring::kNeutralWeighted}) {
    if (name == UnitScoringName(s)) return s;
  }
  return std::nullopt;
}

NliLabel DominantLabel(const NliDistribution& d) {
  if (d.entail >= d.contradict && d.entail >= d.neutral) {
    return NliLabel::kEntail;
  }
  if (d.contradict >= d.neutral) return NliLabel::kContradict;
  return NliLabel::kNeutral;
}

RoutingSignal MakeSignal(int sentence_index,
                         const NliDistribution& distribution) {
  RoutingSignal signal;
  signal.sentence_index = sentence_index;
  signal.distribution = distribution;
  signal.dominant = DominantLabel(distribution);
  signal.gap = std::fabs(distribution.entail - distribution.contradict);
  return signal;
}

DecisionKind Route(const RoutingSignal& signal, double tau) {
  if (signal.dominant != NliLabel::kNeutral) return DecisionKind::kKeep;
  return signal.gap > tau ? DecisionKind::kDecompose : DecisionKind::kSkip;
}

AblationRoute RouteAblation(const RoutingSignal& signal,
                            const GranularityConfig& config) {
  switch (config.mode) {
    case GranularityMode::kAdaptive:
      return {Route(signal, config.tau), UnitScoring::kEntailmentSupport};
    case GranularityMode::kOff:
      return {DecisionKind::kKeep, UnitScoring::kEntailmentSupport};
    case GranularityMode::kNeutralGuess: {
      DecisionKind kind = Route(signal, config.tau);
      if (kind == DecisionKind::kSkip) {
        return {DecisionKind::kKeep, UnitScoring::kFixedHalf};
      }
      return {kind, UnitScoring::kEntailmentSupport};
    }
    case GranularityMode::kNeutralWeight:
      return {DecisionKind::kKeep, UnitScoring::kNeutralWeighted};
    case GranularityMode::kAtomic:
      return {DecisionKind::kDecompose, UnitScoring::kEntailmentSupport};
  }
  return {DecisionKind::kKeep, UnitScoring::kEntailmentSupport};
}

absl::StatusOr<GranularityResult> ApplyGranularity(
    std::span<const Sentence> anchor_sentences,
    std::span<const PreparedReference> references, std::string_view prompt,
    NliScorer& scorer, Decomposer* decomposer,
    const GranularityConfig& config, const Clock& clock,
    TimingBreakdown* timing) {
  if (references.empty()) {
    return absl::FailedPreconditionError("routing needs at least one reference");
  }
  std::vector<std::string> sentence_texts;
  sentence_texts.reserve(anchor_sentences.size());
  for (const Sentence& s : anchor_sentences) sentence_texts.push_back(s.text);

  absl::StatusOr<std::vector<UnitEvidence>> sentence_evidence;
  {
    ScopedTimer timer(clock, &timing->t_nli);
    const int64_t before = scorer.pairs_requested();
    sentence_evidence = scorer.Collect(sentence_texts, references);
    timing->nli_pairs += scorer.pairs_requested() - before;
  }
  if (!sentence_evidence.ok()) return sentence_evidence.status();

  GranularityResult result;
  result.records.resize(anchor_sentences.size());
  // Facts awaiting NLI: (record index, fact index within record).
  std::vector<std::pair<size_t, size_t>> fact_slots;
  std::vector<std::string> fact_texts;

  for (size_t j = 0; j < anchor_sentences.size(); ++j) {
    const Sentence& sentence = anchor_sentences[j];
    const UnitEvidence& evidence = (*sentence_evidence)[j];
    RoutingRecord& record = result.records[j];
    record.sentence_index = sentence.sentence_index;
    record.text = sentence.text;
    record.distribution = AverageDistributionFrom(
        evidence, scorer.config().chunk_selection);
    const RoutingSignal signal =
        MakeSignal(sentence.sentence_index, record.distribution);
    record.dominant = signal.dominant;
    record.gap = signal.gap;
    const SupportScore support =
        SupportFrom(evidence, TextUnit::FromSentence(sentence).unit_id);
    record.sentence_uncertainty = support.uncertainty();

    const AblationRoute route = RouteAblation(signal, config);
    record.decision = route.kind;
    record.scoring = route.scoring;

    switch (route.kind) {
      case DecisionKind::kSkip:
        break;
      case DecisionKind::kKeep: {
        double u = record.sentence_uncertainty;
        if (route.scoring == UnitScoring::kFixedHalf) {
          u = 0.5;
        } else if (route.scoring == UnitScoring::kNeutralWeighted) {
          u = 1.0 - NeutralWeightedSupportFrom(evidence);
        }
        record.u_adaptive = u;
        record.units.push_back({TextUnit::FromSentence(sentence), u});
        break;
      }
      case DecisionKind::kDecompose: {
        if (decomposer == nullptr) {
          return absl::FailedPreconditionError(
              "sentence routed to decomposition but no decomposer is set");
        }
        Decomposition decomposition;
        {
          ScopedTimer timer(clock, &timing->t_atom);
          ++timing->decomposer_calls;
          auto decomposed = decomposer->Decompose(sentence.text, prompt);
          if (decomposed.ok() && !decomposed->facts.empty()) {
            decomposition = *std::move(decomposed);
          } else {
            decomposition.facts = SplitIntoFacts(sentence.text);
            decomposition.fallback_used = true;
          }
        }
        record.decomposer_fallback = decomposition.fallback_used;
        result.decomposer_fallback |= decomposition.fallback_used;
        for (size_t f = 0; f < decomposition.facts.size(); ++f) {
          record.units.push_back(
              {TextUnit::FromFact(sentence, static_cast<int>(f),
                                  decomposition.facts[f]),
               0.0});
          fact_slots.emplace_back(j, f);
          fact_texts.push_back(decomposition.facts[f]);
        }
        break;
      }
    }
  }

  if (!fact_texts.empty()) {
    absl::StatusOr<std::vector<UnitEvidence>> fact_evidence;
    {
      ScopedTimer timer(clock, &timing->t_nli);
      const int64_t before = scorer.pairs_requested();
      fact_evidence = scorer.Collect(fact_texts, references);
      timing->nli_pairs += scorer.pairs_requested() - before;
    }
    if (!fact_evidence.ok()) return fact_evidence.status();
    for (size_t i = 0; i < fact_slots.size(); ++i) {
      auto [record_index, fact_index] = fact_slots[i];
      ScoredUnit& unit = result.records[record_index].units[fact_index];
      unit.uncertainty =
          SupportFrom((*fact_evidence)[i], unit.unit.unit_id).uncertainty();
    }
    for (RoutingRecord& record : result.records) {
      if (record.decision != DecisionKind::kDecompose) continue;
      double sum = 0.0;
      for (const ScoredUnit& u : record.units) sum += u.uncertainty;
      record.u_adaptive = sum / static_cast<double>(record.units.size());
    }
  }

  for (size_t j = 0; j < result.records.size(); ++j) {
    const RoutingRecord& record = result.records[j];
    if (record.decision == DecisionKind::kDecompose && config.collapse_facts) {
      result.anchor_units.push_back(
          {TextUnit::FromSentence(anchor_sentences[j]), *record.u_adaptive});
      continue;
    }
    for (const ScoredUnit& u : record.units) result.anchor_units.push_back(u);
  }
  return result;
}

}  // namespace agsc
