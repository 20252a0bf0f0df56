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

#include "agsc/report.h"

#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"

namespace agsc {
namespace {

using json = nlohmann::json;

absl::Status Malformed(std::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("malformed report: ", std::string(what)));
}

json DistributionToJson(const NliDistribution& d) {
  return json::array({d.entail, d.contradict, d.neutral});
}

NliDistribution DistributionFromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("distribution must be a 3-number array");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

json UnitToJson(const ScoredUnit& u) {
  return json{{"unit_id", u.unit.unit_id},
              {"role", UnitRoleName(u.unit.role)},
              {"response_index", u.unit.response_index},
              {"sentence_index", u.unit.sentence_index},
              {"fact_index", u.unit.fact_index},
              {"text", u.unit.text},
              {"uncertainty", u.uncertainty}};
}

ScoredUnit UnitFromJson(const json& j) {
  ScoredUnit u;
  u.unit.unit_id = j.at("unit_id").get<std::string>();
  const std::string role = j.at("role").get<std::string>();
  if (role == UnitRoleName(UnitRole::kSentence)) {
    u.unit.role = UnitRole::kSentence;
  } else if (role == UnitRoleName(UnitRole::kAtomicFact)) {
    u.unit.role = UnitRole::kAtomicFact;
  } else {
    throw std::invalid_argument("unknown unit role '" + role + "'");
  }
  u.unit.response_index = j.at("response_index").get<int>();
  u.unit.sentence_index = j.at("sentence_index").get<int>();
  u.unit.fact_index = j.at("fact_index").get<int>();
  u.unit.text = j.at("text").get<std::string>();
  u.uncertainty = j.at("uncertainty").get<double>();
  return u;
}

template <typename T, typename Parser>
T ParseEnum(const json& j, Parser parse, const char* what) {
  const std::string name = j.get<std::string>();
  std::optional<T> value = parse(name);
  if (!value) {
    throw std::invalid_argument(absl::StrCat("unknown ", what, " '", name, "'"));
  }
  return *value;
}

json RecordToJson(const RoutingRecord& r) {
  json units = json::array();
  for (const ScoredUnit& u : r.units) units.push_back(UnitToJson(u));
  return json{
      {"sentence_index", r.sentence_index},
      {"text", r.text},
      {"distribution", DistributionToJson(r.distribution)},
      {"dominant", NliLabelName(r.dominant)},
      {"gap", r.gap},
      {"decision", DecisionKindName(r.decision)},
      {"scoring", UnitScoringName(r.scoring)},
      {"sentence_uncertainty", r.sentence_uncertainty},
      {"u_adaptive", r.u_adaptive ? json(*r.u_adaptive) : json(nullptr)},
      {"units", units},
      {"decomposer_fallback", r.decomposer_fallback}};
}

RoutingRecord RecordFromJson(const json& j) {
  RoutingRecord r;
  r.sentence_index = j.at("sentence_index").get<int>();
  r.text = j.at("text").get<std::string>();
  r.distribution = DistributionFromJson(j.at("distribution"));
  r.dominant = ParseEnum<NliLabel>(j.at("dominant"), ParseNliLabel, "label");
  r.gap = j.at("gap").get<double>();
  r.decision =
      ParseEnum<DecisionKind>(j.at("decision"), ParseDecisionKind, "decision");
  r.scoring =
      ParseEnum<UnitScoring>(j.at("scoring"), ParseUnitScoring, "scoring");
  r.sentence_uncertainty = j.at("sentence_uncertainty").get<double>();
  if (!j.at("u_adaptive").is_null()) {
    r.u_adaptive = j.at("u_adaptive").get<double>();
  }
  for (const json& u : j.at("units")) r.units.push_back(UnitFromJson(u));
  r.decomposer_fallback = j.at("decomposer_fallback").get<bool>();
  return r;
}

json ClusteringToJson(const ClusteringInfo& c) {
  json trace = json::array();
  for (const auto& [k, bic] : c.bic_trace) trace.push_back(json::array({k, bic}));
  json out{{"method", c.method},
           {"reducer", c.reducer},
           {"units", c.units},
           {"num_rows", c.num_rows},
           {"num_anchor_rows", c.num_anchor_rows},
           {"embed_dim", c.embed_dim},
           {"reduced_dim", c.reduced_dim},
           {"k", c.k},
           {"k_max", c.k_max},
           {"trivial", c.trivial},
           {"bic_trace", trace}};
  return out;
}

ClusteringInfo ClusteringFromJson(const json& j) {
  ClusteringInfo c;
  c.method = j.at("method").get<std::string>();
  c.reducer = j.at("reducer").get<std::string>();
  c.units = j.at("units").get<std::string>();
  c.num_rows = j.at("num_rows").get<int>();
  c.num_anchor_rows = j.at("num_anchor_rows").get<int>();
  c.embed_dim = j.at("embed_dim").get<int>();
  c.reduced_dim = j.at("reduced_dim").get<int>();
  c.k = j.at("k").get<int>();
  c.k_max = j.at("k_max").get<int>();
  c.trivial = j.at("trivial").get<bool>();
  for (const json& e : j.at("bic_trace")) {
    c.bic_trace.emplace_back(e.at(0).get<int>(), e.at(1).get<double>());
  }
  return c;
}

json FinalToJson(const FinalScore& f) {
  json clusters = json::array();
  for (const ClusterSummary& c : f.clusters) {
    clusters.push_back(json{{"k", c.k},
                            {"mass", c.mass},
                            {"anchor_mass", c.anchor_mass},
                            {"uncertainty", c.uncertainty},
                            {"weight", c.weight}});
  }
  return json{{"u_final", f.u_final},
              {"mode", AggregationModeName(f.mode)},
              {"fallback_used", f.fallback_used},
              {"clusters", clusters}};
}

FinalScore FinalFromJson(const json& j) {
  FinalScore f;
  f.u_final = j.at("u_final").get<double>();
  f.mode =
      ParseEnum<AggregationMode>(j.at("mode"), ParseAggregationMode, "mode");
  f.fallback_used = j.at("fallback_used").get<bool>();
  for (const json& c : j.at("clusters")) {
    ClusterSummary s;
    s.k = c.at("k").get<int>();
    s.mass = c.at("mass").get<double>();
    s.anchor_mass = c.at("anchor_mass").get<double>();
    s.uncertainty = c.at("uncertainty").get<double>();
    s.weight = c.at("weight").get<double>();
    f.clusters.push_back(s);
  }
  return f;
}

}  // namespace

json TimingToJson(const TimingBreakdown& t) {
  return json{{"t_nli_ms", t.t_nli},
              {"t_atom_ms", t.t_atom},
              {"t_embed_ms", t.t_embed},
              {"t_cluster_ms", t.t_cluster},
              {"t_total_ms", t.t_total},
              {"decomposer_calls", t.decomposer_calls},
              {"nli_pairs", t.nli_pairs},
              {"embed_calls", t.embed_calls}};
}

absl::StatusOr<TimingBreakdown> TimingFromJson(const json& j) {
  try {
    TimingBreakdown t;
    t.t_nli = j.at("t_nli_ms").get<double>();
    t.t_atom = j.at("t_atom_ms").get<double>();
    t.t_embed = j.at("t_embed_ms").get<double>();
    t.t_cluster = j.at("t_cluster_ms").get<double>();
    t.t_total = j.at("t_total_ms").get<double>();
    t.decomposer_calls = j.at("decomposer_calls").get<int64_t>();
    t.nli_pairs = j.at("nli_pairs").get<int64_t>();
    t.embed_calls = j.at("embed_calls").get<int64_t>();
    return t;
  } catch (const std::exception& e) {
    return Malformed(e.what());
  }
}

json ReportToJson(const PromptReport& r) {
  json routing = json::array();
  for (const RoutingRecord& rec : r.routing) routing.push_back(RecordToJson(rec));
  json units = json::array();
  for (const ScoredUnit& u : r.anchor_units) units.push_back(UnitToJson(u));
  json out{{"prompt_id", r.prompt_id},
           {"prompt", r.prompt},
           {"responses", r.responses}};
  if (r.factuality) out["factuality"] = *r.factuality;
  out["variant"] = r.variant;
  out["routing"] = routing;
  out["anchor_units"] = units;
  out["clustering"] = ClusteringToJson(r.clustering);
  out["final"] = FinalToJson(r.final_score);
  out["timing"] = TimingToJson(r.timing);
  out["decomposer_fallback"] = r.decomposer_fallback;
  out["metadata"] = json{{"t_gen", kTGenNote}};
  return out;
}

absl::StatusOr<PromptReport> ReportFromJson(const json& j) {
  if (!j.is_object()) return Malformed("not a JSON object");
  try {
    PromptReport r;
    r.prompt_id = j.at("prompt_id").get<std::string>();
    r.prompt = j.at("prompt").get<std::string>();
    r.responses = j.at("responses").get<std::vector<std::string>>();
    if (j.contains("factuality")) r.factuality = j.at("factuality").get<double>();
    r.variant = j.at("variant").get<std::string>();
    for (const json& rec : j.at("routing")) {
      r.routing.push_back(RecordFromJson(rec));
    }
    for (const json& u : j.at("anchor_units")) {
      r.anchor_units.push_back(UnitFromJson(u));
    }
    r.clustering = ClusteringFromJson(j.at("clustering"));
    r.final_score = FinalFromJson(j.at("final"));
    absl::StatusOr<TimingBreakdown> timing = TimingFromJson(j.at("timing"));
    if (!timing.ok()) return timing.status();
    r.timing = *timing;
    r.decomposer_fallback = j.at("decomposer_fallback").get<bool>();
    return r;
  } catch (const std::exception& e) {
    return Malformed(e.what());
  }
}

std::string SerializeReport(const PromptReport& report) {
  return ReportToJson(report).dump() + "\n";
}

absl::StatusOr<PromptReport> ParseReport(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return Malformed("not valid JSON");
  return ReportFromJson(j);
}

absl::StatusOr<PromptReport> ReadReportFile(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    return absl::NotFoundError(absl::StrCat("cannot open report '", path, "'"));
  }
  std::string line;
  while (std::getline(file, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    absl::StatusOr<PromptReport> report = ParseReport(line);
    if (!report.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": ", report.status().message()));
    }
    return report;
  }
  return absl::InvalidArgumentError(absl::StrCat(path, ": empty report file"));
}

}  // namespace agsc
