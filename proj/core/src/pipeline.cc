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

#include "agsc/pipeline.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <regex>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "agsc/aggregation.h"
#include "agsc/clustering/gmm.h"
#include "agsc/clustering/kmeans.h"
#include "agsc/clustering/reduce.h"
#include "agsc/providers/http_clients.h"
#include "agsc/providers/mock.h"
#include "agsc/providers/rule_decomposer.h"
#include "agsc/router.h"
#include "agsc/scoring.h"
#include "agsc/segmenter.h"

namespace agsc {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

absl::StatusOr<std::unique_ptr<ContentCache>> OpenCache(
    const std::string& dir, const char* name) {
  if (dir.empty()) return ContentCache::InMemory();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot create cache dir '", dir, "': ", ec.message()));
  }
  return ContentCache::Open((fs::path(dir) / name).string());
}

json MatrixToJson(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Embeds the clustered units, fits the mixture and aggregates.
absl::Status ClusterAndAggregate(const std::vector<Sentence>& anchor_sentences,
                                 std::span<const PreparedReference> references,
                                 std::span<const double> uncertainty,
                                 const VariantSpec& spec,
                                 const PipelineConfig& config,
                                 const Providers& providers, const Clock& clock,
                                 PromptReport* report) {
  std::vector<std::string> rows;
  std::vector<int> anchor_rows;
  if (config.cluster_units == ClusterUnits::kPostGranularity) {
    for (const ScoredUnit& u : report->anchor_units) {
      anchor_rows.push_back(static_cast<int>(rows.size()));
      rows.push_back(u.unit.text);
    }
  } else {
    for (const Sentence& s : anchor_sentences) rows.push_back(s.text);
    for (const ScoredUnit& u : report->anchor_units) {
      auto it = std::find_if(
          anchor_sentences.begin(), anchor_sentences.end(),
          [&](const Sentence& s) {
            return s.sentence_index == u.unit.sentence_index;
          });
      anchor_rows.push_back(static_cast<int>(it - anchor_sentences.begin()));
    }
  }
  const int num_anchor_rows = static_cast<int>(rows.size());
  for (const PreparedReference& ref : references) {
    for (const Sentence& s : ref.sentences) rows.push_back(s.text);
  }

  ClusteringInfo& info = report->clustering;
  info.method = ClusteringMethodName(spec.clustering);
  info.reducer = config.reducer;
  info.units = config.cluster_units == ClusterUnits::kPostGranularity
                   ? "post_granularity"
                   : "sentences_only";
  info.num_rows = static_cast<int>(rows.size());
  info.num_anchor_rows = num_anchor_rows;

  if (providers.embed == nullptr) {
    return absl::FailedPreconditionError("no embedding provider configured");
  }
  absl::StatusOr<std::vector<EmbeddingVector>> embeddings;
  {
    ScopedTimer timer(clock, &report->timing.t_embed);
    ++report->timing.embed_calls;
    embeddings = providers.embed->Embed(rows);
  }
  if (!embeddings.ok()) return embeddings.status();
  absl::StatusOr<Eigen::MatrixXd> data = StackEmbeddings(*embeddings);
  if (!data.ok()) return data.status();
  info.embed_dim = static_cast<int>(data->cols());

  const ClusteringConfig cluster_config = config.EffectiveClustering();
  std::unique_ptr<Reducer> reducer = MakeReducer(config.reducer);
  if (reducer == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown reducer '", config.reducer, "'"));
  }
  Eigen::MatrixXd reduced;
  Eigen::MatrixXd gamma;
  {
    ScopedTimer timer(clock, &report->timing.t_cluster);
    reduced = reducer->Reduce(*data, cluster_config.target_dim);
    absl::StatusOr<KSelection> selection = SelectK(reduced, cluster_config);
    if (!selection.ok()) return selection.status();
    info.k = selection->k;
    info.k_max = selection->k_max;
    info.trivial = selection->trivial;
    info.bic_trace = selection->bic_trace;
    gamma = std::move(selection->fit.responsibilities);
    if (spec.clustering == ClusteringMethod::kKMeans && selection->k > 1) {
      absl::StatusOr<KMeansResult> km =
          KMeansHard(reduced, selection->k, cluster_config.seed);
      if (!km.ok()) return km.status();
      gamma = std::move(km->responsibilities);
    }
  }
  info.reduced_dim = static_cast<int>(reduced.cols());

  if (config.debug_dump) {
    report->debug = json{{"prompt_id", report->prompt_id},
                         {"k", info.k},
                         {"bic_trace", json(info.bic_trace)},
                         {"anchor_rows", anchor_rows},
                         {"reduced", MatrixToJson(reduced)},
                         {"responsibilities", MatrixToJson(gamma)}};
  }

  absl::StatusOr<FinalScore> final_score;
  if (spec.aggregation == AggregationMode::kLiteral) {
    Eigen::MatrixXd gamma_anchor(anchor_rows.size(), gamma.cols());
    for (size_t h = 0; h < anchor_rows.size(); ++h) {
      gamma_anchor.row(h) = gamma.row(anchor_rows[h]);
    }
    final_score = AggregateLiteral(gamma_anchor, uncertainty);
  } else {
    final_score = AggregateGlobal(gamma, anchor_rows, uncertainty);
    if (absl::IsFailedPrecondition(final_score.status())) {
      std::vector<double> sentence_u;
      for (const RoutingRecord& r : report->routing) {
        sentence_u.push_back(r.sentence_uncertainty);
      }
      final_score = AllSkipFallback(sentence_u, spec.aggregation);
    }
  }
  if (!final_score.ok()) return final_score.status();
  report->final_score = *std::move(final_score);
  return absl::OkStatus();
}

std::string SanitizeId(std::string_view id) {
  std::string out;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    out.push_back(ok ? c : '_');
    if (out.size() == 64) break;
  }
  if (out.empty()) out = "prompt";
  return out;
}

absl::Status WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::InternalError(
        absl::StrCat("cannot write '", path.string(), "'"));
  }
  file << content;
  file.close();
  if (!file) {
    return absl::InternalError(
        absl::StrCat("write failed for '", path.string(), "'"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::unique_ptr<ProviderStack>> ProviderStack::Create(
    const PipelineConfig& config) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  std::unique_ptr<ProviderStack> stack(new ProviderStack());

  auto nli_cache = OpenCache(config.cache_dir, "nli.jsonl");
  if (!nli_cache.ok()) return nli_cache.status();
  stack->nli_cache_ = *std::move(nli_cache);
  auto embed_cache = OpenCache(config.cache_dir, "embed.jsonl");
  if (!embed_cache.ok()) return embed_cache.status();
  stack->embed_cache_ = *std::move(embed_cache);
  auto decompose_cache = OpenCache(config.cache_dir, "decompose.jsonl");
  if (!decompose_cache.ok()) return decompose_cache.status();
  stack->decompose_cache_ = *std::move(decompose_cache);

  if (config.nli.kind == "http") {
    stack->nli_ = std::make_unique<HttpNliClient>(config.nli.http);
  } else {
    stack->nli_ = std::make_unique<ScriptedNliProvider>(
        std::map<std::pair<std::string, std::string>, NliLogits>{}, nullptr,
        config.nli.latency_ms);
  }
  if (config.embed.kind == "http") {
    stack->embed_ = std::make_unique<HttpEmbeddingClient>(config.embed.http);
  } else {
    stack->embed_ = std::make_unique<HashedBowEmbedder>(
        static_cast<size_t>(config.embed.dim), config.embed.latency_ms);
  }
  if (config.decompose.kind == "http") {
    stack->decompose_ = std::make_unique<HttpDecomposer>(config.decompose.http);
  } else if (config.decompose.kind == "rules") {
    stack->decompose_ = std::make_unique<RuleBasedDecomposer>();
  } else {
    stack->decompose_ =
        std::make_unique<MockDecomposer>(config.decompose.latency_ms);
  }

  stack->nli_cached_ = std::make_unique<CachingNliProvider>(
      stack->nli_.get(), stack->nli_cache_.get());
  stack->embed_cached_ = std::make_unique<CachingEmbeddingProvider>(
      stack->embed_.get(), stack->embed_cache_.get());
  stack->decompose_cached_ = std::make_unique<CachingDecomposer>(
      stack->decompose_.get(), stack->decompose_cache_.get());
  return stack;
}

Providers ProviderStack::providers() const {
  return Providers{nli_cached_.get(), embed_cached_.get(),
                   decompose_cached_.get()};
}

std::unique_ptr<Clock> MakeClock(ClockKind kind) {
  if (kind == ClockKind::kSimulated) return std::make_unique<SimulatedClock>();
  return std::make_unique<SteadyClock>();
}

absl::StatusOr<PromptReport> RunPrompt(const SampleSet& sample,
                                       const PipelineConfig& config,
                                       const Providers& providers,
                                       const Clock& clock) {
  if (providers.nli == nullptr) {
    return absl::FailedPreconditionError("no NLI provider configured");
  }
  const double start = clock.NowMs();
  PromptReport report;
  report.prompt_id = sample.prompt_id();
  report.prompt = sample.prompt();
  report.responses = sample.responses();
  report.factuality = sample.factuality();
  report.variant = VariantName(config.variant);
  const VariantSpec spec = config.EffectiveSpec();

  const std::vector<Sentence> anchor_sentences =
      SegmentSentences(sample.anchor(), 0);
  if (anchor_sentences.empty()) {
    return absl::InvalidArgumentError("anchor response has no sentences");
  }
  std::vector<PreparedReference> references;
  for (size_t i = 1; i < sample.size(); ++i) {
    references.push_back(PrepareReference(sample.responses()[i],
                                          static_cast<int>(i), config.scoring));
  }

  NliScorer scorer(providers.nli, config.scoring);
  GranularityConfig granularity = config.granularity;
  granularity.mode = spec.granularity;
  absl::StatusOr<GranularityResult> routed = ApplyGranularity(
      anchor_sentences, references, sample.prompt(), scorer,
      providers.decomposer, granularity, clock, &report.timing);
  if (!routed.ok()) return routed.status();
  report.routing = std::move(routed->records);
  report.anchor_units = std::move(routed->anchor_units);
  report.decomposer_fallback = routed->decomposer_fallback;

  std::vector<double> uncertainty;
  uncertainty.reserve(report.anchor_units.size());
  for (const ScoredUnit& u : report.anchor_units) {
    uncertainty.push_back(u.uncertainty);
  }

  report.clustering.method = ClusteringMethodName(spec.clustering);
  report.clustering.reducer = config.reducer;
  if (uncertainty.empty()) {
    std::vector<double> sentence_u;
    for (const RoutingRecord& r : report.routing) {
      sentence_u.push_back(r.sentence_uncertainty);
    }
    absl::StatusOr<FinalScore> fallback =
        AllSkipFallback(sentence_u, spec.aggregation);
    if (!fallback.ok()) return fallback.status();
    report.final_score = *std::move(fallback);
  } else if (spec.clustering == ClusteringMethod::kNone ||
             spec.aggregation == AggregationMode::kUniform) {
    absl::StatusOr<FinalScore> uniform = AggregateUniform(uncertainty);
    if (!uniform.ok()) return uniform.status();
    report.final_score = *std::move(uniform);
  } else {
    absl::Status s =
        ClusterAndAggregate(anchor_sentences, references, uncertainty, spec,
                            config, providers, clock, &report);
    if (!s.ok()) return s;
  }
  report.timing.t_total = clock.NowMs() - start;
  return report;
}

CorpusResult RunCorpus(const Dataset& dataset, const PipelineConfig& config,
                       const Providers& providers) {
  CorpusResult result;
  result.variant = VariantName(config.variant);
  result.rejected = dataset.rejected;
  const size_t n = dataset.samples.size();
  result.num_prompts = static_cast<int>(n);
  std::vector<absl::StatusOr<PromptReport>> outcomes(
      n, absl::UnknownError("not run"));

  size_t workers = config.workers > 0
                       ? static_cast<size_t>(config.workers)
                       : std::max<size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<size_t>(n, 1));
  std::atomic<size_t> next{0};
  auto work = [&] {
    const std::unique_ptr<Clock> clock = MakeClock(config.clock);
    for (size_t i = next++; i < n; i = next++) {
      std::optional<SimulatedTimeScope> scope;
      if (config.clock == ClockKind::kSimulated) scope.emplace();
      outcomes[i] = RunPrompt(dataset.samples[i], config, providers, *clock);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  for (size_t i = 0; i < n; ++i) {
    if (outcomes[i].ok()) {
      result.total += outcomes[i]->timing;
      result.reports.emplace_back(static_cast<int>(i),
                                  *std::move(outcomes[i]));
    } else {
      result.failures.push_back(
          PromptFailure{static_cast<int>(i), dataset.samples[i].prompt_id(),
                        std::string(outcomes[i].status().ToString())});
    }
  }
  return result;
}

std::string ReportFileName(int index, std::string_view prompt_id) {
  return absl::StrFormat("%04d_%s.jsonl", index, SanitizeId(prompt_id));
}

json SummaryToJson(const CorpusResult& result, const PipelineConfig& config) {
  const VariantSpec spec = config.EffectiveSpec();
  json scores = json::array();
  for (const auto& [index, report] : result.reports) {
    json entry{{"prompt_id", report.prompt_id},
               {"file", ReportFileName(index, report.prompt_id)},
               {"u_final", report.final_score.u_final},
               {"fallback_used", report.final_score.fallback_used},
               {"decomposer_fallback", report.decomposer_fallback}};
    entry["factuality"] =
        report.factuality ? json(*report.factuality) : json(nullptr);
    scores.push_back(std::move(entry));
  }
  json failures = json::array();
  for (const PromptFailure& f : result.failures) {
    failures.push_back(
        json{{"index", f.index}, {"prompt_id", f.prompt_id}, {"error", f.error}});
  }
  json rejected = json::array();
  for (const RejectedRecord& r : result.rejected) {
    rejected.push_back(
        json{{"line", r.line}, {"prompt_id", r.prompt_id}, {"reason", r.reason}});
  }
  return json{
      {"variant", result.variant},
      {"granularity", GranularityModeName(spec.granularity)},
      {"clustering", ClusteringMethodName(spec.clustering)},
      {"aggregation", AggregationModeName(spec.aggregation)},
      {"seed", config.seed},
      {"num_prompts", result.num_prompts},
      {"num_scored", result.reports.size()},
      {"num_failed", result.failures.size()},
      {"scores", scores},
      {"failures", failures},
      {"rejected", rejected},
      {"timing_total", TimingToJson(result.total)},
      {"metadata", json{{"t_gen", kTGenNote}}}};
}

absl::Status WriteReports(const std::string& dir, const CorpusResult& result,
                          const PipelineConfig& config) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::InternalError(
        absl::StrCat("cannot create report dir '", dir, "': ", ec.message()));
  }
  static const std::regex kOwned(R"(\d{4,}_.*\.(jsonl|debug\.json))");
  for (const fs::directory_entry& entry : fs::directory_iterator(dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() &&
        (name == "summary.json" || std::regex_match(name, kOwned))) {
      fs::remove(entry.path(), ec);
    }
  }
  for (const auto& [index, report] : result.reports) {
    const std::string name = ReportFileName(index, report.prompt_id);
    if (absl::Status s = WriteFile(fs::path(dir) / name, SerializeReport(report));
        !s.ok()) {
      return s;
    }
    if (!report.debug.is_null()) {
      std::string debug_name = name.substr(0, name.size() - 6) + ".debug.json";
      if (absl::Status s = WriteFile(fs::path(dir) / debug_name,
                                     report.debug.dump(2) + "\n");
          !s.ok()) {
        return s;
      }
    }
  }
  return WriteFile(fs::path(dir) / "summary.json",
                   SummaryToJson(result, config).dump(2) + "\n");
}

}  // namespace agsc
