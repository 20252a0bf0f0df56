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

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "agsc/clustering/reduce.h"
#include "agsc/text_util.h"

namespace agsc {
namespace {

using Setter = std::function<absl::Status(const std::string&, PipelineConfig*)>;

absl::Status BadValue(const std::string& value, const std::string& expected) {
  return absl::InvalidArgumentError(
      absl::StrCat("bad value '", value, "', expected ", expected));
}

template <typename T>
Setter IntSetter(T PipelineConfig::*section, int T::*field) {
  return [=](const std::string& v, PipelineConfig* c) -> absl::Status {
    int parsed;
    if (!absl::SimpleAtoi(v, &parsed)) return BadValue(v, "an integer");
    (c->*section).*field = parsed;
    return absl::OkStatus();
  };
}

template <typename T>
Setter DoubleSetter(T PipelineConfig::*section, double T::*field) {
  return [=](const std::string& v, PipelineConfig* c) -> absl::Status {
    double parsed;
    if (!absl::SimpleAtod(v, &parsed)) return BadValue(v, "a number");
    (c->*section).*field = parsed;
    return absl::OkStatus();
  };
}

absl::Status ParseBool(const std::string& v, bool* out) {
  if (v == "true" || v == "1" || v == "yes") {
    *out = true;
  } else if (v == "false" || v == "0" || v == "no") {
    *out = false;
  } else {
    return BadValue(v, "true or false");
  }
  return absl::OkStatus();
}

void AddProviderSetters(std::string_view prefix,
                        ProviderSettings PipelineConfig::*member,
                        std::map<std::string, Setter, std::less<>>* setters) {
  auto key = [&](std::string_view k) { return std::string(prefix) + std::string(k); };
  (*setters)[key("kind")] = [=](const std::string& v, PipelineConfig* c) {
    (c->*member).kind = std::string(v);
    return absl::OkStatus();
  };
  (*setters)[key("endpoint")] = [=](const std::string& v, PipelineConfig* c) {
    (c->*member).http.endpoint = std::string(v);
    return absl::OkStatus();
  };
  (*setters)[key("auth_env_var")] = [=](const std::string& v, PipelineConfig* c) {
    (c->*member).http.auth_env_var = std::string(v);
    return absl::OkStatus();
  };
  auto int_field = [=](int ProviderConfig::*field) {
    return [=](const std::string& v, PipelineConfig* c) -> absl::Status {
      int parsed;
      if (!absl::SimpleAtoi(v, &parsed)) return BadValue(v, "an integer");
      (c->*member).http.*field = parsed;
      return absl::OkStatus();
    };
  };
  (*setters)[key("batch_size")] = int_field(&ProviderConfig::batch_size);
  (*setters)[key("max_in_flight")] = int_field(&ProviderConfig::max_in_flight);
  (*setters)[key("timeout_ms")] = int_field(&ProviderConfig::timeout_ms);
  (*setters)[key("retry.max_attempts")] =
      [=](const std::string& v, PipelineConfig* c) -> absl::Status {
    if (!absl::SimpleAtoi(v, &(c->*member).http.retry.max_attempts)) {
      return BadValue(v, "an integer");
    }
    return absl::OkStatus();
  };
  (*setters)[key("retry.base_backoff_ms")] =
      [=](const std::string& v, PipelineConfig* c) -> absl::Status {
    if (!absl::SimpleAtoi(v, &(c->*member).http.retry.base_backoff_ms)) {
      return BadValue(v, "an integer");
    }
    return absl::OkStatus();
  };
  (*setters)[key("latency_ms")] =
      [=](const std::string& v, PipelineConfig* c) -> absl::Status {
    if (!absl::SimpleAtod(v, &(c->*member).latency_ms)) {
      return BadValue(v, "a number");
    }
    return absl::OkStatus();
  };
  (*setters)[key("dim")] = [=](const std::string& v,
                               PipelineConfig* c) -> absl::Status {
    if (!absl::SimpleAtoi(v, &(c->*member).dim)) return BadValue(v, "an integer");
    return absl::OkStatus();
  };
}

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = [] {
    auto* s = new std::map<std::string, Setter, std::less<>>();
    using PC = PipelineConfig;
    (*s)["scoring.chunk_budget_chars"] =
        IntSetter(&PC::scoring, &ScoringConfig::chunk_budget_chars);
    (*s)["scoring.chunk_stride_chars"] =
        IntSetter(&PC::scoring, &ScoringConfig::chunk_stride_chars);
    (*s)["scoring.nli_direction"] = [](const std::string& v, PC* c) {
      if (v == "reference_premise") {
        c->scoring.direction = NliDirection::kReferencePremise;
      } else if (v == "unit_premise") {
        c->scoring.direction = NliDirection::kUnitPremise;
      } else {
        return BadValue(v, "reference_premise or unit_premise");
      }
      return absl::OkStatus();
    };
    (*s)["scoring.chunk_selection"] = [](const std::string& v, PC* c) {
      if (v == "most_polarized") {
        c->scoring.chunk_selection = ChunkSelection::kMostPolarized;
      } else if (v == "best_entail") {
        c->scoring.chunk_selection = ChunkSelection::kBestEntail;
      } else if (v == "mean") {
        c->scoring.chunk_selection = ChunkSelection::kMean;
      } else {
        return BadValue(v, "most_polarized, best_entail or mean");
      }
      return absl::OkStatus();
    };
    (*s)["granularity.tau"] =
        DoubleSetter(&PC::granularity, &GranularityConfig::tau);
    (*s)["granularity.collapse_facts"] = [](const std::string& v, PC* c) {
      return ParseBool(v, &c->granularity.collapse_facts);
    };
    (*s)["granularity.mode"] = [](const std::string& v, PC* c) {
      auto mode = ParseGranularityMode(v);
      if (!mode) {
        return BadValue(
            v, "adaptive, off, neutral_guess, neutral_weight or atomic");
      }
      c->granularity_override = *mode;
      return absl::OkStatus();
    };
    (*s)["clustering.k_limit"] =
        IntSetter(&PC::clustering, &ClusteringConfig::k_limit);
    (*s)["clustering.bic_epsilon"] =
        DoubleSetter(&PC::clustering, &ClusteringConfig::bic_epsilon);
    (*s)["clustering.cov_reg"] =
        DoubleSetter(&PC::clustering, &ClusteringConfig::cov_reg);
    (*s)["clustering.em_tol"] =
        DoubleSetter(&PC::clustering, &ClusteringConfig::em_tol);
    (*s)["clustering.em_max_iter"] =
        IntSetter(&PC::clustering, &ClusteringConfig::em_max_iter);
    (*s)["clustering.n_init"] =
        IntSetter(&PC::clustering, &ClusteringConfig::n_init);
    (*s)["clustering.target_dim"] =
        IntSetter(&PC::clustering, &ClusteringConfig::target_dim);
    (*s)["clustering.reducer"] = [](const std::string& v, PC* c) {
      if (!MakeReducer(v)) return BadValue(v, "pca or none");
      c->reducer = std::string(v);
      return absl::OkStatus();
    };
    (*s)["clustering.units"] = [](const std::string& v, PC* c) {
      if (v == "post_granularity") {
        c->cluster_units = ClusterUnits::kPostGranularity;
      } else if (v == "sentences_only") {
        c->cluster_units = ClusterUnits::kSentencesOnly;
      } else {
        return BadValue(v, "post_granularity or sentences_only");
      }
      return absl::OkStatus();
    };
    (*s)["clustering.method"] = [](const std::string& v, PC* c) {
      auto method = ParseClusteringMethod(v);
      if (!method) return BadValue(v, "gmm, kmeans or none");
      c->clustering_override = *method;
      return absl::OkStatus();
    };
    (*s)["aggregation.mode"] = [](const std::string& v, PC* c) {
      auto mode = ParseAggregationMode(v);
      if (!mode) return BadValue(v, "global, literal or uniform");
      c->aggregation_override = *mode;
      return absl::OkStatus();
    };
    (*s)["pipeline.variant"] = [](const std::string& v, PC* c) {
      auto variant = ParseVariant(v);
      if (!variant) return BadValue(v, "a method variant name");
      c->variant = *variant;
      return absl::OkStatus();
    };
    (*s)["pipeline.seed"] = [](const std::string& v, PC* c) {
      if (!absl::SimpleAtoi(v, &c->seed)) {
        return BadValue(v, "a non-negative integer");
      }
      return absl::OkStatus();
    };
    (*s)["pipeline.workers"] = [](const std::string& v, PC* c) {
      if (!absl::SimpleAtoi(v, &c->workers)) return BadValue(v, "an integer");
      return absl::OkStatus();
    };
    (*s)["pipeline.cache_dir"] = [](const std::string& v, PC* c) {
      c->cache_dir = std::string(v);
      return absl::OkStatus();
    };
    (*s)["pipeline.report_dir"] = [](const std::string& v, PC* c) {
      c->report_dir = std::string(v);
      return absl::OkStatus();
    };
    (*s)["pipeline.clock"] = [](const std::string& v, PC* c) {
      if (v == "steady") {
        c->clock = ClockKind::kSteady;
      } else if (v == "simulated") {
        c->clock = ClockKind::kSimulated;
      } else {
        return BadValue(v, "steady or simulated");
      }
      return absl::OkStatus();
    };
    (*s)["pipeline.debug_dump"] = [](const std::string& v, PC* c) {
      return ParseBool(v, &c->debug_dump);
    };
    AddProviderSetters("providers.nli.", &PC::nli, s);
    AddProviderSetters("providers.embed.", &PC::embed, s);
    AddProviderSetters("providers.decompose.", &PC::decompose, s);
    return s;
  }();
  return *setters;
}

const char* DirectionName(NliDirection d) {
  return d == NliDirection::kReferencePremise ? "reference_premise"
                                              : "unit_premise";
}

const char* SelectionName(ChunkSelection s) {
  switch (s) {
    case ChunkSelection::kMostPolarized:
      return "most_polarized";
    case ChunkSelection::kBestEntail:
      return "best_entail";
    case ChunkSelection::kMean:
      return "mean";
  }
  return "?";
}

void FormatProvider(std::ostringstream& out, std::string_view prefix,
                    const ProviderSettings& p) {
  out << prefix << "kind = " << p.kind << "\n";
  out << prefix << "endpoint = " << p.http.endpoint << "\n";
  out << prefix << "auth_env_var = " << p.http.auth_env_var << "\n";
  out << prefix << "batch_size = " << p.http.batch_size << "\n";
  out << prefix << "max_in_flight = " << p.http.max_in_flight << "\n";
  out << prefix << "retry.max_attempts = " << p.http.retry.max_attempts << "\n";
  out << prefix << "retry.base_backoff_ms = " << p.http.retry.base_backoff_ms
      << "\n";
  out << prefix << "timeout_ms = " << p.http.timeout_ms << "\n";
  out << prefix << "latency_ms = " << p.latency_ms << "\n";
  out << prefix << "dim = " << p.dim << "\n";
}

}  // namespace

VariantSpec PipelineConfig::EffectiveSpec() const {
  VariantSpec spec = ResolveVariant(variant);
  if (granularity_override) spec.granularity = *granularity_override;
  if (clustering_override) spec.clustering = *clustering_override;
  if (aggregation_override) spec.aggregation = *aggregation_override;
  return spec;
}

ClusteringConfig PipelineConfig::EffectiveClustering() const {
  ClusteringConfig c = clustering;
  c.seed = seed;
  return c;
}

absl::StatusOr<PipelineConfig> ParseConfig(std::string_view text) {
  PipelineConfig config;
  std::istringstream input{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(input, raw)) {
    ++line_number;
    std::string_view line = raw;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = StripWhitespace(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_number, ": expected key = value"));
    }
    std::string_view key = StripWhitespace(line.substr(0, eq));
    std::string_view value = StripWhitespace(line.substr(eq + 1));
    auto it = Setters().find(key);
    if (it == Setters().end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_number, ": unknown key '", std::string(key), "'"));
    }
    if (absl::Status s = it->second(std::string(value), &config); !s.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "config line ", line_number, " (", std::string(key), "): ", s.message()));
    }
  }
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  return config;
}

absl::StatusOr<PipelineConfig> LoadConfig(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot open config file '", path, "'"));
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParseConfig(buffer.str());
}

absl::Status ValidateConfig(const PipelineConfig& config) {
  if (absl::Status s = ValidateScoringConfig(config.scoring); !s.ok()) return s;
  if (absl::Status s = ValidateGranularityConfig(config.granularity); !s.ok()) {
    return s;
  }
  if (absl::Status s = ValidateClusteringConfig(config.clustering); !s.ok()) {
    return s;
  }
  if (config.workers < 0) {
    return absl::InvalidArgumentError("pipeline.workers must be >= 0");
  }
  struct Named {
    const char* name;
    const ProviderSettings* settings;
    std::vector<std::string_view> kinds;
  };
  for (const Named& p :
       {Named{"nli", &config.nli, {"mock", "http"}},
        Named{"embed", &config.embed, {"mock", "http"}},
        Named{"decompose", &config.decompose, {"mock", "rules", "http"}}}) {
    if (std::find(p.kinds.begin(), p.kinds.end(), p.settings->kind) ==
        p.kinds.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "providers.", p.name, ".kind '", p.settings->kind, "' is not valid"));
    }
    if (p.settings->kind == "http") {
      if (p.settings->http.endpoint.empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("providers.", p.name, ".endpoint is required for http"));
      }
      if (absl::Status s = ValidateProviderConfig(p.settings->http); !s.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("providers.", p.name, ": ", s.message()));
      }
    }
    if (p.settings->latency_ms < 0.0 || p.settings->dim < 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "providers.", p.name, ": latency_ms must be >= 0 and dim >= 1"));
    }
  }
  return absl::OkStatus();
}

std::string FormatConfig(const PipelineConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "scoring.chunk_budget_chars = " << c.scoring.chunk_budget_chars << "\n"
      << "scoring.chunk_stride_chars = " << c.scoring.chunk_stride_chars << "\n"
      << "scoring.nli_direction = " << DirectionName(c.scoring.direction) << "\n"
      << "scoring.chunk_selection = " << SelectionName(c.scoring.chunk_selection)
      << "\n"
      << "granularity.tau = " << c.granularity.tau << "\n"
      << "granularity.collapse_facts = "
      << (c.granularity.collapse_facts ? "true" : "false") << "\n";
  if (c.granularity_override) {
    out << "granularity.mode = " << GranularityModeName(*c.granularity_override)
        << "\n";
  }
  out << "clustering.k_limit = " << c.clustering.k_limit << "\n"
      << "clustering.bic_epsilon = " << c.clustering.bic_epsilon << "\n"
      << "clustering.cov_reg = " << c.clustering.cov_reg << "\n"
      << "clustering.em_tol = " << c.clustering.em_tol << "\n"
      << "clustering.em_max_iter = " << c.clustering.em_max_iter << "\n"
      << "clustering.n_init = " << c.clustering.n_init << "\n"
      << "clustering.target_dim = " << c.clustering.target_dim << "\n"
      << "clustering.reducer = " << c.reducer << "\n"
      << "clustering.units = "
      << (c.cluster_units == ClusterUnits::kPostGranularity ? "post_granularity"
                                                            : "sentences_only")
      << "\n";
  if (c.clustering_override) {
    out << "clustering.method = " << ClusteringMethodName(*c.clustering_override)
        << "\n";
  }
  if (c.aggregation_override) {
    out << "aggregation.mode = " << AggregationModeName(*c.aggregation_override)
        << "\n";
  }
  out << "pipeline.variant = " << VariantName(c.variant) << "\n"
      << "pipeline.seed = " << c.seed << "\n"
      << "pipeline.workers = " << c.workers << "\n"
      << "pipeline.cache_dir = " << c.cache_dir << "\n"
      << "pipeline.report_dir = " << c.report_dir << "\n"
      << "pipeline.clock = "
      << (c.clock == ClockKind::kSteady ? "steady" : "simulated") << "\n"
      << "pipeline.debug_dump = " << (c.debug_dump ? "true" : "false") << "\n";
  FormatProvider(out, "providers.nli.", c.nli);
  FormatProvider(out, "providers.embed.", c.embed);
  FormatProvider(out, "providers.decompose.", c.decompose);
  return out.str();
}

}  // namespace agsc
