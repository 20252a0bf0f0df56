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

#include "support/fixtures.h"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace agsc::testing {

namespace fs = std::filesystem;

SampleSet MakeSample(std::string prompt_id, std::vector<std::string> responses,
                     std::optional<double> factuality, std::string prompt) {
  absl::StatusOr<SampleSet> sample =
      SampleSet::Create(std::move(prompt_id), std::move(prompt),
                        std::move(responses), factuality);
  if (!sample.ok()) {
    std::cerr << "bad fixture: " << sample.status() << "\n";
    std::abort();
  }
  return *std::move(sample);
}

std::string MakeTempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  fs::path dir = fs::temp_directory_path() /
                 ("agsc_" + tag + "_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << content;
}

std::map<std::string, std::string> SnapshotDir(const std::string& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files[fs::relative(entry.path(), dir).string()] =
        ReadFile(entry.path().string());
  }
  return files;
}

PipelineConfig MockConfig() {
  PipelineConfig config;
  config.clock = ClockKind::kSimulated;
  config.workers = 1;
  return config;
}

std::string DataPath(const std::string& name) {
  return (fs::path(AGSC_TEST_DATA_DIR) / name).string();
}

}  // namespace agsc::testing
