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

#ifndef AGSC_TESTS_SUPPORT_FIXTURES_H_
#define AGSC_TESTS_SUPPORT_FIXTURES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agsc/config.h"
#include "agsc/corpus.h"

namespace agsc::testing {

// Aborts on invalid input; fixtures are expected to be valid.
SampleSet MakeSample(std::string prompt_id, std::vector<std::string> responses,
                     std::optional<double> factuality = std::nullopt,
                     std::string prompt = "Tell me a bio.");

// Fresh empty directory under the system temp dir.
std::string MakeTempDir(const std::string& tag);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& content);

// Relative path -> file bytes for every regular file under `dir`.
std::map<std::string, std::string> SnapshotDir(const std::string& dir);

// Mock providers, simulated clock, one worker.
PipelineConfig MockConfig();

std::string DataPath(const std::string& name);

}  // namespace agsc::testing

#endif  // AGSC_TESTS_SUPPORT_FIXTURES_H_
