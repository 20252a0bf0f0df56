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

#ifndef AGSC_TEXT_UTIL_H_
#define AGSC_TEXT_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace agsc {

// Strips leading and trailing ASCII whitespace.
std::string_view StripWhitespace(std::string_view text);

// Replaces every run of ASCII whitespace by one space and strips both ends.
std::string CollapseWhitespace(std::string_view text);

// Unicode NFC normalization.
std::string NfcNormalize(std::string_view text);

// Number of code points in a UTF-8 string.
size_t Utf8Length(std::string_view text);

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);

}  // namespace agsc

#endif  // AGSC_TEXT_UTIL_H_
