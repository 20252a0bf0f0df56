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

#ifndef AGSC_SEGMENTER_H_
#define AGSC_SEGMENTER_H_

#include <string>
#include <string_view>
#include <vector>

#include "agsc/corpus.h"

namespace agsc {

// Rule-based sentence splitter.
//
// A boundary is placed after a run of terminal punctuation (. ! ?), plus any
// closing quotes or brackets, when it is followed by whitespace and then an
// uppercase letter or an opening quote/bracket. A period ending a known
// abbreviation ("Dr.", "U.S.", "e.g.") or a single-letter initial never ends
// a sentence. Line breaks are always boundaries. Output sentences are trimmed
// and never empty; together they cover every non-whitespace character of the
// input in order.
std::vector<Sentence> SegmentSentences(std::string_view text,
                                       int response_index = 0);

// Convenience view returning only the sentence strings.
std::vector<std::string> SplitSentenceTexts(std::string_view text);

// True if `token` (a whitespace-delimited word ending in '.') is an
// abbreviation that should not terminate a sentence.
bool IsNonTerminalAbbreviation(std::string_view token);

}  // namespace agsc

#endif  // AGSC_SEGMENTER_H_
