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

#include "agsc/providers/rule_decomposer.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "agsc/text_util.h"

namespace agsc {
namespace {

struct Separator {
  std::string_view text;
  bool relative;
};

// Longest first so ", and " wins over " and ".
constexpr std::array<Separator, 8> kSeparators = {{
    {", which ", true},
    {", while ", false},
    {", and ", false},
    {", but ", false},
    {", who ", true},
    {" and ", false},
    {" but ", false},
    {"; ", false},
}};

constexpr std::array<std::string_view, 16> kPrepositions = {
    "by",   "in",   "on",  "at",   "of",    "for",  "with",  "from",
    "to",   "into", "as",  "over", "under", "after", "before", "during"};

constexpr std::array<std::string_view, 3> kObjectPronouns = {"him", "her",
                                                             "them"};

struct Fragment {
  std::string text;
  bool relative = false;
};

bool StartsUpper(std::string_view word) {
  return !word.empty() && std::isupper(static_cast<unsigned char>(word[0]));
}

bool StartsLower(std::string_view word) {
  return !word.empty() && std::islower(static_cast<unsigned char>(word[0]));
}

template <size_t N>
bool Contains(const std::array<std::string_view, N>& list,
              std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

std::vector<std::string> Words(std::string_view text) {
  return absl::StrSplit(std::string(text), ' ', absl::SkipEmpty());
}

std::vector<Fragment> SplitFragments(std::string_view body) {
  std::vector<Fragment> fragments;
  bool relative = false;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t best = std::string_view::npos;
    const Separator* best_sep = nullptr;
    for (const Separator& sep : kSeparators) {
      size_t found = body.find(sep.text, pos);
      if (found < best) {
        best = found;
        best_sep = &sep;
      }
    }
    std::string_view piece = body.substr(
        pos, best == std::string_view::npos ? std::string_view::npos
                                            : best - pos);
    piece = StripWhitespace(piece);
    if (!piece.empty()) fragments.push_back({std::string(piece), relative});
    if (best_sep == nullptr) break;
    relative = best_sep->relative;
    pos = best + best_sep->text.size();
  }
  return fragments;
}

// Leading run of capitalized words followed by a lowercase verb-like word,
// e.g. "Marie Curie" in "Marie Curie won the prize".
std::string LeadingSubject(const std::vector<std::string>& words) {
  size_t run = 0;
  while (run < words.size() && StartsUpper(words[run])) ++run;
  if (run == 0 || run == words.size()) return "";
  const std::string& next = words[run];
  if (!StartsLower(next) || Contains(kPrepositions, next)) return "";
  return absl::StrJoin(words.begin(), words.begin() + run, " ");
}

// Last run of capitalized words, skipping a lone sentence-initial word that
// is followed by a lowercase word ("Directed by ...").
std::string LastEntity(const std::vector<std::string>& words) {
  std::string entity;
  size_t i = 0;
  while (i < words.size()) {
    if (!StartsUpper(words[i])) {
      ++i;
      continue;
    }
    size_t end = i;
    while (end < words.size() && StartsUpper(words[end])) ++end;
    const bool lone_initial = (i == 0 && end == 1 && words.size() > 1);
    if (!lone_initial) {
      entity = absl::StrJoin(words.begin() + i, words.begin() + end, " ");
    }
    i = end;
  }
  return entity;
}

bool IsBareName(const std::vector<std::string>& words) {
  if (words.empty()) return false;
  if (words.size() == 1 && Contains(kObjectPronouns, words[0])) return true;
  return std::all_of(words.begin(), words.end(),
                     [](const std::string& w) { return StartsUpper(w); });
}

// Previous fragment minus its trailing name or pronoun.
std::string PredicatePrefix(const std::vector<std::string>& words) {
  size_t end = words.size();
  if (end > 0 && Contains(kObjectPronouns, words[end - 1])) {
    --end;
  } else {
    while (end > 0 && StartsUpper(words[end - 1])) --end;
  }
  if (end == 0 || end == words.size()) return "";
  return absl::StrJoin(words.begin(), words.begin() + end, " ");
}

std::string FinishFact(std::string text, char terminal) {
  if (!text.empty() && std::islower(static_cast<unsigned char>(text[0]))) {
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  }
  text.push_back(terminal);
  return text;
}

}  // namespace

std::vector<std::string> SplitIntoFacts(std::string_view sentence) {
  std::string_view body = StripWhitespace(sentence);
  std::string collapsed = CollapseWhitespace(body);
  body = collapsed;
  char terminal = '.';
  while (!body.empty() &&
         (body.back() == '.' || body.back() == '!' || body.back() == '?')) {
    terminal = body.back();
    body.remove_suffix(1);
  }
  std::vector<Fragment> fragments = SplitFragments(body);
  if (fragments.size() <= 1) return {std::string(StripWhitespace(sentence))};

  std::vector<std::string> first_words = Words(fragments[0].text);
  const std::string subject = LeadingSubject(first_words);
  std::string last_entity;
  std::vector<std::string> previous_words;
  std::vector<std::string> facts;
  for (size_t i = 0; i < fragments.size(); ++i) {
    std::vector<std::string> words = Words(fragments[i].text);
    std::vector<std::string> original = words;
    if (i > 0) {
      if (fragments[i].relative) {
        const std::string& antecedent =
            !last_entity.empty() ? last_entity : subject;
        if (!antecedent.empty()) words.insert(words.begin(), antecedent);
      } else if (IsBareName(words)) {
        std::string prefix = PredicatePrefix(previous_words);
        if (!prefix.empty()) words.insert(words.begin(), prefix);
      } else if (StartsLower(words.front()) && !subject.empty()) {
        words.insert(words.begin(), subject);
      }
    }
    if (!last_entity.empty()) {
      for (std::string& w : words) {
        if (Contains(kObjectPronouns, w)) w = last_entity;
      }
    }
    std::string entity = LastEntity(original);
    if (!entity.empty()) last_entity = entity;
    previous_words = std::move(original);
    facts.push_back(FinishFact(absl::StrJoin(words, " "), terminal));
  }
  return facts;
}

absl::StatusOr<Decomposition> RuleBasedDecomposer::Decompose(
    std::string_view sentence, std::string_view /*prompt_context*/) {
  if (StripWhitespace(sentence).empty()) {
    return absl::InvalidArgumentError("cannot decompose an empty sentence");
  }
  Decomposition result;
  result.facts = SplitIntoFacts(sentence);
  return result;
}

}  // namespace agsc
