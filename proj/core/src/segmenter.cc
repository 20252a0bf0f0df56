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

#include "agsc/segmenter.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <cctype>

#include "agsc/text_util.h"

namespace agsc {
namespace {

constexpr std::array<std::string_view, 58> kAbbreviations = {
    "Mr.",   "Mrs.",  "Ms.",   "Dr.",   "Prof.", "Sr.",   "Jr.",  "St.",
    "Mt.",   "Ft.",   "Gen.",  "Col.",  "Lt.",   "Sgt.",  "Capt.", "Cmdr.",
    "Adm.",  "Gov.",  "Sen.",  "Rep.",  "Rev.",  "Hon.",  "Pres.", "Fr.",
    "Inc.",  "Ltd.",  "Co.",   "Corp.", "Bros.", "No.",   "Nos.", "vs.",
    "etc.",  "approx.", "ca.", "cf.",   "al.",   "Jan.",  "Feb.", "Mar.",
    "Apr.",  "Jun.",  "Jul.",  "Aug.",  "Sep.",  "Sept.", "Oct.", "Nov.",
    "Dec.",  "Ave.",  "Blvd.", "Dept.", "Univ.", "Vol.",  "Fig.", "pp.",
    "op.",   "Ph.D.",
};

bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsAsciiClosing(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Decodes the code point starting at `pos`; returns -1 on malformed input.
UChar32 CodePointAt(std::string_view text, size_t pos, size_t* next) {
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), i,
          static_cast<int32_t>(text.size()), c);
  *next = static_cast<size_t>(i);
  return c;
}

bool IsClosingCodePoint(UChar32 c) {
  if (c < 0) return false;
  if (c < 0x80) return IsAsciiClosing(static_cast<char>(c));
  const int8_t type = u_charType(c);
  return type == U_END_PUNCTUATION || type == U_FINAL_PUNCTUATION ||
         c == 0x201D || c == 0x2019;
}

bool OpensSentence(UChar32 c) {
  if (c < 0) return false;
  if (c == '"' || c == '\'' || c == '(' || c == '[') return true;
  if (u_isupper(c) || u_istitle(c)) return true;
  const int8_t type = u_charType(c);
  return type == U_START_PUNCTUATION || type == U_INITIAL_PUNCTUATION;
}

// Word immediately before `end` (exclusive), without leading opening
// punctuation.
std::string_view PrecedingToken(std::string_view line, size_t end) {
  size_t begin = end;
  while (begin > 0 && !IsSpace(line[begin - 1])) --begin;
  std::string_view token = line.substr(begin, end - begin);
  while (!token.empty() &&
         (token.front() == '(' || token.front() == '[' ||
          token.front() == '"' || token.front() == '\'')) {
    token.remove_prefix(1);
  }
  return token;
}

void SegmentLine(std::string_view line, std::vector<std::string>* out) {
  size_t start = 0;
  size_t i = 0;
  while (i < line.size()) {
    if (!IsTerminal(line[i])) {
      ++i;
      continue;
    }
    size_t run_end = i;
    while (run_end < line.size() && IsTerminal(line[run_end])) ++run_end;
    const bool single_period = (run_end - i == 1 && line[i] == '.');
    size_t cut = run_end;
    while (cut < line.size()) {
      size_t next;
      UChar32 c = CodePointAt(line, cut, &next);
      if (!IsClosingCodePoint(c)) break;
      cut = next;
    }
    size_t after = cut;
    while (after < line.size() && IsSpace(line[after])) ++after;
    bool boundary = after > cut && after < line.size();
    if (boundary) {
      size_t unused;
      boundary = OpensSentence(CodePointAt(line, after, &unused));
    }
    if (boundary && single_period &&
        IsNonTerminalAbbreviation(PrecedingToken(line, run_end))) {
      boundary = false;
    }
    if (boundary) {
      std::string_view sentence =
          StripWhitespace(line.substr(start, cut - start));
      if (!sentence.empty()) out->emplace_back(sentence);
      start = after;
      i = after;
    } else {
      i = run_end;
    }
  }
  std::string_view tail = StripWhitespace(line.substr(start));
  if (!tail.empty()) out->emplace_back(tail);
}

}  // namespace

bool IsNonTerminalAbbreviation(std::string_view token) {
  if (token.size() < 2 || token.back() != '.') return false;
  if (std::find(kAbbreviations.begin(), kAbbreviations.end(), token) !=
      kAbbreviations.end()) {
    return true;
  }
  // Single-letter initial: "J." in "J. R. R. Tolkien".
  if (token.size() == 2 && std::isupper(static_cast<unsigned char>(token[0]))) {
    return true;
  }
  // Dotted acronyms and Latin forms: "U.S.", "U.K.", "e.g.", "i.e.".
  std::string_view body = token.substr(0, token.size() - 1);
  if (body.find('.') == std::string_view::npos) return false;
  bool letters_and_dots = true;
  char prev = '.';
  for (char c : body) {
    if (c == '.') {
      if (prev == '.') letters_and_dots = false;
    } else if (!std::isalpha(static_cast<unsigned char>(c)) || prev != '.') {
      letters_and_dots = false;
    }
    prev = c;
  }
  return letters_and_dots;
}

std::vector<std::string> SplitSentenceTexts(std::string_view text) {
  std::vector<std::string> out;
  size_t line_start = 0;
  while (line_start <= text.size()) {
    size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    SegmentLine(text.substr(line_start, line_end - line_start), &out);
    line_start = line_end + 1;
  }
  return out;
}

std::vector<Sentence> SegmentSentences(std::string_view text,
                                       int response_index) {
  std::vector<Sentence> sentences;
  int index = 0;
  for (std::string& piece : SplitSentenceTexts(text)) {
    sentences.push_back(Sentence{response_index, index++, std::move(piece)});
  }
  return sentences;
}

}  // namespace agsc
