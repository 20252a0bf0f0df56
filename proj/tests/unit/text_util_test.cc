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

#include "agsc/text_util.h"

#include "gtest/gtest.h"

namespace agsc {
namespace {

TEST(TextUtilTest, StripWhitespace) {
  EXPECT_EQ(StripWhitespace("  a b \n"), "a b");
  EXPECT_EQ(StripWhitespace(" \t\n"), "");
  EXPECT_EQ(StripWhitespace(""), "");
}

TEST(TextUtilTest, CollapseWhitespace) {
  EXPECT_EQ(CollapseWhitespace("  a \n\n b\tc  "), "a b c");
  EXPECT_EQ(CollapseWhitespace(""), "");
}

TEST(TextUtilTest, NfcComposesCombiningSequences) {
  // "e" + COMBINING ACUTE ACCENT composes to U+00E9.
  EXPECT_EQ(NfcNormalize("Rene\xCC\x81"), "Ren\xC3\xA9");
  EXPECT_EQ(NfcNormalize("plain"), "plain");
  EXPECT_EQ(NfcNormalize(NfcNormalize("Rene\xCC\x81")), "Ren\xC3\xA9");
}

TEST(TextUtilTest, Utf8LengthCountsCodePoints) {
  EXPECT_EQ(Utf8Length("abc"), 3u);
  EXPECT_EQ(Utf8Length("Ren\xC3\xA9"), 4u);
  EXPECT_EQ(Utf8Length(""), 0u);
}

TEST(TextUtilTest, Sha256MatchesKnownDigests) {
  EXPECT_EQ(Sha256Hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace agsc
