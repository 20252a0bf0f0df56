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

#include "agsc/variant.h"

#include <set>
#include <string>

#include "gtest/gtest.h"

namespace agsc {
namespace {

TEST(VariantTest, MappingIsTotalAndNamed) {
  std::set<std::string> names;
  for (MethodVariant v : AllVariants()) {
    const std::string name = VariantName(v);
    EXPECT_TRUE(names.insert(name).second) << name;
    ASSERT_TRUE(ParseVariant(name).has_value());
    EXPECT_EQ(*ParseVariant(name), v);
  }
  EXPECT_EQ(names.size(), 9u);
  EXPECT_FALSE(ParseVariant("luq_pair").has_value());
}

TEST(VariantTest, Triples) {
  using GM = GranularityMode;
  using CM = ClusteringMethod;
  using AM = AggregationMode;
  EXPECT_EQ(ResolveVariant(MethodVariant::kAgsc),
            (VariantSpec{GM::kAdaptive, CM::kGmm, AM::kGlobal}));
  EXPECT_EQ(ResolveVariant(MethodVariant::kAgscLiteral),
            (VariantSpec{GM::kAdaptive, CM::kGmm, AM::kLiteral}));
  EXPECT_EQ(ResolveVariant(MethodVariant::kLuqSentence),
            (VariantSpec{GM::kOff, CM::kNone, AM::kUniform}));
  EXPECT_EQ(ResolveVariant(MethodVariant::kLuqAtomic),
            (VariantSpec{GM::kAtomic, CM::kNone, AM::kUniform}));
  EXPECT_EQ(ResolveVariant(MethodVariant::kAblateNoAdapt).granularity, GM::kOff);
  EXPECT_EQ(ResolveVariant(MethodVariant::kAblateNg).granularity,
            GM::kNeutralGuess);
  EXPECT_EQ(ResolveVariant(MethodVariant::kAblateNw).granularity,
            GM::kNeutralWeight);
  EXPECT_EQ(ResolveVariant(MethodVariant::kAblateNoCluster).clustering,
            CM::kNone);
  EXPECT_EQ(ResolveVariant(MethodVariant::kAblateKmeans).clustering,
            CM::kKMeans);
}

TEST(ClusteringMethodTest, Names) {
  for (ClusteringMethod m :
       {ClusteringMethod::kGmm, ClusteringMethod::kKMeans,
        ClusteringMethod::kNone}) {
    EXPECT_EQ(ParseClusteringMethod(ClusteringMethodName(m)), m);
  }
}

}  // namespace
}  // namespace agsc
