// Copyright 2026 The folicalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "folicalc/chart.h"
#include "folicalc/errors.h"
#include "folicalc/forms.h"
#include "generators.h"

namespace folicalc {
namespace {

using testing::Generator;

Expression P(const char* text) { return parse_expression(text); }

AdaptedChart R3() { return AdaptedChart({"z1", "z2"}, {"z3"}); }

TEST(AdaptedChartTest, DimensionsAndOrdering) {
  const AdaptedChart c = R3();
  EXPECT_EQ(c.leaf_dim(), 2U);
  EXPECT_EQ(c.transverse_dim(), 1U);
  EXPECT_EQ(c.dim(), 3U);
  EXPECT_EQ(c.coords(), (std::vector<std::string>{"z1", "z2", "z3"}));
  EXPECT_EQ(c.index_of("z3"), 2U);
  EXPECT_FALSE(c.index_of("u").has_value());
  EXPECT_TRUE(c.is_leaf_index(1));
  EXPECT_FALSE(c.is_leaf_index(2));
}

TEST(AdaptedChartTest, RejectsInvalidCoordinates) {
  EXPECT_THROW(AdaptedChart({}, {"z1"}), InputError);
  EXPECT_THROW(AdaptedChart({"z1", "z1"}, {}), InputError);
  EXPECT_THROW(AdaptedChart({"z1"}, {"z1"}), InputError);
  EXPECT_THROW(AdaptedChart({"1z"}, {}), InputError);
  EXPECT_THROW(AdaptedChart({""}, {}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i < 64; ++i) many.push_back("x" + std::to_string(i));
  EXPECT_THROW(AdaptedChart(many, {}), InputError);
}

TEST(AdaptedChartTest, EqualityIsStructural) {
  EXPECT_EQ(R3(), R3());
  EXPECT_FALSE(R3() == AdaptedChart({"z1"}, {"z2", "z3"}));
}

TEST(BundleChartTest, FibreBookkeeping) {
  const BundleChart b(R3(), {"u", "v"});
  EXPECT_EQ(b.fibre_dim(), 2U);
  EXPECT_EQ(b.fibre_index_of("v"), 1U);
  EXPECT_TRUE(b.is_base_variable("z2"));
  EXPECT_TRUE(b.is_fibre_variable("u"));
  EXPECT_FALSE(b.contains("w"));
  EXPECT_THROW(BundleChart(R3(), {}), InputError);
  EXPECT_THROW(BundleChart(R3(), {"z1"}), InputError);
  EXPECT_THROW(BundleChart(R3(), {"u", "u"}), InputError);
}

TEST(TransitionTest, ComponentCountMustMatchTarget) {
  EXPECT_THROW(TransitionMap(R3(), {P("z1")}), InputError);
}

TEST(TransitionTest, AdaptednessExamples) {
  const AdaptedChart c = R3();
  EXPECT_TRUE(check_adapted_transition(TransitionMap::identity(c), c));
  // dz'3/dz1 = dz'3/dz2 = 0.
  EXPECT_TRUE(check_adapted_transition(TransitionMap(c, {P("z1 + z3"), P("z2"), P("z3 + 1")}), c));
  // dz'3/dz1 = 1.
  EXPECT_FALSE(check_adapted_transition(TransitionMap(c, {P("z1"), P("z2"), P("z3 + z1")}), c));
}

TEST(TransitionTest, AdaptednessErrors) {
  const AdaptedChart c = R3();
  EXPECT_THROW(check_adapted_transition(TransitionMap(c, {P("z1"), P("q"), P("z3")}), c),
               InputError);
  const AdaptedChart other({"w1"}, {"w2", "w3"});
  EXPECT_THROW(check_adapted_transition(TransitionMap(other, {P("z1"), P("z2"), P("z3")}), c),
               InputError);
}

TEST(TransitionTest, FoliatedBundleExamples) {
  const BundleChart b(R3(), {"y1"});
  EXPECT_TRUE(check_foliated_bundle_transition(std::vector{P("y1")}, b));
  EXPECT_TRUE(check_foliated_bundle_transition(std::vector{P("z3*y1")}, b));
  EXPECT_FALSE(check_foliated_bundle_transition(std::vector{P("z1*y1")}, b));
  EXPECT_THROW(check_foliated_bundle_transition(std::vector{P("q*y1")}, b), InputError);
  EXPECT_THROW(check_foliated_bundle_transition(std::vector{P("y1"), P("y1")}, b), InputError);
}

TEST(FoliatedFunctionTest, Examples) {
  const AdaptedChart c = R3();
  EXPECT_TRUE(is_foliated_function(P("z3^2"), c));
  EXPECT_FALSE(is_foliated_function(P("z1"), c));
  EXPECT_TRUE(is_foliated_function(P("5/3"), c));
  EXPECT_THROW(is_foliated_function(P("u*z3"), c), InputError);
}

TEST(FoliatedPropertyTest, IdentityIsAdaptedOnEveryChart) {
  Generator g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const AdaptedChart c = g.chart(1, 4, 6);
    EXPECT_TRUE(check_adapted_transition(TransitionMap::identity(c), c));
  }
}

TEST(FoliatedPropertyTest, FoliatedIffLeafwiseDifferentialVanishes) {
  Generator g(22);
  for (int trial = 0; trial < 500; ++trial) {
    const AdaptedChart c = g.chart(1, 3, 5);
    // Bias towards foliated functions so both sides of the equivalence occur.
    const auto vars = g.coin() ? std::vector<std::string>(c.transverse_coords().begin(),
                                                          c.transverse_coords().end())
                               : c.coords();
    const Expression f = g.polynomial(vars, 3);
    const bool foliated = is_foliated_function(f, c);
    EXPECT_EQ(foliated, leafwise_differential(LeafwiseForm::scalar(c, f)).is_zero());
  }
}

TEST(FoliatedPropertyTest, FoliatedFunctionsFormASubring) {
  Generator g(23);
  for (int trial = 0; trial < 300; ++trial) {
    const AdaptedChart c = g.chart(1, 3, 5);
    const std::vector<std::string> transverse(c.transverse_coords().begin(),
                                              c.transverse_coords().end());
    const Expression f = g.polynomial(transverse, 3);
    const Expression h = g.polynomial(transverse, 3);
    ASSERT_TRUE(is_foliated_function(f, c));
    ASSERT_TRUE(is_foliated_function(h, c));
    EXPECT_TRUE(is_foliated_function(f + h, c));
    EXPECT_TRUE(is_foliated_function(f * h, c));
    EXPECT_TRUE(is_foliated_function(-f, c));
  }
}

}  // namespace
}  // namespace folicalc
