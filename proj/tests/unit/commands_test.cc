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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "folicalc/commands.h"
#include "folicalc/errors.h"
#include "json.hpp"

namespace folicalc {
namespace {

Document sample(const std::string& file) {
  std::ifstream in(std::string(FOLICALC_SAMPLES_DIR) + "/" + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Report run(Verb verb, const std::string& file, std::vector<std::string> names = {}) {
  return run_command(verb, sample(file), names);
}

const CheckResult* find_check(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

TEST(VerbTest, NamesRoundTrip) {
  for (Verb v : {Verb::kCheck, Verb::kDiff, Verb::kWedge, Verb::kRestrict, Verb::kExtend,
                 Verb::kVerify}) {
    EXPECT_EQ(parse_verb(verb_name(v)), v);
  }
  EXPECT_FALSE(parse_verb("integrate").has_value());
}

TEST(CommandTest, VerifyWorkedExample) {
  const Report r = run(Verb::kVerify, "worked_extension.fol");
  EXPECT_TRUE(r.all_passed());
  const CheckResult* c = find_check(r, "restrict(extend(A, 0, B)) = A");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->payload, "Gamma'[u][z1] = u\nGamma'[u][z3] = -z2*u");
}

TEST(CommandTest, ExtendWorkedExampleText) {
  const Report r = run(Verb::kExtend, "worked_extension.fol", {"A", "B"});
  EXPECT_EQ(r.to_text(),
            "PASS extend(A, 0, B)\n"
            "    Gamma'[u][z1] = u\n"
            "    Gamma'[u][z3] = -z2*u\n"
            "extend: 1 check(s), 0 failed\n");
}

TEST(CommandTest, DiffOfFunction) {
  const Report r = run(Verb::kDiff, "forms.fol", {"f"});
  ASSERT_EQ(r.checks.size(), 1U);
  EXPECT_EQ(r.checks[0].payload, "z3 ~dz1");
}

TEST(CommandTest, RestrictTransverseCovector) {
  const Report r = run(Verb::kRestrict, "forms.fol", {"w3"});
  ASSERT_EQ(r.checks.size(), 1U);
  EXPECT_EQ(r.checks[0].payload, "0");
}

TEST(CommandTest, RestrictConnection) {
  const Report r = run(Verb::kRestrict, "two_splittings.fol", {"Gamma"});
  EXPECT_EQ(r.checks[0].payload, "Gamma[u][z2] = z3*u");
}

TEST(CommandTest, WedgeOfTwoForms) {
  const Report r = run(Verb::kWedge, "forms.fol", {"w3", "omega"});
  EXPECT_EQ(r.checks[0].payload, "-z3 dz1^dz3");
}

TEST(CommandTest, CheckFlagsNonAdaptedTransitions) {
  const Report r = run(Verb::kCheck, "transitions.fol");
  EXPECT_FALSE(r.all_passed());
  EXPECT_TRUE(find_check(r, "affine: adapted")->passed);
  EXPECT_TRUE(find_check(r, "affine: foliated bundle")->passed);
  EXPECT_FALSE(find_check(r, "shear: adapted")->passed);
  EXPECT_FALSE(find_check(r, "twist: foliated bundle")->passed);
}

TEST(CommandTest, CheckCoversFlatSections) {
  const Report r = run(Verb::kCheck, "flat_section.fol");
  EXPECT_TRUE(r.all_passed());
  const CheckResult* flat = find_check(r, "nabla_A(s)");
  ASSERT_NE(flat, nullptr);
  EXPECT_EQ(flat->payload, "flat");
  const CheckResult* bent = find_check(r, "nabla_A(t)");
  ASSERT_NE(bent, nullptr);
  EXPECT_EQ(bent->payload, "nabla_A(t)[u][z1] = z2 - 1\nnabla_A(t)[u][z2] = z1 - 2*z2");
}

TEST(CommandTest, VerifyWithTwoSplittingsReportsDependence) {
  const Report r = run(Verb::kVerify, "two_splittings.fol", {"A", "Gamma", "B1", "B2"});
  EXPECT_TRUE(r.all_passed());
  const CheckResult* c = find_check(r, "extend(A, Gamma, B1) - extend(A, Gamma, B2)");
  ASSERT_NE(c, nullptr);
  // Q^u_z1 = u - 0, so delta^u_z3 = -(1 - 0) u.
  EXPECT_EQ(c->payload, "delta[u][z3] = -u");
}

TEST(CommandTest, InputErrorsNameTheOffender) {
  EXPECT_THROW(run(Verb::kDiff, "forms.fol", {"nope"}), InputError);
  EXPECT_THROW(run(Verb::kDiff, "forms.fol", {}), InputError);
  try {
    run(Verb::kDiff, "worked_extension.fol", {"B"});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("'B'"), std::string::npos);
  }
  EXPECT_THROW(run(Verb::kWedge, "forms.fol", {"f", "w3"}), InputError);
  EXPECT_THROW(run(Verb::kExtend, "two_splittings.fol", {}), InputError);
}

TEST(ReportTest, JsonSchemaAndVerdictsMatchText) {
  for (const char* file : {"forms.fol", "transitions.fol", "two_splittings.fol"}) {
    const Report r = run(Verb::kCheck, file);
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j.at("command"), "check");
    ASSERT_EQ(j.at("checks").size(), r.checks.size());
    std::istringstream text(r.to_text());
    std::string line;
    std::size_t k = 0;
    while (std::getline(text, line)) {
      if (line.rfind("PASS ", 0) != 0 && line.rfind("FAIL ", 0) != 0) continue;
      const auto& entry = j.at("checks")[k++];
      EXPECT_EQ(entry.at("status"), line[0] == 'P' ? "pass" : "fail");
      EXPECT_EQ(entry.at("name"), line.substr(5));
      EXPECT_TRUE(entry.at("payload").is_string());
    }
    EXPECT_EQ(k, r.checks.size());
  }
}

TEST(ReportTest, ReportsAreDeterministic) {
  EXPECT_EQ(run(Verb::kCheck, "forms.fol").to_text(), run(Verb::kCheck, "forms.fol").to_text());
}

}  // namespace
}  // namespace folicalc
