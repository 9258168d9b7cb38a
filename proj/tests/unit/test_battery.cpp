/* Copyright 2026 The stnf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "doctest.h"
#include "stnf/dsl.hpp"
#include "stnf/lab.hpp"

using namespace stnf;

namespace {

const Rule kRules[] = {
    Rule::kPrenexSt,    Rule::kClassicalPrenex, Rule::kIdealize,
    Rule::kMaxCollapse, Rule::kHerbrandize,     Rule::kSkolemizeAntecedent,
    Rule::kElimNonstandardParam, Rule::kNegateNF, Rule::kSubstituteProperty,
};

}  // namespace

TEST_CASE("generated cases fire their rule") {
  for (Rule r : kRules) {
    std::vector<GeneratedCase> cases = generate_cases(r, 10, 5);
    REQUIRE(cases.size() == 10);
    for (const GeneratedCase& c : cases) {
      bool fired = false;
      for (const Step& s : c.derivation.steps) fired = fired || s.rule == r;
      CHECK(fired);
      CHECK(c.derivation.chained());
      CHECK(alpha_equiv(c.derivation.input, c.input));
    }
  }
}

TEST_CASE("generation is deterministic") {
  for (Rule r : kRules) {
    std::vector<GeneratedCase> a = generate_cases(r, 5, 11);
    std::vector<GeneratedCase> b = generate_cases(r, 5, 11);
    for (size_t i = 0; i < a.size(); ++i) CHECK(to_sexp(a[i].input) == to_sexp(b[i].input));
  }
}

TEST_CASE("small battery on standard-closed models") {
  BatteryConfig cfg;
  cfg.per_rule = 20;
  BatteryReport rep = battery(default_battery_models(), cfg);
  CHECK(rep.passed());
  CHECK(rep.all_standard_closed);
  CHECK(rep.per_rule.size() == 9);
  for (const auto& [rule, st] : rep.per_rule) {
    CHECK(st.formulas == 20);
    CHECK(st.counterexamples == 0);
  }
  Json j = rep.to_json();
  CHECK(j.at("caveat") == "soundness is relative to standard-closed models");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(dump(j) == dump(battery(default_battery_models(), cfg).to_json()));
}

TEST_CASE("idealize fails on the non standard-closed model") {
  BatteryConfig cfg;
  cfg.per_rule = 100;
  cfg.rules = {Rule::kIdealize};
  BatteryReport rep = battery({non_standard_closed_model()}, cfg);
  CHECK_FALSE(rep.all_standard_closed);
  CHECK(rep.per_rule.at("Idealize").counterexamples > 0);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.front().rule == "Idealize");
}

TEST_CASE("generated normal forms are S_st fixed points") {
  int n = 0;
  for (Rule r : {Rule::kIdealize, Rule::kHerbrandize, Rule::kNegateNF, Rule::kElimNonstandardParam}) {
    for (const GeneratedCase& c : generate_cases(r, 25, 3)) {
      NormalizeResult nr = normalize(c.input);
      CHECK(s_st_fixed_point_check(nr.nf.render()));
      ++n;
    }
  }
  CHECK(n == 100);
}
