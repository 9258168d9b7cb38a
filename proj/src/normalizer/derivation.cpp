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

#include "stnf/dsl.hpp"
#include "stnf/normalizer.hpp"

namespace stnf {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::kPrenexSt: return "PrenexSt";
    case Rule::kClassicalPrenex: return "ClassicalPrenex";
    case Rule::kIdealize: return "Idealize";
    case Rule::kMaxCollapse: return "MaxCollapse";
    case Rule::kHerbrandize: return "Herbrandize";
    case Rule::kSkolemizeAntecedent: return "SkolemizeAntecedent";
    case Rule::kElimNonstandardParam: return "ElimNonstandardParam";
    case Rule::kNegateNF: return "NegateNF";
    case Rule::kSubstituteProperty: return "SubstituteProperty";
  }
  return "?";
}

const char* rule_axiom(Rule r) {
  switch (r) {
    case Rule::kIdealize: return "I";
    case Rule::kHerbrandize:
    case Rule::kSkolemizeAntecedent:
    case Rule::kNegateNF: return "HAC_int";
    case Rule::kPrenexSt:
    case Rule::kClassicalPrenex:
    case Rule::kMaxCollapse:
    case Rule::kElimNonstandardParam:
    case Rule::kSubstituteProperty: return "classical";
  }
  return "?";
}

std::set<std::string> Derivation::axioms_used() const {
  std::set<std::string> out;
  for (const auto& s : steps) out.insert(rule_axiom(s.rule));
  return out;
}

std::vector<Formula> Derivation::assumptions() const {
  std::vector<Formula> out;
  for (const auto& s : steps)
    out.insert(out.end(), s.assumptions.begin(), s.assumptions.end());
  return out;
}

bool Derivation::chained() const {
  const Formula* prev = &input;
  for (const auto& s : steps) {
    if (!alpha_equiv(*prev, s.before)) return false;
    prev = &s.after;
  }
  return true;
}

void Derivation::append(const Derivation& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

Json to_json(const Derivation& d) {
  Json j;
  j["input"] = to_json(d.input);
  j["output"] = to_json(d.output());
  j["steps"] = Json::array();
  for (const auto& s : d.steps) {
    Json step;
    step["rule"] = rule_name(s.rule);
    step["before"] = to_json(s.before);
    step["after"] = to_json(s.after);
    step["side_conditions"] = s.side_conditions;
    step["after_sexp"] = to_sexp(s.after);
    j["steps"].push_back(step);
  }
  j["axioms_used"] = d.axioms_used();
  return j;
}

std::string pretty(const Derivation& d) {
  std::string out = "  " + pretty(d.input) + "\n";
  for (const auto& s : d.steps) {
    out += "\xe2\x89\xa1 " + pretty(s.after) + "    [" + rule_name(s.rule) + "]\n";
    for (const auto& c : s.side_conditions) out += "      side condition: " + c + "\n";
  }
  return out;
}

}  // namespace stnf
