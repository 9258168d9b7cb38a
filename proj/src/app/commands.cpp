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


#include <fstream>
#include <sstream>

#include "app.hpp"
#include "stnf/dsl.hpp"
#include "stnf/lab.hpp"
#include "stnf/loeb.hpp"
#include "stnf/normalizer.hpp"

namespace stnf::app {
namespace {

constexpr Rule kAllRules[] = {
    Rule::kPrenexSt,     Rule::kClassicalPrenex,     Rule::kIdealize,
    Rule::kMaxCollapse,  Rule::kHerbrandize,         Rule::kSkolemizeAntecedent,
    Rule::kElimNonstandardParam, Rule::kNegateNF,    Rule::kSubstituteProperty,
};

Rule rule_by_name(const std::string& name) {
  for (Rule r : kAllRules)
    if (name == rule_name(r)) return r;
  fail(ErrorCode::kUsage, "unknown rule " + name);
}

Json rule_list(const Derivation& d) {
  Json out = Json::array();
  for (const Step& s : d.steps) out.push_back(rule_name(s.rule));
  return out;
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kUsage, std::string("bad ") + what + " JSON: " + e.what());
  }
}

FiniteModel load_model(const std::string& model_json) {
  FiniteModel m = FiniteModel::from_json(parse_json(model_json, "model"));
  m.validate();
  return m;
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

Outcome json_outcome(const Json& j, int code = kExitOk) { return {dump(j) + "\n", code}; }

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
    case ErrorCode::kType:
    case ErrorCode::kUsage:
    case ErrorCode::kInvalidModel:
    case ErrorCode::kHoleTypeMismatch:
      return kExitUsage;
    default:
      return kExitFailed;
  }
}

Outcome error_outcome(const Error& e) {
  Json j{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
  return json_outcome(j, exit_code_for(e.code()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kUsage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome parse_cmd(const std::string& text) {
  ParsedFile p = parse_file(text);
  Json j;
  j["formula"] = to_json(p.formula);
  j["sexp"] = to_sexp(p.formula);
  j["pretty"] = pretty(p.formula);
  ClassifyResult c = classify(p.formula);
  j["classification"] = classification_name(c.kind);
  if (c.nf) j["normal_form"] = to_json(*c.nf);
  Json free = Json::object();
  for (const auto& [name, t] : free_vars(p.formula)) free[name] = to_sexp(t);
  j["free"] = free;
  return json_outcome(j);
}

Outcome normalize_cmd(const std::string& text, bool trace, bool pretty_out) {
  ParsedFile p = parse_file(text);
  NormalizeResult r = normalize(p.formula);
  if (pretty_out) return {with_newline(pretty(r.derivation)), kExitOk};
  Json j;
  j["normal_form"] = to_json(r.nf);
  j["sexp"] = to_sexp(r.nf.render());
  j["rules"] = rule_list(r.derivation);
  Json ax = Json::array();
  for (const std::string& a : r.derivation.axioms_used()) ax.push_back(a);
  j["axioms_used"] = ax;
  if (trace) j["derivation"] = to_json(r.derivation);
  return json_outcome(j);
}

Outcome check_cmd(const std::string& text, const std::string& model_json,
                  const std::optional<std::string>& against) {
  Formula f = parse_file(text).formula;
  Formula g = against ? parse_file(*against).formula : parse_formula("(= 0 0)");
  Universe u(load_model(model_json), default_budget());
  VarMap vars = free_vars(f);
  for (const auto& [name, t] : free_vars(g)) vars.emplace(name, t);
  EquivResult r = check_equiv(f, g, u);
  Json j = r.to_json(vars, u);
  j["mode"] = against ? "equivalence" : "validity";
  return json_outcome(j, r.status == EquivResult::Status::kEquivalent ? kExitOk : kExitFailed);
}

Outcome extract_cmd(const std::string& text, const std::string& model_json) {
  Formula f = parse_file(text).formula;
  ClassifyResult c = classify(f);
  if (!c.nf) fail(ErrorCode::kUnsupportedShape, "extract needs a normal form");
  Universe u(load_model(model_json), default_budget());
  WitnessTable t = extract_witnesses(*c.nf, u);
  WitnessCheck chk = verify_witnesses(*c.nf, t, u);
  Json j;
  j["witnesses"] = t.to_json(u);
  j["check"] = {{"herbrand", chk.herbrand}, {"minimal", chk.minimal},
                {"complete", chk.complete}, {"detail", chk.detail}};
  return json_outcome(j, chk.ok() ? kExitOk : kExitFailed);
}

Outcome loeb_cmd(int variant, const std::string& property, bool normalize_out,
                 bool pretty_out) {
  if (variant != 1 && variant != 2) fail(ErrorCode::kUsage, "variant must be 1 or 2");
  LoebVariant v = variant == 1 ? LoebVariant::kFirst : LoebVariant::kSecond;
  bool is_name = !property.empty() && property.front() != '(';
  PointProperty a = PointProperty::explicit_set(property);
  if (!is_name) {
    Formula p = property.rfind("(declare", 0) == 0
                    ? parse_file(property).formula
                    : parse_formula(property, {{"a", Type::real()}});
    a = PointProperty::formula(p, "a");
  }
  Formula f = loeb_zero_formula(a, v);
  Json j;
  j["variant"] = variant;
  j["formula"] = to_sexp(f);
  if (normalize_out) {
    NormalizeResult r = loeb_zero_normal_form(a, v);
    if (pretty_out) return {with_newline(pretty(r.derivation)), kExitOk};
    j["normal_form"] = to_sexp(r.nf.render());
    j["rules"] = rule_list(r.derivation);
  } else if (pretty_out) {
    return {with_newline(pretty(f)), kExitOk};
  }
  return json_outcome(j);
}

Outcome battery_cmd(const std::string& config_json) {
  Json c = config_json.empty() ? Json::object() : parse_json(config_json, "battery config");
  BatteryConfig cfg;
  cfg.seed = c.value("seed", cfg.seed);
  cfg.per_rule = c.value("per_rule", cfg.per_rule);
  cfg.max_assignments = c.value("max_assignments", cfg.max_assignments);
  if (c.contains("rules"))
    for (const Json& r : c["rules"]) cfg.rules.push_back(rule_by_name(r.get<std::string>()));
  std::vector<FiniteModel> models;
  if (c.contains("models")) {
    for (const Json& m : c["models"]) models.push_back(load_model(m.dump()));
  } else {
    models = default_battery_models();
  }
  BatteryReport rep = battery(models, cfg);
  Json j = rep.to_json();
  if (c.value("non_closed", false)) {
    BatteryConfig nc = cfg;
    nc.rules = {Rule::kIdealize};
    BatteryReport bad = battery({non_standard_closed_model()}, nc);
    j["non_closed"] = bad.to_json();
  }
  return json_outcome(j, rep.passed() ? kExitOk : kExitFailed);
}

}  // namespace stnf::app
