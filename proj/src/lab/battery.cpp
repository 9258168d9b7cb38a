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

#include <chrono>

#include "stnf/dsl.hpp"
#include "stnf/error.hpp"
#include "stnf/lab.hpp"

namespace stnf {

namespace {

std::vector<int64_t> constant(int N, int64_t c) { return std::vector<int64_t>(N + 1, c); }

FiniteModel make(int N, int s, int M, int L, bool with_f1) {
  FiniteModel m;
  m.N = N;
  m.s = s;
  m.M = M;
  m.L = L;
  if (with_f1) {
    std::vector<int64_t> id(N + 1), succ(N + 1), rev(N + 1);
    for (int i = 0; i <= N; ++i) {
      id[i] = i;
      succ[i] = i < N ? i + 1 : N;
      rev[i] = N - i;
    }
    m.F1.push_back(id);
    m.F1_standard.push_back(0);
    for (int c = 0; c <= s; ++c) {
      m.F1_standard.push_back(m.F1.size());
      m.F1.push_back(constant(N, c));
    }
    m.F1.push_back(constant(N, N));
    m.F1.push_back(succ);
    m.F1.push_back(rev);
  }
  m.validate();
  return m;
}

const std::vector<Rule> kAllRules = {
    Rule::kPrenexSt,      Rule::kClassicalPrenex,      Rule::kIdealize,
    Rule::kMaxCollapse,   Rule::kHerbrandize,          Rule::kSkolemizeAntecedent,
    Rule::kElimNonstandardParam, Rule::kNegateNF,      Rule::kSubstituteProperty};

}  // namespace

std::vector<FiniteModel> default_battery_models() {
  return {make(3, 1, 2, 3, true), make(4, 1, 2, 4, false), make(5, 0, 2, 2, true),
          make(6, 1, 3, 4, true), make(4, 1, 2, 3, true)};
}

FiniteModel non_standard_closed_model() { return make(4, 3, 4, 2, false); }

bool BatteryReport::passed() const {
  if (!failures.empty()) return false;
  for (const auto& [name, st] : per_rule)
    if (st.counterexamples || st.budget_exceeded) return false;
  return true;
}

BatteryReport battery(const std::vector<FiniteModel>& models, const BatteryConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  BatteryReport rep;
  rep.models = models.size();
  std::vector<std::unique_ptr<Universe>> us;
  for (const auto& m : models) {
    us.push_back(std::make_unique<Universe>(m, default_budget()));
    if (!m.standard_closed()) rep.all_standard_closed = false;
  }
  const std::vector<Rule>& rules = cfg.rules.empty() ? kAllRules : cfg.rules;
  for (Rule rule : rules) {
    auto& st = rep.per_rule[rule_name(rule)];
    auto cases = generate_cases(rule, cfg.per_rule, cfg.seed);
    st.formulas = static_cast<int>(cases.size());
    for (const auto& c : cases) {
      st.steps += static_cast<int>(c.derivation.steps.size());
      for (size_t mi = 0; mi < us.size(); ++mi) {
        for (const auto& step : c.derivation.steps) {
          EquivOptions opt;
          opt.assumptions = step.assumptions;
          opt.max_assignments = cfg.max_assignments;
          ++st.checks;
          EquivResult r;
          try {
            r = check_equiv(step.before, step.after, *us[mi], opt);
          } catch (const Error& e) {
            rep.failures.push_back({rule_name(step.rule), mi, to_sexp(step.before),
                                    to_sexp(step.after), Json{{"error", e.what()}}});
            continue;
          }
          if (r.status == EquivResult::Status::kBudgetExceeded) ++st.budget_exceeded;
          if (r.status != EquivResult::Status::kCounterexample) continue;
          ++st.counterexamples;
          VarMap vars = free_vars(step.before);
          for (const auto& [n, t] : free_vars(step.after)) vars.emplace(n, t);
          for (const auto& a : step.assumptions)
            for (const auto& [n, t] : free_vars(a)) vars.emplace(n, t);
          rep.failures.push_back({rule_name(step.rule), mi, to_sexp(step.before),
                                  to_sexp(step.after), r.to_json(vars, *us[mi])});
        }
      }
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

Json BatteryReport::to_json() const {
  Json j;
  j["models"] = models;
  j["all_standard_closed"] = all_standard_closed;
  j["caveat"] = "soundness is relative to standard-closed models";
  j["rules"] = Json::object();
  for (const auto& [name, st] : per_rule)
    j["rules"][name] = {{"formulas", st.formulas},
                        {"steps", st.steps},
                        {"checks", st.checks},
                        {"counterexamples", st.counterexamples},
                        {"budget_exceeded", st.budget_exceeded}};
  j["failures"] = Json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"rule", f.rule},
                             {"model", f.model},
                             {"before", f.before},
                             {"after", f.after},
                             {"detail", f.counterexample}});
  j["passed"] = passed();
  return j;
}

}  // namespace stnf
