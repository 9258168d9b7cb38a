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

#include "stnf/error.hpp"
#include "stnf/lab.hpp"
#include "type_info.hpp"

namespace stnf {

namespace {

struct Bound {
  std::unique_ptr<Evaluator> ev;
  std::vector<size_t> index;  // positions in the joint assignment
};

Bound bind_formula(Universe& u, const Formula& f, const VarMap& vars, const EvalOptions& opt) {
  Bound b;
  b.ev = std::make_unique<Evaluator>(u, f, opt);
  for (const auto& [name, type] : b.ev->free_vars())
    b.index.push_back(static_cast<size_t>(std::distance(vars.begin(), vars.find(name))));
  return b;
}

bool run(Bound& b, const std::vector<Value>& joint) {
  std::vector<Value> vals;
  vals.reserve(b.index.size());
  for (size_t i : b.index) vals.push_back(joint[i]);
  return b.ev->run(vals);
}

}  // namespace

EquivResult check_equiv(const Formula& f, const Formula& g, Universe& u,
                        const EquivOptions& opt) {
  VarMap vars = free_vars(f);
  for (const auto& [n, t] : free_vars(g)) vars.emplace(n, t);
  for (const auto& a : opt.assumptions)
    for (const auto& [n, t] : free_vars(a)) vars.emplace(n, t);

  std::vector<const std::vector<Value>*> domains;
  EquivResult res;
  res.space = 1;
  for (const auto& [name, type] : vars) {
    domains.push_back(&u.all(u.info(type)));
    uint64_t n = domains.back()->size();
    res.space = (n == 0 || res.space > UINT64_MAX / n) ? UINT64_MAX : res.space * n;
  }
  uint64_t cap = opt.max_assignments ? opt.max_assignments : default_budget();

  Bound bf = bind_formula(u, f, vars, opt.eval);
  Bound bg = bind_formula(u, g, vars, opt.eval);
  std::vector<Bound> assume;
  for (const auto& a : opt.assumptions) assume.push_back(bind_formula(u, a, vars, opt.eval));

  std::vector<size_t> pos(domains.size(), 0);
  std::vector<Value> joint(domains.size());
  for (const auto* d : domains)
    if (d->empty()) return res;
  while (true) {
    if (res.checked + res.skipped >= cap) {
      res.status = EquivResult::Status::kBudgetExceeded;
      return res;
    }
    for (size_t i = 0; i < pos.size(); ++i) joint[i] = (*domains[i])[pos[i]];
    bool admitted = true;
    for (auto& a : assume)
      if (!run(a, joint)) admitted = false;
    if (admitted) {
      ++res.checked;
      bool x = run(bf, joint), y = run(bg, joint);
      if (x != y) {
        res.status = EquivResult::Status::kCounterexample;
        res.f_value = x;
        res.g_value = y;
        size_t i = 0;
        for (const auto& [name, type] : vars) res.counterexample[name] = joint[i++];
        return res;
      }
    } else {
      ++res.skipped;
    }
    size_t k = 0;
    while (k < pos.size() && ++pos[k] == domains[k]->size()) pos[k++] = 0;
    if (k == pos.size()) break;
  }
  return res;
}

Json EquivResult::to_json(const VarMap& vars, Universe& u) const {
  Json j;
  switch (status) {
    case Status::kEquivalent:
      j["result"] = "Equivalent";
      break;
    case Status::kCounterexample:
      j["result"] = "Counterexample";
      j["counterexample"] = env_to_json(counterexample, vars, u);
      j["f_value"] = f_value;
      j["g_value"] = g_value;
      break;
    case Status::kBudgetExceeded:
      j["result"] = "BudgetExceeded";
      break;
  }
  j["checked"] = checked;
  j["skipped"] = skipped;
  j["space"] = space;
  return j;
}

}  // namespace stnf
