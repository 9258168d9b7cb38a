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

#include "compiled.hpp"
#include "eval_impl.hpp"
#include "stnf/error.hpp"

namespace stnf {

struct Evaluator::Impl {
  Impl(Universe& u, const Formula& f, const EvalOptions& opt)
      : machine(u, lab::compile(u, f, opt.monotone_pruning)) {}
  lab::Machine machine;
};

Evaluator::Evaluator(Universe& u, const Formula& f, const EvalOptions& opt)
    : impl_(std::make_unique<Impl>(u, f, opt)) {}
Evaluator::~Evaluator() = default;

const std::vector<std::pair<std::string, Type>>& Evaluator::free_vars() const {
  return impl_->machine.compiled().free;
}

bool Evaluator::run(const std::vector<Value>& values) {
  auto& slots = impl_->machine.slots();
  if (values.size() != free_vars().size())
    fail(ErrorCode::kEval, "expected " + std::to_string(free_vars().size()) + " values");
  for (size_t i = 0; i < values.size(); ++i) slots[i] = values[i];
  return impl_->machine.run();
}

bool Evaluator::run(const Env& env) {
  std::vector<Value> values;
  for (const auto& [name, type] : free_vars()) {
    auto it = env.find(name);
    if (it == env.end()) fail(ErrorCode::kEval, "free variable " + name + " is unassigned");
    values.push_back(it->second);
  }
  return run(values);
}

void Evaluator::set_step_limit(uint64_t limit) { impl_->machine.set_limit(limit); }
uint64_t Evaluator::steps() const { return impl_->machine.steps(); }
void Evaluator::clear_memo() { impl_->machine.clear_memo(); }

bool eval(const Formula& f, Universe& u, const Env& env) {
  Evaluator e(u, f);
  return e.run(env);
}

bool eval(const Formula& f, const FiniteModel& m, const Env& env) {
  Universe u(m, default_budget());
  return eval(f, u, env);
}

Value eval_term(const Term& t, Universe& u, const Env& env) {
  lab::Compiled c;
  for (const auto& [name, type] : free_vars(t)) {
    c.free.emplace_back(name, type);
    c.slot_types.push_back(u.info(type));
  }
  lab::CTerm ct = lab::compile_term(u, t, c.free, c.slot_types);
  std::vector<Value> slots(c.slot_types.size(), 0);
  c.num_slots = static_cast<int>(slots.size());
  std::vector<std::pair<std::string, Type>> free = c.free;
  c.root = std::make_unique<lab::CNode>();
  lab::Machine m(u, std::move(c));
  for (size_t i = 0; i < free.size(); ++i) {
    auto it = env.find(free[i].first);
    if (it == env.end()) fail(ErrorCode::kEval, "free variable " + free[i].first + " is unassigned");
    m.slots()[i] = it->second;
  }
  return m.term(ct);
}

Env env_from_json(const Json& j, const VarMap& vars, Universe& u) {
  if (!j.is_object()) fail(ErrorCode::kEval, "assignment must be a JSON object");
  Env env;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto v = vars.find(it.key());
    if (v == vars.end()) fail(ErrorCode::kEval, "assignment to unknown variable " + it.key());
    env[it.key()] = u.from_json(u.info(v->second), it.value());
  }
  return env;
}

Json env_to_json(const Env& env, const VarMap& vars, Universe& u) {
  Json j = Json::object();
  for (const auto& [name, value] : env) {
    auto v = vars.find(name);
    if (v == vars.end()) continue;
    j[name] = u.to_json(u.info(v->second), value);
  }
  return j;
}

}  // namespace stnf
