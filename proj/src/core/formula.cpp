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

#include "stnf/formula.hpp"

#include <algorithm>

#include "stnf/error.hpp"

namespace stnf {

struct Formula::Node {
  FormulaKind kind;
  Pred pred = Pred::kEq;
  std::vector<Term> args;
  Binder binder;
  std::vector<Formula> kids;
};

namespace {

std::shared_ptr<Formula::Node> make(FormulaKind k) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  return n;
}

}  // namespace

Formula Formula::atom(Pred pred, std::vector<Term> args) {
  auto n = make(FormulaKind::kAtom);
  n->pred = pred;
  n->args = std::move(args);
  return Formula(n);
}

Formula Formula::st(Term t) {
  auto n = make(FormulaKind::kSt);
  n->args = {std::move(t)};
  return Formula(n);
}

Formula Formula::neg(Formula f) {
  auto n = make(FormulaKind::kNot);
  n->kids = {std::move(f)};
  return Formula(n);
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = make(FormulaKind::kAnd);
  n->kids = {std::move(a), std::move(b)};
  return Formula(n);
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = make(FormulaKind::kOr);
  n->kids = {std::move(a), std::move(b)};
  return Formula(n);
}

Formula Formula::implies(Formula a, Formula b) {
  auto n = make(FormulaKind::kImplies);
  n->kids = {std::move(a), std::move(b)};
  return Formula(n);
}

Formula Formula::quant(FormulaKind kind, Binder binder, Formula body) {
  switch (kind) {
    case FormulaKind::kForall:
    case FormulaKind::kExists:
    case FormulaKind::kForallSt:
    case FormulaKind::kExistsSt:
      break;
    default:
      fail(ErrorCode::kUsage, "not a quantifier kind");
  }
  auto n = make(kind);
  n->binder = std::move(binder);
  n->kids = {std::move(body)};
  return Formula(n);
}

Formula Formula::forall(Binder b, Formula body) {
  return quant(FormulaKind::kForall, std::move(b), std::move(body));
}
Formula Formula::exists(Binder b, Formula body) {
  return quant(FormulaKind::kExists, std::move(b), std::move(body));
}
Formula Formula::forall_st(Binder b, Formula body) {
  return quant(FormulaKind::kForallSt, std::move(b), std::move(body));
}
Formula Formula::exists_st(Binder b, Formula body) {
  return quant(FormulaKind::kExistsSt, std::move(b), std::move(body));
}

FormulaKind Formula::kind() const { return node_->kind; }

bool Formula::is_quantifier() const {
  switch (node_->kind) {
    case FormulaKind::kForall:
    case FormulaKind::kExists:
    case FormulaKind::kForallSt:
    case FormulaKind::kExistsSt:
      return true;
    default:
      return false;
  }
}

bool Formula::is_st_quantifier() const {
  return node_->kind == FormulaKind::kForallSt ||
         node_->kind == FormulaKind::kExistsSt;
}

bool Formula::is_binary() const {
  return node_->kind == FormulaKind::kAnd || node_->kind == FormulaKind::kOr ||
         node_->kind == FormulaKind::kImplies;
}

Pred Formula::pred() const { return node_->pred; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Term& Formula::term() const { return node_->args.at(0); }
const Binder& Formula::binder() const { return node_->binder; }
const Formula& Formula::body() const { return node_->kids.at(0); }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
size_t Formula::num_children() const { return node_->kids.size(); }
const Formula& Formula::child(size_t i) const { return node_->kids.at(i); }

Formula Formula::with_child(size_t i, Formula c) const {
  auto n = std::make_shared<Node>(*node_);
  n->kids.at(i) = std::move(c);
  return Formula(n);
}

Formula Formula::with_binder(Binder b) const {
  auto n = std::make_shared<Node>(*node_);
  n->binder = std::move(b);
  return Formula(n);
}

bool Formula::same(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.kind != y.kind || x.args.size() != y.args.size() ||
      x.kids.size() != y.kids.size())
    return false;
  if (x.kind == FormulaKind::kAtom && x.pred != y.pred) return false;
  for (size_t i = 0; i < x.args.size(); ++i)
    if (!x.args[i].same(y.args[i])) return false;
  if (is_quantifier()) {
    if (x.binder.name != y.binder.name || x.binder.type != y.binder.type ||
        x.binder.guard.has_value() != y.binder.guard.has_value())
      return false;
    if (x.binder.guard && !x.binder.guard->same(*y.binder.guard)) return false;
  }
  for (size_t i = 0; i < x.kids.size(); ++i)
    if (!x.kids[i].same(y.kids[i])) return false;
  return true;
}

Formula guard_atom(const Term& x, const Term& container) {
  Type ct = container.type();
  if (ct.kind() == Type::Kind::kSet) return Formula::atom(Pred::kInSet, {x, container});
  return Formula::atom(Pred::kInSeq, {x, container});
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) fail(ErrorCode::kUsage, "empty conjunction");
  Formula out = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) out = Formula::conj(fs[i], out);
  return out;
}

bool is_internal(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kSt:
    case FormulaKind::kForallSt:
    case FormulaKind::kExistsSt:
      return false;
    case FormulaKind::kAtom:
      return true;
    default:
      for (size_t i = 0; i < f.num_children(); ++i)
        if (!is_internal(f.child(i))) return false;
      return true;
  }
}

namespace {

void collect(const Formula& f, std::vector<std::string>& bound, VarMap* out) {
  auto add_term = [&](const Term& t) {
    VarMap m;
    collect_free_vars(t, &m);
    for (const auto& [name, type] : m) {
      if (std::find(bound.begin(), bound.end(), name) == bound.end())
        out->emplace(name, type);
    }
  };
  for (const auto& t : f.args()) add_term(t);
  if (f.is_quantifier()) {
    if (f.binder().guard) add_term(*f.binder().guard);
    bound.push_back(f.binder().name);
    collect(f.body(), bound, out);
    bound.pop_back();
    return;
  }
  for (size_t i = 0; i < f.num_children(); ++i) collect(f.child(i), bound, out);
}

void names(const Term& t, std::set<std::string>* out) {
  if (t.kind() == TermKind::kVar || t.kind() == TermKind::kLambda)
    out->insert(t.name());
  for (const auto& a : t.args()) names(a, out);
}

void names(const Formula& f, std::set<std::string>* out) {
  for (const auto& t : f.args()) names(t, out);
  if (f.is_quantifier()) {
    out->insert(f.binder().name);
    if (f.binder().guard) names(*f.binder().guard, out);
  }
  for (size_t i = 0; i < f.num_children(); ++i) names(f.child(i), out);
}

}  // namespace

void collect_free_vars(const Formula& f, VarMap* out) {
  std::vector<std::string> bound;
  collect(f, bound, out);
}

VarMap free_vars(const Formula& f) {
  VarMap m;
  collect_free_vars(f, &m);
  return m;
}

bool occurs_free(const std::string& name, const Formula& f) {
  return free_vars(f).count(name) > 0;
}

std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  names(f, &out);
  return out;
}

size_t formula_size(const Formula& f) {
  size_t n = 1;
  for (size_t i = 0; i < f.num_children(); ++i) n += formula_size(f.child(i));
  return n;
}

int st_quantifier_depth(const Formula& f) {
  int d = 0;
  for (size_t i = 0; i < f.num_children(); ++i)
    d = std::max(d, st_quantifier_depth(f.child(i)));
  return d + (f.is_st_quantifier() ? 1 : 0);
}

}  // namespace stnf
