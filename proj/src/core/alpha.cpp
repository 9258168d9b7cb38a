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

#include "stnf/core.hpp"

namespace stnf {

namespace {

using Scope = std::vector<std::pair<std::string, std::string>>;

int lookup(const Scope& s, const std::string& name, bool left) {
  for (size_t i = s.size(); i-- > 0;) {
    if ((left ? s[i].first : s[i].second) == name) return static_cast<int>(i);
  }
  return -1;
}

bool eq_term(const Term& a, const Term& b, Scope& s) {
  if (a.kind() != b.kind() || a.args().size() != b.args().size()) return false;
  switch (a.kind()) {
    case TermKind::kVar: {
      if (a.var_type() != b.var_type()) return false;
      int i = lookup(s, a.name(), true);
      int j = lookup(s, b.name(), false);
      if (i != j) return false;
      return i >= 0 || a.name() == b.name();
    }
    case TermKind::kLambda: {
      if (a.var_type() != b.var_type()) return false;
      s.emplace_back(a.name(), b.name());
      bool r = eq_term(a.arg(0), b.arg(0), s);
      s.pop_back();
      return r;
    }
    case TermKind::kNumLit:
    case TermKind::kGridRat:
      if (a.value() != b.value()) return false;
      break;
    case TermKind::kEmptySeq:
    case TermKind::kSeqLit:
      if (a.var_type() != b.var_type()) return false;
      break;
    default:
      break;
  }
  for (size_t i = 0; i < a.args().size(); ++i)
    if (!eq_term(a.arg(i), b.arg(i), s)) return false;
  return true;
}

bool eq_formula(const Formula& a, const Formula& b, Scope& s) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::kAtom:
      if (a.pred() != b.pred()) return false;
      [[fallthrough]];
    case FormulaKind::kSt:
      if (a.args().size() != b.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!eq_term(a.args()[i], b.args()[i], s)) return false;
      return true;
    case FormulaKind::kNot:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
      for (size_t i = 0; i < a.num_children(); ++i)
        if (!eq_formula(a.child(i), b.child(i), s)) return false;
      return true;
    default:
      break;
  }
  const Binder& x = a.binder();
  const Binder& y = b.binder();
  if (x.type != y.type || x.guard.has_value() != y.guard.has_value()) return false;
  if (x.guard && !eq_term(*x.guard, *y.guard, s)) return false;
  s.emplace_back(x.name, y.name);
  bool r = eq_formula(a.body(), b.body(), s);
  s.pop_back();
  return r;
}

}  // namespace

bool alpha_equiv(const Term& a, const Term& b) {
  Scope s;
  return eq_term(a, b, s);
}

bool alpha_equiv(const Formula& a, const Formula& b) {
  Scope s;
  return eq_formula(a, b, s);
}

bool infer_standard(const Term& t, const std::set<std::string>& assumptions) {
  for (const auto& [name, type] : free_vars(t))
    if (!assumptions.count(name)) return false;
  return true;
}

}  // namespace stnf
