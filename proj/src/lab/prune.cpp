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

namespace stnf::lab {

namespace {

// Result type after applying `t` to every argument it takes.
const Type& final_type(const Type& t) { return t.is_arrow() ? final_type(t.cod()) : t; }

struct Direction {
  const std::string& var;

  bool mentions(const Term& t) const { return occurs_free(var, t); }

  // var itself, or var applied to arguments free of var, of sequence type.
  bool chain(const Term& t) const {
    if (t.is_var(var)) return t.type().is_seq();
    if (t.kind() != TermKind::kApply || !t.type().is_seq()) return false;
    const Term* head = &t;
    while (head->kind() == TermKind::kApply) {
      if (mentions(head->arg(1))) return false;
      head = &head->arg(0);
    }
    return head->is_var(var);
  }

  bool atom(const Formula& f, bool up) const {
    const auto& a = f.args();
    bool any = false;
    for (const auto& t : a) any = any || mentions(t);
    if (!any) return true;
    return f.pred() == Pred::kInSeq && up && chain(a[1]) && !mentions(a[0]);
  }

  bool walk(const Formula& f, bool up) const {
    switch (f.kind()) {
      case FormulaKind::kAtom:
        return atom(f, up);
      case FormulaKind::kSt:
        return !mentions(f.term());
      case FormulaKind::kNot:
        return walk(f.body(), !up);
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        return walk(f.lhs(), up) && walk(f.rhs(), up);
      case FormulaKind::kImplies:
        return walk(f.lhs(), !up) && walk(f.rhs(), up);
      default:
        break;
    }
    const Binder& b = f.binder();
    if (b.guard && mentions(*b.guard)) {
      bool ex = f.is(FormulaKind::kExists) || f.is(FormulaKind::kExistsSt);
      if (!chain(*b.guard) || ex != up) return false;
    }
    if (b.name == var) return true;
    return walk(f.body(), up);
  }
};

}  // namespace

int monotone_direction(const Formula& body, const std::string& var, const Type& type) {
  if (!final_type(type).is_seq()) return 0;
  Direction d{var};
  if (d.walk(body, true)) return 1;
  if (d.walk(body, false)) return -1;
  return 0;
}

}  // namespace stnf::lab
