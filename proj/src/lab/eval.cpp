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

#include <algorithm>

#include "compiled.hpp"
#include "eval_impl.hpp"
#include "stnf/error.hpp"

namespace stnf::lab {

bool Machine::eval(CNode& n) {
  switch (n.kind) {
    case FormulaKind::kAtom:
      return atom(n);
    case FormulaKind::kSt: {
      Value v = term(n.args[0]);
      return u_.is_standard(n.st_type, v);
    }
    case FormulaKind::kNot:
      return !eval(*n.kids[0]);
    case FormulaKind::kAnd:
      return eval(*n.kids[0]) && eval(*n.kids[1]);
    case FormulaKind::kOr:
      return eval(*n.kids[0]) || eval(*n.kids[1]);
    case FormulaKind::kImplies:
      return !eval(*n.kids[0]) || eval(*n.kids[1]);
    default:
      return quant(n);
  }
}

bool Machine::quant(CNode& n) {
  Key key;
  bool keyed = make_key(n.memo.spec, key);
  if (keyed) {
    auto it = n.memo.table.find(key);
    if (it != n.memo.table.end()) return it->second;
  }
  bool r;
  if (n.vectorize && words_ > 0) {
    Value saved = slots_[n.slot];
    Bits b;
    vec(*n.kids[0], n.slot, b);
    slots_[n.slot] = saved;
    r = n.kind == FormulaKind::kForall ? all_ones(b) : !all_zero(b);
  } else {
    r = quant_loop(n);
  }
  if (keyed) {
    n.memo.table.emplace(key, r);
    note_entry();
  }
  return r;
}

std::vector<Value> Machine::extremal_values(TypeInfo* t, bool st, bool largest) {
  if (t->kind == Type::Kind::kArrow) {
    std::vector<Value> out;
    for (Value c : extremal_values(t->cod, st, largest)) out.push_back(u_.fn_const(t, c));
    return out;
  }
  if (!largest) return {u_.seq(t, {})};
  const auto& base = st ? u_.standard(t->elem) : u_.all(t->elem);
  if (base.size() <= static_cast<size_t>(u_.model().L)) return {u_.seq(t, base)};
  std::vector<Value> out;
  for (Value v : st ? u_.standard(t) : u_.all(t))
    if (u_.elems(t, v).size() == static_cast<size_t>(u_.model().L)) out.push_back(v);
  return out;
}

const std::vector<Value>& Machine::domain(CNode& n, bool st) {
  if (n.extremal == 0) return st ? u_.standard(n.var_ty) : u_.all(n.var_ty);
  if (!n.pruned_ready) {
    n.pruned = extremal_values(n.var_ty, st, n.extremal > 0);
    n.pruned_ready = true;
  }
  return n.pruned;
}

bool Machine::quant_loop(CNode& n) {
  const bool universal = n.kind == FormulaKind::kForall || n.kind == FormulaKind::kForallSt;
  const bool st = n.kind == FormulaKind::kForallSt || n.kind == FormulaKind::kExistsSt;
  CNode& body = *n.kids[0];
  Value saved = slots_[n.slot];
  bool result = universal;
  auto visit = [&](Value v) {
    tick();
    slots_[n.slot] = v;
    bool b = eval(body);
    if (b != universal) {
      result = !universal;
      return false;
    }
    return true;
  };
  if (n.guard) {
    Value g = term(*n.guard);
    if (n.guard_is_set) {
      for (Value p = 0; p < grid_; ++p) {
        if (!((g >> p) & 1)) continue;
        if (st && !u_.is_standard(n.var_ty, p)) continue;
        if (!visit(p)) break;
      }
    } else {
      std::vector<Value> items = u_.elems(n.guard->ty, g);
      for (Value v : items) {
        if (st && !u_.is_standard(n.var_ty, v)) continue;
        if (!visit(v)) break;
      }
    }
  } else {
    const std::vector<Value>& dom = domain(n, st);
    bool reverse = n.var_ty->kind == Type::Kind::kSet ||
                   (!universal && n.var_ty->kind == Type::Kind::kSeq);
    if (reverse) {
      for (auto it = dom.rbegin(); it != dom.rend(); ++it)
        if (!visit(*it)) break;
    } else {
      for (Value v : dom)
        if (!visit(v)) break;
    }
  }
  slots_[n.slot] = saved;
  return result;
}

}  // namespace stnf::lab
