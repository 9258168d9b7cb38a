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

#include <map>

#include "compiled.hpp"
#include "stnf/error.hpp"

namespace stnf::lab {

namespace {

void merge(std::vector<bool>& into, const std::vector<bool>& from) {
  if (from.size() > into.size()) into.resize(from.size(), false);
  for (size_t i = 0; i < from.size(); ++i)
    if (from[i]) into[i] = true;
}

void term_deps(const CTerm& t, std::vector<bool>& out) {
  if (t.kind == TermKind::kVar) {
    if (static_cast<size_t>(t.slot) >= out.size()) out.resize(t.slot + 1, false);
    out[t.slot] = true;
    return;
  }
  if (t.kind == TermKind::kLambda) {
    std::vector<bool> inner;
    term_deps(t.args[0], inner);
    if (static_cast<size_t>(t.slot) < inner.size()) inner[t.slot] = false;
    merge(out, inner);
    return;
  }
  for (const auto& a : t.args) term_deps(a, out);
}

int bits_for(uint64_t n) {
  int b = 1;
  while ((uint64_t{1} << b) < n) ++b;
  return b;
}

class Compiler {
 public:
  Compiler(Universe& u, std::vector<std::pair<std::string, Type>>& free,
           std::vector<TypeInfo*>& slot_types)
      : u_(u), free_(free), slot_types_(slot_types) {
    for (size_t i = 0; i < free_.size(); ++i) scope_[free_[i].first].push_back(static_cast<int>(i));
  }

  int bind(const std::string& name, const Type& t) {
    int s = static_cast<int>(slot_types_.size());
    slot_types_.push_back(u_.info(t));
    scope_[name].push_back(s);
    return s;
  }
  void unbind(const std::string& name) { scope_[name].pop_back(); }

  int lookup(const std::string& name, const Type& t) {
    auto it = scope_.find(name);
    if (it != scope_.end() && !it->second.empty()) return it->second.back();
    int s = static_cast<int>(slot_types_.size());
    slot_types_.push_back(u_.info(t));
    free_.emplace_back(name, t);
    scope_[name].push_back(s);
    return s;
  }

  CTerm term(const Term& t) {
    CTerm c;
    c.kind = t.kind();
    c.ty = u_.info(t.type());
    switch (t.kind()) {
      case TermKind::kVar:
        c.slot = lookup(t.name(), t.var_type());
        break;
      case TermKind::kLambda:
        c.slot = bind(t.name(), t.var_type());
        c.args.push_back(term(t.arg(0)));
        unbind(t.name());
        break;
      case TermKind::kNumLit:
        c.lit = t.value();
        break;
      case TermKind::kGridRat:
        c.lit = t.value();
        c.args.push_back(term(t.arg(0)));
        break;
      case TermKind::kEmptySeq:
      case TermKind::kSeqLit:
        for (const auto& a : t.args()) c.args.push_back(term(a));
        break;
      default:
        for (const auto& a : t.args()) c.args.push_back(term(a));
        if (!c.args.empty()) c.aux = c.args[0].ty;
        break;
    }
    return c;
  }

  std::unique_ptr<CNode> formula(const Formula& f) {
    auto n = std::make_unique<CNode>();
    n->kind = f.kind();
    switch (f.kind()) {
      case FormulaKind::kAtom:
        n->pred = f.pred();
        for (const auto& a : f.args()) n->args.push_back(term(a));
        for (const auto& a : n->args) term_deps(a, n->dep);
        break;
      case FormulaKind::kSt:
        n->args.push_back(term(f.term()));
        n->st_type = n->args[0].ty;
        term_deps(n->args[0], n->dep);
        break;
      case FormulaKind::kNot:
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
      case FormulaKind::kImplies:
        for (size_t i = 0; i < f.num_children(); ++i) {
          n->kids.push_back(formula(f.child(i)));
          merge(n->dep, n->kids.back()->dep);
        }
        break;
      default: {
        const Binder& b = f.binder();
        if (b.guard) {
          n->guard = term(*b.guard);
          n->guard_is_set = b.guard->type().kind() == Type::Kind::kSet;
        }
        n->slot = bind(b.name, b.type);
        n->var_ty = slot_types_[n->slot];
        n->kids.push_back(formula(f.body()));
        unbind(b.name);
        if (prune && !b.guard) {
          bool universal = f.is(FormulaKind::kForall) || f.is(FormulaKind::kForallSt);
          int dir = monotone_direction(f.body(), b.name, b.type);
          if (universal) dir = -dir;
          n->extremal = dir;
        }
        n->dep = n->kids[0]->dep;
        if (static_cast<size_t>(n->slot) < n->dep.size()) n->dep[n->slot] = false;
        if (n->guard) term_deps(*n->guard, n->dep);
        break;
      }
    }
    return n;
  }

  bool prune = false;

 private:
  Universe& u_;
  std::vector<std::pair<std::string, Type>>& free_;
  std::vector<TypeInfo*>& slot_types_;
  std::map<std::string, std::vector<int>> scope_;
};

bool is_set_quant(const CNode& n) {
  return (n.kind == FormulaKind::kForall || n.kind == FormulaKind::kExists) && !n.guard &&
         n.var_ty->kind == Type::Kind::kSet;
}

bool has_dependent_set_quant(const CNode& n, int x) {
  for (const auto& k : n.kids) {
    if (is_set_quant(*k) && k->depends(x)) return true;
    if (has_dependent_set_quant(*k, x)) return true;
  }
  return false;
}

class Finisher {
 public:
  Finisher(Universe& u, const std::vector<TypeInfo*>& slot_types)
      : slot_types_(slot_types) {
    const FiniteModel& m = u.model();
    nat_bits_ = bits_for(static_cast<uint64_t>(m.N) + 1);
    real_bits_ = bits_for(static_cast<uint64_t>(m.grid_size()));
    set_bits_ = static_cast<int>(m.grid_size());
  }

  int width(int slot) const {
    switch (slot_types_[slot]->kind) {
      case Type::Kind::kBase:
        return nat_bits_;
      case Type::Kind::kReal:
        return real_bits_;
      case Type::Kind::kSet:
        return set_bits_;
      default:
        return 12;
    }
  }

  KeySpec spec(const std::vector<bool>& dep, int skip) const {
    KeySpec k;
    int total = 0;
    for (size_t s = 0; s < dep.size(); ++s) {
      if (!dep[s] || static_cast<int>(s) == skip) continue;
      k.slots.push_back(static_cast<int>(s));
      k.bits.push_back(width(static_cast<int>(s)));
      total += k.bits.back();
    }
    k.enabled = total <= 128;
    return k;
  }

  void run(CNode& n, std::vector<int>& scope) {
    n.dep.resize(slot_types_.size(), false);
    if (n.slot >= 0) {
      bool partial = false;
      for (int s : scope)
        if (!n.dep[s]) partial = true;
      n.memo.spec = spec(n.dep, -1);
      n.memo.spec.enabled = n.memo.spec.enabled && partial;
      if (n.guard && n.guard_is_set && n.guard->kind == TermKind::kVar)
        n.mask_memo.spec = spec(n.dep, n.guard->slot);
      scope.push_back(n.slot);
    }
    for (auto& k : n.kids) run(*k, scope);
    if (n.slot >= 0) {
      scope.pop_back();
      n.vectorize = is_set_quant(n) && !has_dependent_set_quant(n, n.slot);
    }
  }

 private:
  const std::vector<TypeInfo*>& slot_types_;
  int nat_bits_, real_bits_, set_bits_;
};

}  // namespace

Compiled compile(Universe& u, const Formula& f, bool monotone_pruning) {
  Compiled c;
  for (const auto& [name, type] : free_vars(f)) {
    c.free.emplace_back(name, type);
    c.slot_types.push_back(u.info(type));
  }
  Compiler comp(u, c.free, c.slot_types);
  comp.prune = monotone_pruning;
  c.root = comp.formula(f);
  std::vector<int> scope;
  Finisher(u, c.slot_types).run(*c.root, scope);
  c.num_slots = static_cast<int>(c.slot_types.size());
  return c;
}

CTerm compile_term(Universe& u, const Term& t, std::vector<std::pair<std::string, Type>>& free,
                   std::vector<TypeInfo*>& slot_types) {
  Compiler comp(u, free, slot_types);
  return comp.term(t);
}

}  // namespace stnf::lab
