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

Machine::Machine(Universe& u, Compiled c) : u_(u), c_(std::move(c)) {
  slots_.assign(static_cast<size_t>(c_.num_slots), 0);
  collect(*c_.root);
  const FiniteModel& m = u_.model();
  grid_ = static_cast<int>(m.grid_size());
  if (grid_ <= 24) {
    nbits_ = uint64_t{1} << grid_;
    words_ = static_cast<size_t>((nbits_ + 63) / 64);
  }
}

void Machine::collect(CNode& n) {
  if (n.slot >= 0) nodes_.push_back(&n);
  for (auto& k : n.kids) collect(*k);
}

void Machine::clear_memo() {
  for (CNode* n : nodes_) {
    n->memo.table.clear();
    n->mask_memo.table.clear();
  }
  entries_ = 0;
}

void Machine::tick() {
  ++steps_;
  if (limit_ && steps_ > limit_)
    fail(ErrorCode::kBudgetExceeded, "evaluation exceeded " + std::to_string(limit_) + " steps");
}

bool Machine::make_key(const KeySpec& spec, Key& key) const {
  if (!spec.enabled) return false;
  key = 0;
  int shift = 0;
  for (size_t i = 0; i < spec.slots.size(); ++i) {
    Value v = slots_[spec.slots[i]];
    int b = spec.bits[i];
    if (v < 0 || (b < 63 && v >= (Value{1} << b))) return false;
    key |= static_cast<Key>(v) << shift;
    shift += b;
  }
  return true;
}

void Machine::note_entry() {
  if (++entries_ > kMaxEntries) clear_memo();
}

Value Machine::grid_index(int64_t num, Value scale) const {
  int M = u_.model().M;
  if (scale < 0 || scale > 62) fail(ErrorCode::kEval, "grid scale out of range");
  Value idx;
  if (scale <= M) {
    idx = num << (M - scale);
  } else {
    int d = static_cast<int>(scale) - M;
    if (num % (Value{1} << d) != 0)
      fail(ErrorCode::kEval, "grid rational " + std::to_string(num) + "/2^" +
                                 std::to_string(scale) + " is not on the model grid");
    idx = num >> d;
  }
  if (idx < 0 || idx >= u_.model().grid_size())
    fail(ErrorCode::kEval, "grid rational outside [0,1]");
  return idx;
}

Value Machine::term(const CTerm& t) {
  switch (t.kind) {
    case TermKind::kVar:
      return slots_[t.slot];
    case TermKind::kNumLit:
      return t.lit;
    case TermKind::kAdd:
      return term(t.args[0]) + term(t.args[1]);
    case TermKind::kApply: {
      Value f = term(t.args[0]);
      return u_.apply(t.aux, f, term(t.args[1]));
    }
    case TermKind::kLambda: {
      Value saved = slots_[t.slot];
      std::vector<Value> table;
      for (Value v : u_.all(t.ty->dom)) {
        slots_[t.slot] = v;
        table.push_back(term(t.args[0]));
      }
      slots_[t.slot] = saved;
      return u_.fn_table(t.ty, std::move(table));
    }
    case TermKind::kEmptySeq:
      return u_.seq(t.ty, {});
    case TermKind::kSeqLit: {
      std::vector<Value> items;
      for (const auto& a : t.args) items.push_back(term(a));
      return u_.seq(t.ty, items);
    }
    case TermKind::kLength:
      return static_cast<Value>(u_.elems(t.aux, term(t.args[0])).size());
    case TermKind::kIndex: {
      Value s = term(t.args[0]);
      Value i = term(t.args[1]);
      const auto& items = u_.elems(t.aux, s);
      if (i >= 0 && i < static_cast<Value>(items.size())) return items[static_cast<size_t>(i)];
      return u_.default_value(t.ty);
    }
    case TermKind::kConcat: {
      std::vector<Value> items = u_.elems(t.aux, term(t.args[0]));
      std::vector<Value> rest = u_.elems(t.aux, term(t.args[1]));
      items.insert(items.end(), rest.begin(), rest.end());
      return u_.seq(t.ty, items);
    }
    case TermKind::kInitSeg: {
      std::vector<Value> items = u_.elems(t.aux, term(t.args[0]));
      Value n = term(t.args[1]);
      if (n < static_cast<Value>(items.size())) items.resize(static_cast<size_t>(std::max<Value>(n, 0)));
      return u_.seq(t.ty, items);
    }
    case TermKind::kMax: {
      const auto& items = u_.elems(t.aux, term(t.args[0]));
      Value best = 0;
      for (Value v : items) best = std::max(best, v);
      return best;
    }
    case TermKind::kGridRat:
      return grid_index(t.lit, term(t.args[0]));
  }
  fail(ErrorCode::kEval, "unknown term kind");
}

bool Machine::atom(const CNode& n) {
  const int M = u_.model().M;
  switch (n.pred) {
    case Pred::kEq:
      return term(n.args[0]) == term(n.args[1]);
    case Pred::kLe:
      return term(n.args[0]) <= term(n.args[1]);
    case Pred::kLt:
      return term(n.args[0]) < term(n.args[1]);
    case Pred::kInSeq: {
      Value x = term(n.args[0]);
      const auto& items = u_.elems(n.args[1].ty, term(n.args[1]));
      return std::find(items.begin(), items.end(), x) != items.end();
    }
    case Pred::kInSet: {
      Value x = term(n.args[0]);
      Value s = term(n.args[1]);
      return x >= 0 && x < 63 && ((s >> x) & 1);
    }
    case Pred::kApproxEq: {
      Value d = term(n.args[0]) - term(n.args[1]);
      Value k = term(n.args[2]);
      if (d < 0) d = -d;
      if (k > M) return d == 0;
      return (d << k) <= (Value{1} << M);
    }
    case Pred::kMeasureLeq: {
      Value c = __builtin_popcountll(static_cast<uint64_t>(term(n.args[0])));
      Value k = term(n.args[1]);
      if (k > M) return c == 0;
      return (c << k) <= (Value{1} << M);
    }
    case Pred::kRealLt:
      return term(n.args[0]) < term(n.args[1]);
    case Pred::kRealLe:
      return term(n.args[0]) <= term(n.args[1]);
  }
  return false;
}

}  // namespace stnf::lab
