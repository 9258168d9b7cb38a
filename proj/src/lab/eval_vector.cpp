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

void Machine::fill(Bits& b, bool v) const {
  b.assign(words_, v ? ~uint64_t{0} : 0);
  if (v && nbits_ < 64) b[0] = (uint64_t{1} << nbits_) - 1;
}

bool Machine::all_ones(const Bits& b) const {
  if (nbits_ < 64) return b[0] == (uint64_t{1} << nbits_) - 1;
  return std::all_of(b.begin(), b.end(), [](uint64_t w) { return w == ~uint64_t{0}; });
}

bool Machine::all_zero(const Bits& b) const {
  return std::all_of(b.begin(), b.end(), [](uint64_t w) { return w == 0; });
}

void Machine::invert(Bits& b) const {
  for (auto& w : b) w = ~w;
  if (nbits_ < 64) b[0] &= (uint64_t{1} << nbits_) - 1;
}

const Bits& Machine::subset_table(uint64_t mask) {
  auto it = subset_cache_.find(mask);
  if (it != subset_cache_.end()) return it->second;
  if (subset_cache_.size() > 4096) subset_cache_.clear();
  Bits b(words_, 0);
  for (uint64_t x = 0; x < nbits_; ++x)
    if ((x & ~mask) == 0) b[x >> 6] |= uint64_t{1} << (x & 63);
  return subset_cache_.emplace(mask, std::move(b)).first->second;
}

const Bits& Machine::member_table(Value point) {
  auto it = member_cache_.find(point);
  if (it != member_cache_.end()) return it->second;
  Bits b(words_, 0);
  if (point >= 0 && point < grid_)
    for (uint64_t x = 0; x < nbits_; ++x)
      if ((x >> point) & 1) b[x >> 6] |= uint64_t{1} << (x & 63);
  return member_cache_.emplace(point, std::move(b)).first->second;
}

const Bits& Machine::size_table(Value max_count) {
  auto it = size_cache_.find(max_count);
  if (it != size_cache_.end()) return it->second;
  Bits b(words_, 0);
  for (uint64_t x = 0; x < nbits_; ++x)
    if (__builtin_popcountll(x) <= max_count) b[x >> 6] |= uint64_t{1} << (x & 63);
  return size_cache_.emplace(max_count, std::move(b)).first->second;
}

void Machine::vec(CNode& n, int x, Bits& out) {
  if (!n.depends(x)) {
    fill(out, eval(n));
    return;
  }
  switch (n.kind) {
    case FormulaKind::kAtom:
      vec_atom(n, x, out);
      return;
    case FormulaKind::kNot:
      vec(*n.kids[0], x, out);
      invert(out);
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies: {
      vec(*n.kids[0], x, out);
      if (n.kind == FormulaKind::kImplies) invert(out);
      if (n.kind == FormulaKind::kAnd ? all_zero(out) : all_ones(out)) return;
      Bits r;
      vec(*n.kids[1], x, r);
      for (size_t i = 0; i < words_; ++i)
        out[i] = n.kind == FormulaKind::kAnd ? (out[i] & r[i]) : (out[i] | r[i]);
      return;
    }
    case FormulaKind::kSt:
      vec_fallback(n, x, out);
      return;
    default:
      vec_quant(n, x, out);
      return;
  }
}

void Machine::vec_atom(CNode& n, int x, Bits& out) {
  auto is_x = [&](const CTerm& t) { return t.kind == TermKind::kVar && t.slot == x; };
  const int M = u_.model().M;
  if (n.pred == Pred::kInSet && is_x(n.args[1]) && !n.args[0].slot_uses(x)) {
    out = member_table(term(n.args[0]));
    return;
  }
  if (n.pred == Pred::kMeasureLeq && is_x(n.args[0]) && !n.args[1].slot_uses(x)) {
    Value k = term(n.args[1]);
    out = size_table(k > M ? 0 : (Value{1} << (M - k)));
    return;
  }
  if (n.pred == Pred::kEq && (is_x(n.args[0]) || is_x(n.args[1]))) {
    const CTerm& other = is_x(n.args[0]) ? n.args[1] : n.args[0];
    if (!other.slot_uses(x)) {
      Value v = term(other);
      fill(out, false);
      if (v >= 0 && static_cast<uint64_t>(v) < nbits_) out[v >> 6] |= uint64_t{1} << (v & 63);
      return;
    }
  }
  vec_fallback(n, x, out);
}

void Machine::vec_fallback(CNode& n, int x, Bits& out) {
  fill(out, false);
  Value saved = slots_[x];
  for (uint64_t v = 0; v < nbits_; ++v) {
    tick();
    slots_[x] = static_cast<Value>(v);
    if (eval(n)) out[v >> 6] |= uint64_t{1} << (v & 63);
  }
  slots_[x] = saved;
}

Value Machine::guard_mask(CNode& n) {
  Key key;
  bool keyed = make_key(n.mask_memo.spec, key);
  if (keyed) {
    auto it = n.mask_memo.table.find(key);
    if (it != n.mask_memo.table.end()) return it->second;
  }
  const bool universal = n.kind == FormulaKind::kForall || n.kind == FormulaKind::kForallSt;
  const bool st = n.kind == FormulaKind::kForallSt || n.kind == FormulaKind::kExistsSt;
  Value saved = slots_[n.slot];
  Value mask = 0;
  for (Value p = 0; p < grid_; ++p) {
    bool std_ok = !st || u_.is_standard(n.var_ty, p);
    bool good;
    if (!std_ok) {
      good = universal;
    } else {
      tick();
      slots_[n.slot] = p;
      good = eval(*n.kids[0]);
    }
    if (good) mask |= Value{1} << p;
  }
  slots_[n.slot] = saved;
  if (keyed) {
    n.mask_memo.table.emplace(key, mask);
    note_entry();
  }
  return mask;
}

void Machine::vec_quant(CNode& n, int x, Bits& out) {
  const bool universal = n.kind == FormulaKind::kForall || n.kind == FormulaKind::kForallSt;
  const bool st = n.kind == FormulaKind::kForallSt || n.kind == FormulaKind::kExistsSt;
  CNode& body = *n.kids[0];
  uint64_t full = (uint64_t{1} << grid_) - 1;
  if (n.guard && n.guard_is_set && n.guard->kind == TermKind::kVar && n.guard->slot == x) {
    if (!body.depends(x)) {
      uint64_t mask = static_cast<uint64_t>(guard_mask(n));
      if (universal) {
        out = subset_table(mask);
      } else {
        out = subset_table(full & ~mask);
        invert(out);
      }
      return;
    }
    fill(out, universal);
    Value saved = slots_[n.slot];
    Bits r;
    for (Value p = 0; p < grid_; ++p) {
      if (st && !u_.is_standard(n.var_ty, p)) continue;
      tick();
      slots_[n.slot] = p;
      vec(body, x, r);
      const Bits& in = member_table(p);
      for (size_t i = 0; i < words_; ++i)
        out[i] = universal ? (out[i] & (~in[i] | r[i])) : (out[i] | (in[i] & r[i]));
    }
    slots_[n.slot] = saved;
    if (nbits_ < 64) out[0] &= (uint64_t{1} << nbits_) - 1;
    return;
  }
  if (n.guard && n.guard->slot_uses(x)) {
    vec_fallback(n, x, out);
    return;
  }
  std::vector<Value> dom;
  if (n.guard) {
    Value g = term(*n.guard);
    if (n.guard_is_set) {
      for (Value p = 0; p < grid_; ++p)
        if ((g >> p) & 1) dom.push_back(p);
    } else {
      dom = u_.elems(n.guard->ty, g);
    }
    if (st) {
      std::vector<Value> kept;
      for (Value v : dom)
        if (u_.is_standard(n.var_ty, v)) kept.push_back(v);
      dom.swap(kept);
    }
  } else {
    dom = domain(n, st);
  }
  fill(out, universal);
  Value saved = slots_[n.slot];
  Bits r;
  for (Value v : dom) {
    tick();
    slots_[n.slot] = v;
    vec(body, x, r);
    for (size_t i = 0; i < words_; ++i) out[i] = universal ? (out[i] & r[i]) : (out[i] | r[i]);
    if (universal ? all_zero(out) : all_ones(out)) break;
  }
  slots_[n.slot] = saved;
}

}  // namespace stnf::lab
