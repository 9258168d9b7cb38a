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

#include "stnf/error.hpp"
#include "stnf/model.hpp"
#include "type_info.hpp"

namespace stnf {

namespace {

uint64_t subsets_up_to(uint64_t n, uint64_t L, uint64_t cap) {
  uint64_t total = 0, c = 1;
  for (uint64_t l = 0; l <= std::min(n, L); ++l) {
    total += c;
    if (total > cap) return cap + 1;
    c = c * (n - l) / (l + 1);
  }
  return total;
}

}  // namespace

Universe::Universe(FiniteModel m, uint64_t budget) : model_(std::move(m)), budget_(budget) {
  model_.validate();
}

Universe::~Universe() = default;

TypeInfo* Universe::info(const Type& t) {
  std::string key = t.str();
  auto it = types_.find(key);
  if (it != types_.end()) return it->second.get();
  auto owned = std::make_unique<TypeInfo>(t);
  TypeInfo* ti = owned.get();
  if (t.is_seq()) ti->elem = info(t.elem());
  if (t.is_arrow()) {
    ti->dom = info(t.dom());
    ti->cod = info(t.cod());
    ti->f1 = t.dom().is_base() && t.cod().is_base() && !model_.F1.empty();
  }
  types_.emplace(key, std::move(owned));
  if (ti->f1) {
    for (const auto& f : model_.F1) fn_table(ti, f);
    for (size_t i : model_.F1_standard)
      ti->fns[fn_table(ti, model_.F1[i])].standard = true;
  }
  return ti;
}

const std::vector<Value>& Universe::all(TypeInfo* t) {
  if (!t->all_built) build_all(t);
  return t->all;
}

const std::vector<Value>& Universe::standard(TypeInfo* t) {
  if (!t->std_built) build_standard(t);
  return t->standard;
}

namespace {

void canonical_seqs(Universe& u, TypeInfo* t, const std::vector<Value>& base, int L,
                    std::vector<Value>& out) {
  std::vector<Value> cur;
  size_t n = base.size();
  for (size_t len = 0; len <= std::min<size_t>(n, L); ++len) {
    std::vector<size_t> idx(len);
    for (size_t i = 0; i < len; ++i) idx[i] = i;
    while (true) {
      cur.clear();
      for (size_t i : idx) cur.push_back(base[i]);
      out.push_back(u.seq(t, cur));
      size_t k = len;
      while (k > 0 && idx[k - 1] == n - len + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t i = k; i < len; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace

void Universe::build_all(TypeInfo* t) {
  std::vector<Value> out;
  switch (t->kind) {
    case Type::Kind::kBase:
      for (Value v = 0; v <= model_.N; ++v) out.push_back(v);
      break;
    case Type::Kind::kReal:
      for (Value v = 0; v < model_.grid_size(); ++v) out.push_back(v);
      break;
    case Type::Kind::kSet: {
      int64_t bits = model_.grid_size();
      if (bits > 40 || (uint64_t{1} << bits) > budget_)
        fail(ErrorCode::kSortTooLarge, "set sort has 2^" + std::to_string(bits) +
                                           " elements, over budget");
      for (Value v = 0; v < (Value{1} << bits); ++v) out.push_back(v);
      break;
    }
    case Type::Kind::kSeq: {
      const auto& base = all(t->elem);
      if (subsets_up_to(base.size(), model_.L, budget_) > budget_)
        fail(ErrorCode::kSortTooLarge, "sequence sort " + t->type.str() + " over budget");
      canonical_seqs(*this, t, base, model_.L, out);
      break;
    }
    case Type::Kind::kArrow:
      if (t->f1) {
        for (const auto& f : model_.F1) {
          Value id = fn_table(t, f);
          if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
        }
      } else {
        out = const_pool(t, false);
      }
      break;
  }
  t->all = std::move(out);
  if (t->interned_kind())
    for (size_t i = 0; i < t->all.size(); ++i) t->all_pos[t->all[i]] = static_cast<int64_t>(i);
  t->all_built = true;
}

void Universe::build_standard(TypeInfo* t) {
  std::vector<Value> out;
  switch (t->kind) {
    case Type::Kind::kBase:
      for (Value v = 0; v <= model_.s; ++v) out.push_back(v);
      break;
    case Type::Kind::kReal:
      for (Value v = 0; v < model_.grid_size(); v += model_.std_grid_step()) out.push_back(v);
      break;
    case Type::Kind::kSet:
      out = {0, (Value{1} << model_.grid_size()) - 1};
      break;
    case Type::Kind::kSeq:
      canonical_seqs(*this, t, standard(t->elem), model_.L, out);
      break;
    case Type::Kind::kArrow:
      if (t->f1) {
        for (size_t i : model_.F1_standard) {
          Value id = fn_table(t, model_.F1[i]);
          if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
        }
      } else {
        out = const_pool(t, true);
      }
      break;
  }
  t->standard = std::move(out);
  t->std_built = true;
}

std::vector<Value> Universe::const_pool(TypeInfo* t, bool standard_only) {
  const auto& pool = standard_only ? standard(t->cod) : all(t->cod);
  if (pool.size() > budget_)
    fail(ErrorCode::kSortTooLarge, "function sort " + t->type.str() + " over budget");
  std::vector<Value> out;
  for (Value c : pool) out.push_back(fn_const(t, c));
  return out;
}

bool Universe::is_standard(TypeInfo* t, Value v) {
  switch (t->kind) {
    case Type::Kind::kBase:
      return v >= 0 && v <= model_.s;
    case Type::Kind::kReal:
      return v % model_.std_grid_step() == 0;
    case Type::Kind::kSet:
      return v == 0 || v == (Value{1} << model_.grid_size()) - 1;
    case Type::Kind::kSeq:
      for (Value e : t->seqs[v])
        if (!is_standard(t->elem, e)) return false;
      return true;
    case Type::Kind::kArrow:
      return t->fns[v].standard;
  }
  return false;
}

Value Universe::default_value(TypeInfo* t) {
  if (t->kind == Type::Kind::kSeq) return seq(t, {});
  if (t->kind == Type::Kind::kArrow && t->f1)
    return fn_table(t, std::vector<Value>(static_cast<size_t>(model_.N) + 1, 0));
  if (t->kind == Type::Kind::kArrow) return fn_const(t, default_value(t->cod));
  return 0;
}

Value Universe::seq(TypeInfo* t, const std::vector<Value>& elems) {
  auto it = t->seq_ids.find(elems);
  if (it != t->seq_ids.end()) return it->second;
  Value id = static_cast<Value>(t->seqs.size());
  t->seqs.push_back(elems);
  t->seq_ids.emplace(elems, id);
  return id;
}

const std::vector<Value>& Universe::elems(TypeInfo* t, Value id) const {
  return t->seqs.at(static_cast<size_t>(id));
}

Value Universe::fn_const(TypeInfo* t, Value c) {
  std::vector<Value> key{0, c};
  auto it = t->fn_ids.find(key);
  if (it != t->fn_ids.end()) return it->second;
  Value id = static_cast<Value>(t->fns.size());
  TypeInfo::Fn fn;
  fn.is_const = true;
  fn.c = c;
  fn.standard = !t->f1 && is_standard(t->cod, c);
  t->fns.push_back(fn);
  t->fn_ids.emplace(std::move(key), id);
  return id;
}

Value Universe::fn_table(TypeInfo* t, std::vector<Value> table) {
  if (!table.empty() &&
      std::all_of(table.begin(), table.end(), [&](Value v) { return v == table[0]; }))
    if (!t->f1) return fn_const(t, table[0]);
  std::vector<Value> key{1};
  key.insert(key.end(), table.begin(), table.end());
  auto it = t->fn_ids.find(key);
  if (it != t->fn_ids.end()) return it->second;
  Value id = static_cast<Value>(t->fns.size());
  TypeInfo::Fn fn;
  fn.table = std::move(table);
  t->fns.push_back(std::move(fn));
  t->fn_ids.emplace(std::move(key), id);
  return id;
}

Value Universe::apply(TypeInfo* t, Value f, Value arg) {
  const TypeInfo::Fn& fn = t->fns[static_cast<size_t>(f)];
  if (fn.is_const) return fn.c;
  int64_t pos = -1;
  if (t->dom->interned_kind()) {
    all(t->dom);
    auto it = t->dom->all_pos.find(arg);
    if (it != t->dom->all_pos.end()) pos = it->second;
  } else {
    pos = arg;
  }
  if (pos < 0 || pos >= static_cast<int64_t>(fn.table.size())) return default_value(t->cod);
  return fn.table[static_cast<size_t>(pos)];
}

size_t Universe::interned(TypeInfo* t) const {
  if (t->kind == Type::Kind::kSeq) return t->seqs.size();
  if (t->kind == Type::Kind::kArrow) return t->fns.size();
  return 0;
}

}  // namespace stnf
