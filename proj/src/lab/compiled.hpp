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

#ifndef STNF_LAB_COMPILED_HPP_
#define STNF_LAB_COMPILED_HPP_

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stnf/formula.hpp"
#include "stnf/lab.hpp"
#include "type_info.hpp"

namespace stnf::lab {

using Key = unsigned __int128;

struct KeyHash {
  size_t operator()(Key k) const {
    uint64_t a = static_cast<uint64_t>(k), b = static_cast<uint64_t>(k >> 64);
    uint64_t h = a * 0x9E3779B97F4A7C15ull ^ (b + 0x632BE59BD9B4E019ull + (a << 6));
    h ^= h >> 31;
    return static_cast<size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

struct KeySpec {
  bool enabled = false;
  std::vector<int> slots;
  std::vector<int> bits;
};

template <typename V>
struct Memo {
  KeySpec spec;
  std::unordered_map<Key, V, KeyHash> table;
};

struct CTerm {
  TermKind kind = TermKind::kVar;
  int slot = -1;
  TypeInfo* ty = nullptr;   // result type
  TypeInfo* aux = nullptr;  // function or sequence type of the first argument
  int64_t lit = 0;
  std::vector<CTerm> args;

  bool slot_uses(int s) const {
    if (kind == TermKind::kVar) return slot == s;
    for (const auto& a : args)
      if (a.slot_uses(s)) return true;
    return false;
  }
};

struct CNode {
  FormulaKind kind = FormulaKind::kAtom;
  Pred pred = Pred::kEq;
  std::vector<CTerm> args;
  TypeInfo* st_type = nullptr;
  std::vector<std::unique_ptr<CNode>> kids;

  int slot = -1;
  TypeInfo* var_ty = nullptr;
  std::optional<CTerm> guard;
  bool guard_is_set = false;
  bool vectorize = false;
  // 1: only maximal sequences are tried, -1: only the empty sequence.
  int extremal = 0;
  bool pruned_ready = false;
  std::vector<Value> pruned;

  std::vector<bool> dep;
  Memo<bool> memo;
  Memo<Value> mask_memo;

  bool depends(int s) const { return s >= 0 && s < static_cast<int>(dep.size()) && dep[s]; }
};

struct Compiled {
  std::unique_ptr<CNode> root;
  std::vector<std::pair<std::string, Type>> free;
  std::vector<TypeInfo*> slot_types;
  int num_slots = 0;
};

// 1 when `body` can only become truer as the value of `var` grows (by
// inclusion, pointwise for sequence-valued functions), -1 when it can only
// become falser, 0 otherwise.
int monotone_direction(const Formula& body, const std::string& var, const Type& type);

Compiled compile(Universe& u, const Formula& f, bool monotone_pruning);
CTerm compile_term(Universe& u, const Term& t, std::vector<std::pair<std::string, Type>>& free,
                   std::vector<TypeInfo*>& slot_types);

}  // namespace stnf::lab

#endif  // STNF_LAB_COMPILED_HPP_
