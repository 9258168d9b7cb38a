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

#ifndef STNF_LAB_TYPE_INFO_HPP_
#define STNF_LAB_TYPE_INFO_HPP_

#include <map>
#include <unordered_map>
#include <vector>

#include "stnf/model.hpp"
#include "stnf/type.hpp"

namespace stnf {

struct TypeInfo {
  Type type;
  Type::Kind kind;
  TypeInfo* elem = nullptr;
  TypeInfo* dom = nullptr;
  TypeInfo* cod = nullptr;
  bool f1 = false;  // 0 -> 0 realized by the model's F1 family

  bool all_built = false;
  bool std_built = false;
  std::vector<Value> all;
  std::vector<Value> standard;
  // Position of a value in `all`, for sequence and function types.
  std::unordered_map<Value, int64_t> all_pos;

  std::vector<std::vector<Value>> seqs;
  std::map<std::vector<Value>, Value> seq_ids;

  struct Fn {
    bool is_const = false;
    Value c = 0;
    std::vector<Value> table;
    bool standard = false;
  };
  std::vector<Fn> fns;
  std::map<std::vector<Value>, Value> fn_ids;

  explicit TypeInfo(const Type& t) : type(t), kind(t.kind()) {}

  bool interned_kind() const {
    return kind == Type::Kind::kSeq || kind == Type::Kind::kArrow;
  }
};

}  // namespace stnf

#endif  // STNF_LAB_TYPE_INFO_HPP_
