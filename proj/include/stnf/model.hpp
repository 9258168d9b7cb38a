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

#ifndef STNF_MODEL_HPP_
#define STNF_MODEL_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "stnf/serialize.hpp"

namespace stnf {

using Value = int64_t;

// Finite threshold model: numbers 0..N with standard part 0..s, the grid
// {i/2^M : 0 <= i <= 2^M} whose standard points are the multiples of
// 2^-s, sequences of length at most L, and an explicit family F1 of
// functions 0 -> 0 with a designated standard subfamily.
struct FiniteModel {
  int N = 8;
  int s = 2;
  int M = 3;
  int L = 4;
  std::vector<std::vector<int64_t>> F1;
  std::vector<size_t> F1_standard;

  static FiniteModel from_json(const Json& j);
  Json to_json() const;
  // Throws Error(kInvalidModel).
  void validate() const;

  int64_t grid_size() const { return (int64_t{1} << M) + 1; }
  int64_t std_grid_step() const { return int64_t{1} << (M - s); }
  int64_t std_grid_points() const { return (int64_t{1} << s) + 1; }
  // Every standard number and standard grid point fits into one standard
  // sequence.
  bool standard_closed() const;
};

// Default enumeration budget, overridden by the STNF_BUDGET variable.
uint64_t default_budget();

struct TypeInfo;

// Interned values of every type over one model.
class Universe {
 public:
  Universe(FiniteModel m, uint64_t budget);
  ~Universe();
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  const FiniteModel& model() const { return model_; }
  uint64_t budget() const { return budget_; }

  TypeInfo* info(const Type& t);

  // Carriers; throw Error(kSortTooLarge) past the budget.
  const std::vector<Value>& all(TypeInfo* t);
  const std::vector<Value>& standard(TypeInfo* t);

  bool is_standard(TypeInfo* t, Value v);
  Value default_value(TypeInfo* t);

  Value seq(TypeInfo* t, const std::vector<Value>& elems);
  const std::vector<Value>& elems(TypeInfo* t, Value id) const;

  Value fn_const(TypeInfo* t, Value c);
  // Table indexed by the positions of the domain carrier.
  Value fn_table(TypeInfo* t, std::vector<Value> table);
  Value apply(TypeInfo* t, Value f, Value arg);
  // Number of interned values so far, for sequence and function types.
  size_t interned(TypeInfo* t) const;

  Json to_json(TypeInfo* t, Value v);
  Value from_json(TypeInfo* t, const Json& j);

 private:
  void build_all(TypeInfo* t);
  void build_standard(TypeInfo* t);
  std::vector<Value> const_pool(TypeInfo* t, bool standard_only);

  FiniteModel model_;
  uint64_t budget_;
  std::map<std::string, std::unique_ptr<TypeInfo>> types_;
};

using Env = std::map<std::string, Value>;

}  // namespace stnf

#endif  // STNF_MODEL_HPP_
