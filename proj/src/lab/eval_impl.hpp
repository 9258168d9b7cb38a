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

#ifndef STNF_LAB_EVAL_IMPL_HPP_
#define STNF_LAB_EVAL_IMPL_HPP_

#include <unordered_map>
#include <vector>

#include "compiled.hpp"

namespace stnf::lab {

using Bits = std::vector<uint64_t>;

class Machine {
 public:
  Machine(Universe& u, Compiled c);

  const Compiled& compiled() const { return c_; }
  std::vector<Value>& slots() { return slots_; }
  bool run() { return eval(*c_.root); }
  Value term(const CTerm& t);

  void set_limit(uint64_t l) { limit_ = l; }
  uint64_t steps() const { return steps_; }
  void clear_memo();

 private:
  static constexpr size_t kMaxEntries = size_t{1} << 23;

  void collect(CNode& n);
  void tick();
  bool make_key(const KeySpec& spec, Key& key) const;
  void note_entry();
  Value grid_index(int64_t num, Value scale) const;

  bool eval(CNode& n);
  bool atom(const CNode& n);
  bool quant(CNode& n);
  bool quant_loop(CNode& n);
  const std::vector<Value>& domain(CNode& n, bool st);
  std::vector<Value> extremal_values(TypeInfo* t, bool st, bool largest);

  // Truth of `n` for every value of the set-sorted slot x at once.
  void vec(CNode& n, int x, Bits& out);
  void vec_atom(CNode& n, int x, Bits& out);
  void vec_quant(CNode& n, int x, Bits& out);
  void vec_fallback(CNode& n, int x, Bits& out);
  Value guard_mask(CNode& n);
  void fill(Bits& b, bool v) const;
  bool all_ones(const Bits& b) const;
  bool all_zero(const Bits& b) const;
  void invert(Bits& b) const;
  const Bits& subset_table(uint64_t mask);
  const Bits& member_table(Value point);
  const Bits& size_table(Value max_count);

  Universe& u_;
  Compiled c_;
  std::vector<Value> slots_;
  std::vector<CNode*> nodes_;
  size_t entries_ = 0;
  uint64_t steps_ = 0;
  uint64_t limit_ = 0;

  int grid_ = 0;
  uint64_t nbits_ = 0;
  size_t words_ = 0;
  std::unordered_map<uint64_t, Bits> subset_cache_;
  std::unordered_map<Value, Bits> member_cache_;
  std::unordered_map<Value, Bits> size_cache_;
};

}  // namespace stnf::lab

#endif  // STNF_LAB_EVAL_IMPL_HPP_
