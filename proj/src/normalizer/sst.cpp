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

#include "internal.hpp"

namespace stnf {

std::optional<Formula> s_st_translate(const Formula& f) {
  StPrefix p = split_st_prefix(f);
  if (!is_internal(p.rest)) return std::nullopt;
  detail::Names names;
  names.add(f);
  Formula cur = p.rest;
  for (size_t i = p.binders.size(); i-- > 0;) {
    const auto& [all, b] = p.binders[i];
    if (all || !cur.is(FormulaKind::kForallSt)) {
      cur = Formula::quant(all ? FormulaKind::kForallSt : FormulaKind::kExistsSt, b, cur);
      continue;
    }
    if (detail::nf_with_both_blocks(cur)) cur = detail::herbrandize_at(cur, names).out;
    cur = detail::dual_collapse_at(Formula::exists_st(b, cur), names).out;
  }
  return cur;
}

bool s_st_fixed_point_check(const Formula& f) {
  std::optional<Formula> t = s_st_translate(f);
  return t && alpha_equiv(*t, f);
}

}  // namespace stnf
