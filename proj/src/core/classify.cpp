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

#include "stnf/core.hpp"

namespace stnf {

StPrefix split_st_prefix(const Formula& f) {
  StPrefix out{{}, f};
  while (out.rest.is_st_quantifier()) {
    out.binders.emplace_back(out.rest.is(FormulaKind::kForallSt),
                             out.rest.binder());
    out.rest = out.rest.body();
  }
  return out;
}

ClassifyResult classify(const Formula& f) {
  if (is_internal(f))
    return {Classification::kInternal, NormalForm{{}, {}, f}};
  StPrefix p = split_st_prefix(f);
  if (!is_internal(p.rest)) return {Classification::kExternalOther, std::nullopt};
  NormalForm nf{{}, {}, p.rest};
  size_t i = 0;
  for (; i < p.binders.size() && p.binders[i].first; ++i)
    nf.univ.push_back(p.binders[i].second);
  for (; i < p.binders.size() && !p.binders[i].first; ++i)
    nf.exist.push_back(p.binders[i].second);
  if (i != p.binders.size()) return {Classification::kExternalOther, std::nullopt};
  return {Classification::kNormalForm, std::move(nf)};
}

Formula NormalForm::render() const {
  Formula out = matrix;
  for (size_t i = exist.size(); i-- > 0;) out = Formula::exists_st(exist[i], out);
  for (size_t i = univ.size(); i-- > 0;) out = Formula::forall_st(univ[i], out);
  return out;
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::kInternal: return "internal";
    case Classification::kNormalForm: return "normal-form";
    case Classification::kExternalOther: return "external-other";
  }
  return "?";
}

}  // namespace stnf
