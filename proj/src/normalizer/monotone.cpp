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

#include "stnf/dsl.hpp"
#include "stnf/normalizer.hpp"

namespace stnf {

namespace {

struct Monotone {
  const std::string& var;
  std::string offending;

  bool reject(const std::string& what) {
    offending = what;
    return false;
  }

  bool mentions(const Term& t) const { return occurs_free(var, t); }

  bool atom(const Formula& f, bool positive) {
    const auto& a = f.args();
    auto exact = [&](size_t i) { return a[i].is_var(var); };
    auto clean_except = [&](size_t i) {
      for (size_t j = 0; j < a.size(); ++j)
        if (j != i && mentions(a[j])) return false;
      return true;
    };
    bool any = false;
    for (const auto& t : a) any = any || mentions(t);
    if (!any) return true;
    switch (f.pred()) {
      case Pred::kApproxEq:
        if (exact(2) && clean_except(2) && !positive) return true;
        break;
      case Pred::kMeasureLeq:
        if (exact(1) && clean_except(1) && !positive) return true;
        break;
      case Pred::kLe:
      case Pred::kLt:
        if (exact(1) && clean_except(1) && positive) return true;
        if (exact(0) && clean_except(0) && !positive) return true;
        break;
      case Pred::kInSeq:
        if (exact(1) && clean_except(1) && positive) return true;
        break;
      default:
        break;
    }
    return reject(to_sexp(f));
  }

  bool walk(const Formula& f, bool positive) {
    switch (f.kind()) {
      case FormulaKind::kAtom:
        return atom(f, positive);
      case FormulaKind::kSt:
        if (mentions(f.term())) return reject(to_sexp(f));
        return true;
      case FormulaKind::kNot:
        return walk(f.body(), !positive);
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        return walk(f.lhs(), positive) && walk(f.rhs(), positive);
      case FormulaKind::kImplies:
        return walk(f.lhs(), !positive) && walk(f.rhs(), positive);
      default:
        break;
    }
    const Binder& b = f.binder();
    if (b.guard && mentions(*b.guard)) {
      bool ex = f.is(FormulaKind::kExists) || f.is(FormulaKind::kExistsSt);
      bool ok = b.guard->is_var(var) && (ex == positive);
      if (!ok) return reject(to_sexp(*b.guard) + " bounding " + b.name);
    }
    if (b.name == var) return true;
    return walk(f.body(), positive);
  }
};

}  // namespace

bool monotone_in(const Formula& f, const std::string& var,
                 std::string* offending) {
  Monotone m{var, {}};
  bool ok = m.walk(f, true);
  if (!ok && offending) *offending = m.offending;
  return ok;
}

}  // namespace stnf
