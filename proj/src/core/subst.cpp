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

#include <cctype>

#include "stnf/core.hpp"

namespace stnf {

std::string fresh_name(const std::string& hint,
                       const std::set<std::string>& avoid) {
  if (!avoid.count(hint)) return hint;
  std::string base = hint;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back())))
    base.pop_back();
  if (base.empty()) base = "v";
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

namespace {

void term_names(const Term& t, std::set<std::string>* out) {
  if (t.kind() == TermKind::kVar || t.kind() == TermKind::kLambda)
    out->insert(t.name());
  for (const auto& a : t.args()) term_names(a, out);
}

Term rebuild(const Term& t, std::vector<Term> args) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kNumLit:
    case TermKind::kEmptySeq:
      return t;
    case TermKind::kLambda:
      return Term::lambda(t.name(), t.var_type(), args[0]);
    case TermKind::kApply:
      return Term::apply(args[0], args[1]);
    case TermKind::kAdd:
      return Term::add(args[0], args[1]);
    case TermKind::kSeqLit:
      return Term::seq_lit(t.var_type(), std::move(args));
    case TermKind::kLength:
      return Term::length(args[0]);
    case TermKind::kIndex:
      return Term::index(args[0], args[1]);
    case TermKind::kConcat:
      return Term::concat(args[0], args[1]);
    case TermKind::kInitSeg:
      return Term::init_seg(args[0], args[1]);
    case TermKind::kMax:
      return Term::max(args[0]);
    case TermKind::kGridRat:
      return Term::grid_rat(t.value(), args[0]);
  }
  return t;
}

Term subst_term(const Term& t, const std::string& name, const Term& value,
                const VarMap& value_fv) {
  if (t.kind() == TermKind::kVar) return t.name() == name ? value : t;
  if (t.kind() == TermKind::kLambda) {
    if (t.name() == name) return t;
    Term body = t.arg(0);
    std::string x = t.name();
    if (value_fv.count(x) && occurs_free(name, body)) {
      std::set<std::string> avoid;
      for (const auto& [n, ty] : value_fv) avoid.insert(n);
      term_names(body, &avoid);
      avoid.insert(name);
      std::string y = fresh_name(x, avoid);
      body = substitute(body, x, Term::var(y, t.var_type()));
      x = y;
    }
    return Term::lambda(x, t.var_type(), subst_term(body, name, value, value_fv));
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(subst_term(a, name, value, value_fv));
  return rebuild(t, std::move(args));
}

Formula subst_formula(const Formula& f, const std::string& name,
                      const Term& value, const VarMap& value_fv) {
  switch (f.kind()) {
    case FormulaKind::kAtom: {
      std::vector<Term> args;
      for (const auto& a : f.args()) args.push_back(subst_term(a, name, value, value_fv));
      return Formula::atom(f.pred(), std::move(args));
    }
    case FormulaKind::kSt:
      return Formula::st(subst_term(f.term(), name, value, value_fv));
    case FormulaKind::kNot:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies: {
      Formula out = f;
      for (size_t i = 0; i < f.num_children(); ++i)
        out = out.with_child(i, subst_formula(f.child(i), name, value, value_fv));
      return out;
    }
    default:
      break;
  }
  Binder b = f.binder();
  if (b.guard) b.guard = subst_term(*b.guard, name, value, value_fv);
  Formula body = f.body();
  if (b.name != name) {
    if (value_fv.count(b.name) && occurs_free(name, body)) {
      std::set<std::string> avoid = all_names(body);
      for (const auto& [n, ty] : value_fv) avoid.insert(n);
      avoid.insert(name);
      std::string y = fresh_name(b.name, avoid);
      body = rename_free(body, b.name, y);
      b.name = y;
    }
    body = subst_formula(body, name, value, value_fv);
  }
  return Formula::quant(f.kind(), std::move(b), std::move(body));
}

}  // namespace

Term substitute(const Term& t, const std::string& name, const Term& value) {
  return subst_term(t, name, value, free_vars(value));
}

Formula substitute(const Formula& f, const std::string& name,
                   const Term& value) {
  return subst_formula(f, name, value, free_vars(value));
}

Formula rename_free(const Formula& f, const std::string& from,
                    const std::string& to) {
  if (from == to) return f;
  VarMap fv = free_vars(f);
  auto it = fv.find(from);
  if (it == fv.end()) return f;
  return substitute(f, from, Term::var(to, it->second));
}

}  // namespace stnf
