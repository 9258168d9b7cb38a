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

#include <functional>
#include <set>

#include "internal.hpp"
#include "stnf/dsl.hpp"

namespace stnf {

using detail::Move;
using detail::Path;
using detail::Rewriter;

namespace {

using Finder = std::function<bool(const Formula&)>;

bool find_first(const Formula& f, const Finder& pred, Path* path) {
  if (pred(f)) return true;
  for (size_t i = 0; i < f.num_children(); ++i) {
    path->push_back(static_cast<int>(i));
    if (find_first(f.child(i), pred, path)) return true;
    path->pop_back();
  }
  return false;
}

RewriteResult single(const Formula& f, const Finder& where,
                     const std::function<Move(const Formula&, detail::Names&)>& move,
                     const std::string& what) {
  Path p;
  if (!find_first(f, where, &p)) fail(ErrorCode::kNotApplicable, what + " does not apply");
  Rewriter rw(f);
  rw.apply(p, move(rw.at(p), rw.names()));
  return {rw.root(), rw.derivation()};
}

Formula below(const Formula& f, size_t n) {
  Formula g = f;
  for (size_t i = 0; i < n; ++i) g = g.body();
  return g;
}

bool idealizable(const Formula& f) {
  size_t block = detail::internal_block(f, FormulaKind::kForall);
  if (block == 0) return false;
  Formula inner = below(f, block);
  if (!inner.is(FormulaKind::kExistsSt)) return false;
  size_t m = detail::internal_block(inner, FormulaKind::kExistsSt);
  return is_internal(below(inner, m));
}

}  // namespace

RewriteResult idealize(const Formula& f) {
  return single(
      f, idealizable,
      [](const Formula& g, detail::Names& n) {
        return detail::idealize_block(g, detail::internal_block(g, FormulaKind::kForall), n);
      },
      "idealization");
}

RewriteResult max_collapse(const Formula& f, const std::string& seq_var) {
  if (!seq_var.empty()) {
    return single(
        f,
        [&](const Formula& g) {
          return g.is(FormulaKind::kExistsSt) && g.binder().name == seq_var;
        },
        detail::max_collapse_at, "max-collapse over " + seq_var);
  }
  return single(f, detail::collapsible, detail::max_collapse_at, "max-collapse");
}

RewriteResult herbrandize(const Formula& f) {
  return single(f, detail::nf_with_both_blocks, detail::herbrandize_at, "herbrandization");
}

RewriteResult skolemize_antecedent(const Formula& f) {
  return single(
      f,
      [](const Formula& g) {
        return g.is(FormulaKind::kImplies) && detail::nf_with_both_blocks(g.lhs());
      },
      detail::skolemize_at, "antecedent skolemization");
}

namespace {

bool prenex_step(Rewriter& rw) {
  Path p;
  int which = -1;
  auto where = [&](const Formula& g) {
    if (g.is(FormulaKind::kNot) && g.body().is_st_quantifier()) {
      which = 0;
      return true;
    }
    if (g.is_binary() && (g.lhs().is_st_quantifier() || g.rhs().is_st_quantifier()))
      {
      which = 1;
      return true;
    }
    if (g.is(FormulaKind::kForall) || g.is(FormulaKind::kExists)) {
      size_t b = detail::internal_block(g, g.kind());
      FormulaKind want = g.is(FormulaKind::kForall) ? FormulaKind::kForallSt
                                                    : FormulaKind::kExistsSt;
      if (below(g, b).is(want)) {
      which = 2;
      return true;
    }
    }
    return false;
  };
  if (!find_first(rw.root(), where, &p)) return false;
  Formula g = rw.at(p);
  if (which == 0) {
    rw.apply(p, detail::push_negation(g, rw.names()));
  } else if (which == 1) {
    rw.apply(p, detail::pull(g, g.lhs().is_st_quantifier() ? 0 : 1, rw.names()));
  } else {
    rw.apply(p, detail::swap_out(g, detail::internal_block(g, g.kind()), rw.names()));
  }
  return true;
}

}  // namespace

RewriteResult prenex_st(const Formula& f) {
  Rewriter rw(f);
  while (prenex_step(rw)) {
  }
  return {rw.root(), rw.derivation()};
}

NormalizeResult normalize(const Formula& f) {
  ClassifyResult c = classify(f);
  if (c.nf) return {*c.nf, Derivation(f)};
  Rewriter rw(f);
  detail::normalize_at(rw, {});
  ClassifyResult out = classify(rw.root());
  if (!out.nf)
    fail(ErrorCode::kStuck, "normalization ended outside normal form: " + to_sexp(rw.root()));
  return {*out.nf, rw.derivation()};
}

RewriteResult eliminate_nonstandard_param(const Formula& f) {
  bool ok = f.is(FormulaKind::kForall) && f.body().is(FormulaKind::kImplies);
  if (ok) {
    const Formula& hyp = f.body().lhs();
    ok = hyp.is(FormulaKind::kNot) && hyp.body().is(FormulaKind::kSt) &&
         hyp.body().term().is_var(f.binder().name) &&
         classify(f.body().rhs()).nf.has_value();
  }
  if (!ok)
    fail(ErrorCode::kNotApplicable, "not of the form (forall M)[not st(M) -> normal form]");
  NormalizeResult r = normalize(f);
  return {r.derivation.output(), r.derivation};
}

RewriteResult negate_normal_form(const Formula& f) {
  bool ok = false;
  if (f.is(FormulaKind::kNot)) {
    ok = classify(f.body()).nf.has_value();
  } else {
    StPrefix p = split_st_prefix(f);
    size_t i = 0;
    while (i < p.binders.size() && !p.binders[i].first) ++i;
    while (i < p.binders.size() && p.binders[i].first) ++i;
    while (i < p.binders.size() && !p.binders[i].first) ++i;
    ok = i == p.binders.size() && is_internal(p.rest);
  }
  if (!ok)
    fail(ErrorCode::kNotApplicable,
         "expected (exists-st u)(forall-st z)(exists-st w) phi or a negated normal form");
  NormalizeResult r = normalize(f);
  return {r.derivation.output(), r.derivation};
}

namespace {

struct PropertySubst {
  const std::string& set_var;
  const Formula& property;
  const std::string& hole;

  Formula at(const Term& t) const { return substitute(property, hole, t); }

  Formula run(const Formula& f) const {
    switch (f.kind()) {
      case FormulaKind::kAtom:
        if (f.pred() == Pred::kInSet && f.args()[1].is_var(set_var)) return at(f.args()[0]);
        for (const auto& t : f.args())
          if (occurs_free(set_var, t))
            fail(ErrorCode::kUnsupportedShape,
                 set_var + " used outside membership in " + to_sexp(f));
        return f;
      case FormulaKind::kSt:
        return f;
      case FormulaKind::kNot:
        return Formula::neg(run(f.body()));
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
      case FormulaKind::kImplies:
        return f.with_child(0, run(f.lhs())).with_child(1, run(f.rhs()));
      default:
        break;
    }
    Binder b = f.binder();
    if (b.name == set_var) return f;
    Formula body = run(f.body());
    if (b.guard && b.guard->is_var(set_var)) {
      Term x = Term::var(b.name, b.type);
      bool all = f.is(FormulaKind::kForall) || f.is(FormulaKind::kForallSt);
      body = all ? Formula::implies(at(x), body) : Formula::conj(at(x), body);
      b.guard.reset();
    }
    return Formula::quant(f.kind(), b, body);
  }
};

}  // namespace

RewriteResult substitute_property(const Formula& f, const std::string& set_var,
                                  const Formula& property,
                                  const std::string& hole) {
  VarMap fv = free_vars(f);
  auto it = fv.find(set_var);
  if (it != fv.end() && it->second != Type::set())
    fail(ErrorCode::kHoleTypeMismatch, set_var + " is not a grid set");
  VarMap pv = free_vars(property);
  auto h = pv.find(hole);
  if (h != pv.end() && h->second != Type::real())
    fail(ErrorCode::kHoleTypeMismatch,
         "hole " + hole + " has type " + h->second.str() + ", expected real");
  Formula out = PropertySubst{set_var, property, hole}.run(f);
  std::set<std::string> avoid = all_names(f);
  for (const auto& n : all_names(property)) avoid.insert(n);
  Term x = Term::var(fresh_name("x", avoid), Type::real());
  Formula px = substitute(property, hole, x);
  Formula in = Formula::atom(Pred::kInSet, {x, Term::var(set_var, Type::set())});
  Formula defines = Formula::forall(
      Binder{x.name(), Type::real(), std::nullopt},
      Formula::conj(Formula::implies(in, px), Formula::implies(px, in)));
  Derivation d(f);
  d.steps.push_back(Step{Rule::kSubstituteProperty, f, out,
                         {"replaces membership in " + set_var + " by the property"},
                         {defines}});
  return {out, d};
}

}  // namespace stnf
