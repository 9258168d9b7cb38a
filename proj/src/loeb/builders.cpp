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

#include "stnf/loeb.hpp"

namespace stnf {

namespace {

const Type kR = Type::real();
const Type kN = Type::base();
const Type kS = Type::set();

Term nat(const std::string& n) { return Term::var(n, kN); }
Term pt(const std::string& n) { return Term::var(n, kR); }
Term gset(const std::string& n) { return Term::var(n, kS); }

bool neg_nf_shape(const Formula& f) {
  StPrefix p = split_st_prefix(f);
  size_t i = 0;
  while (i < p.binders.size() && !p.binders[i].first) ++i;
  while (i < p.binders.size() && p.binders[i].first) ++i;
  while (i < p.binders.size() && !p.binders[i].first) ++i;
  return i == p.binders.size() && is_internal(p.rest);
}

}  // namespace

PointProperty PointProperty::explicit_set(std::string set_var) {
  PointProperty p;
  p.set_var_ = std::move(set_var);
  p.hole_ = "a";
  return p;
}

PointProperty PointProperty::formula(Formula f, std::string hole) {
  VarMap fv = free_vars(f);
  auto it = fv.find(hole);
  if (it != fv.end() && it->second != kR)
    fail(ErrorCode::kHoleTypeMismatch,
         "hole " + hole + " has type " + it->second.str() + ", expected real");
  bool ok = classify(f).nf.has_value() || neg_nf_shape(f) ||
            (f.is(FormulaKind::kNot) && classify(f.body()).nf.has_value());
  if (!ok)
    fail(ErrorCode::kUnsupportedShape,
         "property is neither a normal form nor the negation of one");
  PointProperty p;
  p.prop_ = std::move(f);
  p.hole_ = std::move(hole);
  return p;
}

Formula PointProperty::member(const Term& x) const {
  if (prop_) return substitute(*prop_, hole_, x);
  return Formula::atom(Pred::kInSet, {x, gset(set_var_)});
}

PointProperty PointProperty::negated() const {
  return formula(Formula::neg(member(pt(hole_))), hole_);
}

Formula approx(const Term& a, const Term& b, const std::string& n) {
  return Formula::forall_st(Binder(n, kN), Formula::atom(Pred::kApproxEq, {a, b, nat(n)}));
}

Formula not_approx(const Term& a, const Term& b, const std::string& n) {
  return Formula::neg(approx(a, b, n));
}

Formula almost_leq(const Term& a, const Term& b, const std::string& n) {
  return Formula::disj(Formula::atom(Pred::kRealLt, {a, b}), approx(a, b, n));
}

Formula grid_measure_atom(const Term& b, const Term& k) {
  return Formula::atom(Pred::kMeasureLeq, {b, k});
}

Formula measure_zero(const Term& b, const std::string& k) {
  return Formula::forall_st(Binder(k, kN), grid_measure_atom(b, nat(k)));
}

PointSet grid_set(const Term& d) {
  return PointSet{
      [d](const Term& x) { return Formula::atom(Pred::kInSet, {x, d}); },
      [d](const Term& x) { return Formula::neg(Formula::atom(Pred::kInSet, {x, d})); }};
}

Formula almost_subset_formula(const Term& c, const PointSet& d,
                              const std::string& e_set, const std::string& e) {
  Term ev = pt(e);
  Term es = gset(e_set);
  Formula sub = Formula::forall(
      Binder(e, kR, es),
      Formula::conj(Formula::atom(Pred::kInSet, {ev, c}), d.non_member(ev)));
  return Formula::forall(Binder(e_set, kS), Formula::implies(sub, measure_zero(es)));
}

namespace {

Binder std_point(const PointProperty& a, const std::string& name) {
  if (a.is_set()) return Binder(name, kR, gset(a.set_var()));
  return Binder(name, kR);
}

Formula with_prop(const PointProperty& a, const Term& x, Formula f, bool universal) {
  if (a.is_set()) return f;
  return universal ? Formula::implies(a.member(x), f) : Formula::conj(a.member(x), f);
}

// (exists-st a, c)(a <~ b <~ c and (forall-st d)(a <= d <= c -> d in A))
Formula preimage2_body(const Term& b, const PointProperty& a) {
  Term av = pt("a");
  Term cv = pt("c");
  Term dv = pt("d");
  Formula interval = Formula::conj(Formula::atom(Pred::kRealLe, {av, dv}),
                                   Formula::atom(Pred::kRealLe, {dv, cv}));
  Formula inside = Formula::forall_st(Binder("d", kR), Formula::implies(interval, a.member(dv)));
  return Formula::conj(Formula::conj(almost_leq(av, b), almost_leq(b, cv)), inside);
}

}  // namespace

Formula st_preimage_membership(const Term& b, const PointProperty& a) {
  Term av = pt("a");
  return Formula::exists_st(std_point(a, "a"), with_prop(a, av, approx(av, b), false));
}

Formula st_preimage2_membership(const Term& b, const PointProperty& a) {
  return Formula::exists_st(Binder("a", kR),
                            Formula::exists_st(Binder("c", kR), preimage2_body(b, a)));
}

PointSet st_preimage(const PointProperty& a, LoebVariant v) {
  if (v == LoebVariant::kFirst) {
    return PointSet{
        [a](const Term& b) { return st_preimage_membership(b, a); },
        [a](const Term& b) {
          Term av = pt("a");
          return Formula::forall_st(std_point(a, "a"),
                                    with_prop(a, av, not_approx(av, b), true));
        }};
  }
  return PointSet{
      [a](const Term& b) { return st_preimage2_membership(b, a); },
      [a](const Term& b) {
        return Formula::forall_st(
            Binder("a", kR),
            Formula::forall_st(Binder("c", kR), Formula::neg(preimage2_body(b, a))));
      }};
}

Formula a0_template(const Term& a, const Term& e_set, const Term& b, const Term& l) {
  Term ev = pt("e");
  return Formula::forall(
      Binder("e", kR, e_set),
      Formula::conj(Formula::atom(Pred::kInSet, {ev, b}),
                    Formula::neg(Formula::atom(Pred::kApproxEq, {a, ev, l}))));
}

Formula b0_template(const Term& b_set, const Term& k, const Term& g,
                    const Term& b, const PointProperty& a) {
  Term av = pt("a");
  Term es = gset("E");
  Formula inner = Formula::implies(a0_template(av, es, b_set, Term::apply(g, av)),
                                   grid_measure_atom(es, k));
  Formula body = Formula::conj(a.member(av), inner);
  return Formula::forall(Binder("E", kS),
                         Formula::exists(Binder("a", kR, b), body));
}

Formula loeb_zero_formula(const PointProperty& a, LoebVariant v) {
  Term bs = gset("B");
  return Formula::forall(
      Binder("B", kS),
      Formula::implies(almost_subset_formula(bs, st_preimage(a, v)), measure_zero(bs, "k'")));
}

NormalizeResult loeb_zero_normal_form(const PointProperty& a, LoebVariant v) {
  return normalize(loeb_zero_formula(a, v));
}

Formula almost_everywhere_formula(const PointProperty& p, LoebVariant v) {
  return loeb_zero_formula(p.negated(), v);
}

}  // namespace stnf
