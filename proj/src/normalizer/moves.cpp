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

#include "internal.hpp"
#include "stnf/dsl.hpp"

namespace stnf {
namespace detail {

namespace {

FormulaKind dual(FormulaKind k) {
  switch (k) {
    case FormulaKind::kForall: return FormulaKind::kExists;
    case FormulaKind::kExists: return FormulaKind::kForall;
    case FormulaKind::kForallSt: return FormulaKind::kExistsSt;
    case FormulaKind::kExistsSt: return FormulaKind::kForallSt;
    default: fail(ErrorCode::kUsage, "dual of a non-quantifier");
  }
}

Term var_of(const Binder& b) { return Term::var(b.name, b.type); }

std::vector<Term> vars_of(const std::vector<Binder>& bs) {
  std::vector<Term> out;
  for (const auto& b : bs) out.push_back(var_of(b));
  return out;
}

std::vector<Type> types_of(const std::vector<Binder>& bs) {
  std::vector<Type> out;
  for (const auto& b : bs) out.push_back(b.type);
  return out;
}

Formula nonempty(const Binder& b, Names& names) {
  Binder w(names.fresh(b.name), b.type, b.guard);
  return Formula::exists_st(w, guard_atom(var_of(w), *b.guard));
}

std::string guard_note(const Binder& b) {
  return "the bound " + to_sexp(*b.guard) + " of " + b.name +
         " has a standard element";
}

// Peels consecutive quantifiers of one kind.
std::vector<Binder> peel(const Formula& f, FormulaKind kind, Formula* rest) {
  std::vector<Binder> out;
  Formula g = f;
  while (g.is(kind)) {
    out.push_back(g.binder());
    g = g.body();
  }
  *rest = g;
  return out;
}

Formula wrap(FormulaKind kind, const std::vector<Binder>& bs, Formula body) {
  for (size_t i = bs.size(); i-- > 0;) body = Formula::quant(kind, bs[i], body);
  return body;
}

std::string upper_hint(const std::string& name) {
  if (name.size() == 1 && std::islower(static_cast<unsigned char>(name[0])))
    return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))));
  return "w";
}

}  // namespace

Formula ext_eq(const Term& a, const Term& b, Names& names) {
  Type t = a.type();
  if (!t.is_arrow()) return Formula::atom(Pred::kEq, {a, b});
  std::string z = names.fresh("z");
  Term zv = Term::var(z, t.dom());
  return Formula::forall(Binder(z, t.dom()),
                         ext_eq(Term::apply(a, zv), Term::apply(b, zv), names));
}

Move push_negation(const Formula& f, Names& names) {
  const Formula& g = f.body();
  switch (g.kind()) {
    case FormulaKind::kNot:
      return {g.body(), Rule::kClassicalPrenex, {}, {}};
    case FormulaKind::kAnd:
      return {Formula::disj(Formula::neg(g.lhs()), Formula::neg(g.rhs())),
              Rule::kClassicalPrenex, {}, {}};
    case FormulaKind::kOr:
      return {Formula::conj(Formula::neg(g.lhs()), Formula::neg(g.rhs())),
              Rule::kClassicalPrenex, {}, {}};
    case FormulaKind::kImplies:
      return {Formula::conj(g.lhs(), Formula::neg(g.rhs())), Rule::kClassicalPrenex, {}, {}};
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return {Formula::quant(dual(g.kind()), g.binder(), Formula::neg(g.body())),
              Rule::kClassicalPrenex, {}, {}};
    case FormulaKind::kForallSt:
    case FormulaKind::kExistsSt:
      return {Formula::quant(dual(g.kind()), g.binder(), Formula::neg(g.body())),
              Rule::kPrenexSt, {}, {}};
    case FormulaKind::kSt:
      return unfold_st(f, names);
    case FormulaKind::kAtom:
      break;
  }
  fail(ErrorCode::kNotApplicable, "negation of an internal formula");
}

Move unfold_st(const Formula& f, Names& names) {
  bool negated = f.is(FormulaKind::kNot);
  const Term& t = negated ? f.body().term() : f.term();
  Type ty = t.type();
  Binder r(names.fresh(negated ? "r" : "y"), ty);
  std::vector<std::string> side = {"st(t) is read as (exists-st y)(y = t)"};
  if (negated) {
    return {Formula::forall_st(r, Formula::neg(ext_eq(t, var_of(r), names))),
            Rule::kElimNonstandardParam, side, {}};
  }
  return {Formula::exists_st(r, ext_eq(var_of(r), t, names)),
          Rule::kElimNonstandardParam, side, {}};
}

Move pull(const Formula& f, int side, Names& names) {
  size_t s = static_cast<size_t>(side);
  const Formula& q = f.child(s);
  if (!q.is_st_quantifier())
    fail(ErrorCode::kNotApplicable, "no st quantifier to pull in " + to_sexp(f));
  Binder b = q.binder();
  Formula body = q.body();
  const Formula& other = f.child(1 - s);
  if (occurs_free(b.name, other)) {
    std::string n = names.fresh(b.name);
    body = rename_free(body, b.name, n);
    b.name = n;
  }
  FormulaKind orig = q.kind();
  bool all = orig == FormulaKind::kForallSt;
  bool antecedent = f.is(FormulaKind::kImplies) && side == 0;
  FormulaKind k = antecedent ? dual(orig) : orig;
  bool needs = false;
  if (b.guard) {
    if (f.is(FormulaKind::kAnd)) needs = all;
    if (f.is(FormulaKind::kOr)) needs = !all;
    if (f.is(FormulaKind::kImplies)) needs = antecedent ? all : !all;
  }
  Move m{Formula::quant(k, b, f.with_child(s, body)), Rule::kPrenexSt, {}, {}};
  if (needs) {
    m.side.push_back(guard_note(b));
    m.assumptions.push_back(nonempty(b, names));
  }
  return m;
}

size_t internal_block(const Formula& f, FormulaKind kind) {
  size_t n = 0;
  const Formula* g = &f;
  while (g->is(kind)) {
    ++n;
    g = &g->body();
  }
  return n;
}

Move swap_out(const Formula& f, size_t block, Names& names) {
  std::vector<Binder> zs;
  std::vector<FormulaKind> kinds;
  Formula inner = f;
  for (size_t i = 0; i < block; ++i) {
    zs.push_back(inner.binder());
    kinds.push_back(inner.kind());
    inner = inner.body();
  }
  if (!inner.is_st_quantifier())
    fail(ErrorCode::kNotApplicable, "no st quantifier below the block");
  Binder b = inner.binder();
  Formula body = inner.body();
  bool clash = false;
  for (const auto& z : zs) {
    if (b.guard && occurs_free(z.name, *b.guard))
      fail(ErrorCode::kStuck, "bound of " + b.name + " depends on " + z.name +
                                  " in " + to_sexp(f));
    if (z.name == b.name || (z.guard && occurs_free(b.name, *z.guard))) clash = true;
  }
  if (clash) {
    std::string n = names.fresh(b.name);
    body = rename_free(body, b.name, n);
    b.name = n;
  }
  for (size_t i = block; i-- > 0;) body = Formula::quant(kinds[i], zs[i], body);
  return {Formula::quant(inner.kind(), b, body), Rule::kPrenexSt, {}, {}};
}

Move idealize_block(const Formula& f, size_t block, Names& names) {
  std::vector<Binder> zs;
  Formula inner = f;
  for (size_t i = 0; i < block; ++i) {
    if (!inner.is(FormulaKind::kForall))
      fail(ErrorCode::kNotApplicable, "idealization needs internal universals");
    zs.push_back(inner.binder());
    inner = inner.body();
  }
  Formula phi = inner;
  std::vector<Binder> ys = peel(inner, FormulaKind::kExistsSt, &phi);
  if (ys.empty() || zs.empty())
    fail(ErrorCode::kNotApplicable, "not of the form (forall z)(exists-st y) phi");
  if (!is_internal(phi))
    fail(ErrorCode::kNotApplicable, "matrix is not internal in " + to_sexp(f));
  std::vector<Binder> ws;
  for (const auto& y : ys) {
    std::string hint = ys.size() == 1 ? upper_hint(y.name) : "w";
    if (names.used.count(hint)) hint = "w";
    ws.emplace_back(names.fresh(hint), Type::seq(y.type));
  }
  Formula body = phi;
  for (size_t j = ys.size(); j-- > 0;) {
    if (ys[j].guard) body = Formula::conj(guard_atom(var_of(ys[j]), *ys[j].guard), body);
    body = Formula::exists(Binder(ys[j].name, ys[j].type, var_of(ws[j])), body);
  }
  body = wrap(FormulaKind::kForall, zs, body);
  return {wrap(FormulaKind::kExistsSt, ws, body), Rule::kIdealize, {}, {}};
}

bool collapsible(const Formula& f) {
  if (!f.is(FormulaKind::kExistsSt)) return false;
  const Binder& b = f.binder();
  return !b.guard && b.type.is_seq() && b.type.elem().is_base();
}

namespace {

struct Collapser {
  const std::string& seq;
  Term l;
  int hits = 0;

  Formula run(const Formula& f, bool positive) {
    auto check_terms = [&](const std::vector<Term>& ts) {
      for (const auto& t : ts)
        if (occurs_free(seq, t))
          fail(ErrorCode::kNotMonotone,
               seq + " occurs outside a bounded existential in " + to_sexp(f));
    };
    switch (f.kind()) {
      case FormulaKind::kAtom:
      case FormulaKind::kSt:
        check_terms(f.args());
        return f;
      case FormulaKind::kNot:
        return Formula::neg(run(f.body(), !positive));
      case FormulaKind::kAnd:
        return Formula::conj(run(f.lhs(), positive), run(f.rhs(), positive));
      case FormulaKind::kOr:
        return Formula::disj(run(f.lhs(), positive), run(f.rhs(), positive));
      case FormulaKind::kImplies:
        return Formula::implies(run(f.lhs(), !positive), run(f.rhs(), positive));
      default:
        break;
    }
    const Binder& b = f.binder();
    if (b.guard && b.guard->is_var(seq) && f.is(FormulaKind::kExists)) {
      if (!positive)
        fail(ErrorCode::kNotMonotone,
             "bounded existential over " + seq + " in negative position");
      std::string bad;
      if (!monotone_in(f.body(), b.name, &bad))
        fail(ErrorCode::kNotMonotone, b.name + " is not upward monotone: " + bad);
      ++hits;
      return run(substitute(f.body(), b.name, l), positive);
    }
    if (b.guard) check_terms({*b.guard});
    if (b.name == seq) return f;
    return Formula::quant(f.kind(), b, run(f.body(), positive));
  }
};

}  // namespace

Move max_collapse_at(const Formula& f, Names& names) {
  if (!collapsible(f))
    fail(ErrorCode::kNotApplicable,
         "max-collapse needs (exists-st K) with K a sequence of numbers");
  const std::string& seq = f.binder().name;
  Binder lb(names.fresh("l"), Type::base());
  Collapser c{seq, Term::var(lb.name, lb.type)};
  Formula body = c.run(f.body(), true);
  if (c.hits == 0)
    fail(ErrorCode::kNotApplicable, "no bounded existential over " + seq);
  return {Formula::exists_st(lb, body), Rule::kMaxCollapse, {}, {}};
}

bool nf_with_both_blocks(const Formula& f) {
  Formula rest = f;
  auto xs = peel(f, FormulaKind::kForallSt, &rest);
  Formula phi = rest;
  auto ys = peel(rest, FormulaKind::kExistsSt, &phi);
  return !xs.empty() && !ys.empty() && is_internal(phi);
}

Move herbrandize_at(const Formula& f, Names& names) {
  if (!nf_with_both_blocks(f))
    fail(ErrorCode::kNotApplicable, "not of the form (forall-st x)(exists-st y) phi");
  Formula rest = f;
  auto xs = peel(f, FormulaKind::kForallSt, &rest);
  Formula phi = rest;
  auto ys = peel(rest, FormulaKind::kExistsSt, &phi);
  std::vector<Type> xt = types_of(xs);
  std::vector<Term> xv = vars_of(xs);
  std::vector<Binder> fs;
  for (const auto& y : ys)
    fs.emplace_back(names.fresh("G"), Type::curried(xt.begin(), xt.end(), Type::seq(y.type)));
  Formula body = phi;
  for (size_t j = ys.size(); j-- > 0;) {
    if (ys[j].guard) body = Formula::conj(guard_atom(var_of(ys[j]), *ys[j].guard), body);
    body = Formula::exists(
        Binder(ys[j].name, ys[j].type, Term::apply(var_of(fs[j]), xv)), body);
  }
  body = wrap(FormulaKind::kForallSt, xs, body);
  return {wrap(FormulaKind::kExistsSt, fs, body), Rule::kHerbrandize, {}, {}};
}

Move skolemize_at(const Formula& f, Names& names) {
  if (!f.is(FormulaKind::kImplies) || !nf_with_both_blocks(f.lhs()))
    fail(ErrorCode::kNotApplicable,
         "antecedent is not of the form (forall-st x)(exists-st y) phi");
  Formula rest = f.lhs();
  auto xs = peel(f.lhs(), FormulaKind::kForallSt, &rest);
  Formula phi = rest;
  auto ys = peel(rest, FormulaKind::kExistsSt, &phi);
  std::vector<Type> xt = types_of(xs);
  std::vector<Term> xv = vars_of(xs);
  bool even = names.skolem_count++ % 2 == 0;
  std::vector<Binder> gs;
  std::vector<bool> single;
  for (const auto& y : ys) {
    bool s = !y.guard && (y.type.is_base() || y.type.is_seq()) && monotone_in(phi, y.name);
    single.push_back(s);
    std::string hint = even ? "g" : "h";
    if (!s) hint = even ? "G" : "H";
    Type cod = s ? y.type : Type::seq(y.type);
    gs.emplace_back(names.fresh(hint), Type::curried(xt.begin(), xt.end(), cod));
  }
  Formula body = phi;
  for (size_t j = ys.size(); j-- > 0;) {
    Term app = Term::apply(var_of(gs[j]), xv);
    if (single[j]) {
      body = substitute(body, ys[j].name, app);
      continue;
    }
    if (ys[j].guard) body = Formula::conj(guard_atom(var_of(ys[j]), *ys[j].guard), body);
    body = Formula::exists(Binder(ys[j].name, ys[j].type, app), body);
  }
  body = wrap(FormulaKind::kForallSt, xs, body);
  Formula out = wrap(FormulaKind::kForallSt, gs, Formula::implies(body, f.rhs()));
  return {out, Rule::kSkolemizeAntecedent, {}, {}};
}

Move dual_collapse_at(const Formula& f, Names& names) {
  Formula rest = f;
  auto xs = peel(f, FormulaKind::kExistsSt, &rest);
  Formula psi = rest;
  auto us = peel(rest, FormulaKind::kForallSt, &psi);
  if (xs.empty() || us.empty() || !is_internal(psi))
    fail(ErrorCode::kNotApplicable,
         "not of the form (exists-st x)(forall-st u) psi with psi internal");
  std::vector<Type> xt = types_of(xs);
  std::vector<Term> xv = vars_of(xs);
  std::vector<Binder> zs;
  for (const auto& u : us)
    zs.emplace_back(names.fresh("Z"), Type::curried(xt.begin(), xt.end(), Type::seq(u.type)));
  Formula body = psi;
  for (size_t i = us.size(); i-- > 0;) {
    if (us[i].guard)
      body = Formula::implies(guard_atom(var_of(us[i]), *us[i].guard), body);
    body = Formula::forall(Binder(us[i].name, us[i].type, Term::apply(var_of(zs[i]), xv)),
                           body);
  }
  body = wrap(FormulaKind::kExistsSt, xs, body);
  return {wrap(FormulaKind::kForallSt, zs, body), Rule::kNegateNF, {}, {}};
}

}  // namespace detail
}  // namespace stnf
