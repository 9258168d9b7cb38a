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
#include <cstdlib>

#include "sexp.hpp"
#include "stnf/dsl.hpp"

namespace stnf {

namespace {

[[noreturn]] void syntax(const Sexp& s, const std::string& what) {
  fail(ErrorCode::kSyntax, what + " at " + s.where());
}

bool is_integer(const std::string& a) {
  if (a.empty()) return false;
  size_t i = (a[0] == '-') ? 1 : 0;
  if (i == a.size()) return false;
  for (; i < a.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(a[i]))) return false;
  return true;
}

bool is_identifier(const std::string& a) {
  if (a.empty() || is_integer(a)) return false;
  if (!std::isalpha(static_cast<unsigned char>(a[0])) && a[0] != '_') return false;
  for (char c : a)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
      return false;
  return true;
}

Type read_type(const Sexp& s) {
  if (!s.is_list) {
    if (s.atom == "0") return Type::base();
    if (s.atom == "real") return Type::real();
    if (s.atom == "set") return Type::set();
    syntax(s, "unknown type '" + s.atom + "'");
  }
  if (s.items.empty()) syntax(s, "empty type");
  const Sexp& head = s.items[0];
  if (head.is_atom("->")) {
    if (s.items.size() < 3) syntax(s, "function type needs a domain and a codomain");
    Type out = read_type(s.items.back());
    for (size_t i = s.items.size() - 1; i-- > 1;)
      out = Type::arrow(read_type(s.items[i]), out);
    return out;
  }
  if (head.is_atom("*")) {
    if (s.items.size() != 2) syntax(s, "sequence type takes one element type");
    return Type::seq(read_type(s.items[1]));
  }
  syntax(s, "unknown type constructor");
}

class Parser {
 public:
  explicit Parser(Context ctx) : ctx_(std::move(ctx)) {}

  Term term(const Sexp& s) {
    if (!s.is_list) {
      if (is_integer(s.atom)) return Term::num(std::strtoll(s.atom.c_str(), nullptr, 10));
      if (!is_identifier(s.atom)) syntax(s, "bad token '" + s.atom + "'");
      auto it = ctx_.find(s.atom);
      if (it == ctx_.end())
        fail(ErrorCode::kType, "undeclared variable '" + s.atom + "' at " + s.where());
      return Term::var(s.atom, it->second);
    }
    if (s.items.empty()) syntax(s, "empty term");
    const Sexp& head = s.items[0];
    size_t n = s.items.size() - 1;
    auto need = [&](size_t k) {
      if (n != k) syntax(s, "'" + head.atom + "' takes " + std::to_string(k) + " arguments");
    };
    if (!head.is_list) {
      const std::string& h = head.atom;
      if (h == "lambda") {
        need(2);
        Binder b = binder(s.items[1], false);
        Context saved = ctx_;
        ctx_[b.name] = b.type;
        Term body = term(s.items[2]);
        ctx_ = saved;
        return checked(s, Term::lambda(b.name, b.type, body));
      }
      if (h == "+") {
        need(2);
        return checked(s, Term::add(term(s.items[1]), term(s.items[2])));
      }
      if (h == "empty") {
        need(1);
        return Term::empty_seq(read_type(s.items[1]));
      }
      if (h == "seq") {
        if (n < 1) syntax(s, "'seq' needs an element type");
        std::vector<Term> elems;
        for (size_t i = 2; i < s.items.size(); ++i) elems.push_back(term(s.items[i]));
        return checked(s, Term::seq_lit(read_type(s.items[1]), std::move(elems)));
      }
      if (h == "len") {
        need(1);
        return checked(s, Term::length(term(s.items[1])));
      }
      if (h == "at") {
        need(2);
        return checked(s, Term::index(term(s.items[1]), term(s.items[2])));
      }
      if (h == "concat") {
        need(2);
        return checked(s, Term::concat(term(s.items[1]), term(s.items[2])));
      }
      if (h == "init") {
        need(2);
        return checked(s, Term::init_seg(term(s.items[1]), term(s.items[2])));
      }
      if (h == "max") {
        need(1);
        return checked(s, Term::max(term(s.items[1])));
      }
      if (h == "grid") {
        need(2);
        if (s.items[1].is_list || !is_integer(s.items[1].atom))
          syntax(s.items[1], "grid numerator must be an integer literal");
        Term t = Term::grid_rat(std::strtoll(s.items[1].atom.c_str(), nullptr, 10),
                                term(s.items[2]));
        typecheck(t, ctx_);
        return t;
      }
    }
    size_t first = head.is_atom("app") ? 1 : 0;
    if (s.items.size() - first < 2) syntax(s, "application needs an argument");
    Term fn = term(s.items[first]);
    for (size_t i = first + 1; i < s.items.size(); ++i)
      fn = checked(s, Term::apply(fn, term(s.items[i])));
    return fn;
  }

  Formula formula(const Sexp& s) {
    if (!s.is_list || s.items.empty() || s.items[0].is_list)
      syntax(s, "expected a formula");
    const std::string& h = s.items[0].atom;
    size_t n = s.items.size() - 1;
    auto need = [&](size_t k) {
      if (n != k) syntax(s, "'" + h + "' takes " + std::to_string(k) + " arguments");
    };
    auto terms = [&]() {
      std::vector<Term> out;
      for (size_t i = 1; i < s.items.size(); ++i) out.push_back(term(s.items[i]));
      return out;
    };
    static const std::pair<const char*, Pred> kPreds[] = {
        {"=", Pred::kEq},           {"<=", Pred::kLe},
        {"<", Pred::kLt},           {"approx-eq", Pred::kApproxEq},
        {"measure<=", Pred::kMeasureLeq}, {"real<", Pred::kRealLt},
        {"real<=", Pred::kRealLe},
    };
    for (const auto& [name, pred] : kPreds) {
      if (h == name) {
        Formula f = Formula::atom(pred, terms());
        return checked(f);
      }
    }
    if (h == "in") {
      need(2);
      Term x = term(s.items[1]);
      Term c = term(s.items[2]);
      Pred p = c.type().kind() == Type::Kind::kSet ? Pred::kInSet : Pred::kInSeq;
      return checked(Formula::atom(p, {x, c}));
    }
    if (h == "st") {
      need(1);
      return Formula::st(term(s.items[1]));
    }
    if (h == "not") {
      need(1);
      return Formula::neg(formula(s.items[1]));
    }
    if (h == "and" || h == "or") {
      if (n < 2) syntax(s, "'" + h + "' needs at least two operands");
      Formula out = formula(s.items.back());
      for (size_t i = s.items.size() - 1; i-- > 1;) {
        Formula l = formula(s.items[i]);
        out = h == "and" ? Formula::conj(l, out) : Formula::disj(l, out);
      }
      return out;
    }
    if (h == "implies") {
      need(2);
      return Formula::implies(formula(s.items[1]), formula(s.items[2]));
    }
    FormulaKind qk;
    if (quantifier_kind(h, &qk)) {
      if (n < 2) syntax(s, "quantifier needs a binder and a body");
      return quantifier(s, qk, 1);
    }
    if (h == "approx" || h == "napprox") {
      need(2);
      Term a = term(s.items[1]);
      Term b = term(s.items[2]);
      Formula f = approx(a, b);
      return h == "approx" ? f : Formula::neg(f);
    }
    if (h == "almost-leq") {
      need(2);
      Term a = term(s.items[1]);
      Term b = term(s.items[2]);
      return Formula::disj(checked(Formula::atom(Pred::kRealLt, {a, b})), approx(a, b));
    }
    if (h == "measure-zero") {
      need(1);
      Term b = term(s.items[1]);
      std::string k = fresh_name("k", names_of({b}));
      return Formula::forall_st(
          Binder(k, Type::base()),
          checked(Formula::atom(Pred::kMeasureLeq, {b, Term::var(k, Type::base())})));
    }
    if (h == "eq" || h == "neq") {
      need(2);
      Formula f = ext_eq(term(s.items[1]), term(s.items[2]));
      return h == "eq" ? f : Formula::neg(f);
    }
    syntax(s.items[0], "unknown formula head '" + h + "'");
  }

  Binder binder(const Sexp& s, bool allow_guard) {
    if (!s.is_list || s.items.size() < 2 || s.items[0].is_list ||
        !is_identifier(s.items[0].atom))
      syntax(s, "expected a binder (name type)");
    Binder b(s.items[0].atom, read_type(s.items[1]));
    if (s.items.size() == 2) return b;
    if (!allow_guard || s.items.size() != 4 || !s.items[2].is_atom(":in"))
      syntax(s, "malformed binder");
    b.guard = term(s.items[3]);
    return b;
  }

  const Context& ctx() const { return ctx_; }

 private:
  static bool quantifier_kind(const std::string& h, FormulaKind* k) {
    if (h == "forall") *k = FormulaKind::kForall;
    else if (h == "exists") *k = FormulaKind::kExists;
    else if (h == "forall-st") *k = FormulaKind::kForallSt;
    else if (h == "exists-st") *k = FormulaKind::kExistsSt;
    else return false;
    return true;
  }

  Formula quantifier(const Sexp& s, FormulaKind k, size_t i) {
    if (i + 1 == s.items.size()) return formula(s.items[i]);
    Binder b = binder(s.items[i], true);
    Context saved = ctx_;
    ctx_[b.name] = b.type;
    Formula body = quantifier(s, k, i + 1);
    ctx_ = saved;
    return checked(Formula::quant(k, std::move(b), std::move(body)));
  }

  static std::set<std::string> names_of(const std::vector<Term>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts)
      for (const auto& [n, ty] : free_vars(t)) out.insert(n);
    return out;
  }

  Formula approx(const Term& a, const Term& b) {
    std::string n = fresh_name("n", names_of({a, b}));
    return Formula::forall_st(
        Binder(n, Type::base()),
        checked(Formula::atom(Pred::kApproxEq, {a, b, Term::var(n, Type::base())})));
  }

  Formula ext_eq(const Term& a, const Term& b) {
    Type t = a.type();
    if (t != b.type())
      fail(ErrorCode::kType, "equality between " + t.str() + " and " + b.type().str());
    if (!t.is_arrow()) return Formula::atom(Pred::kEq, {a, b});
    std::string z = fresh_name("z", names_of({a, b}));
    Term zv = Term::var(z, t.dom());
    return Formula::forall(Binder(z, t.dom()),
                           ext_eq(Term::apply(a, zv), Term::apply(b, zv)));
  }

  Term checked(const Sexp& s, Term t) {
    try {
      t.type();
    } catch (const Error& e) {
      fail(ErrorCode::kType, std::string(e.what()) + " at " + s.where());
    }
    return t;
  }

  Formula checked(Formula f) {
    typecheck(f, ctx_);
    return f;
  }

  Context ctx_;
};

}  // namespace

Type parse_type(std::string_view text) {
  SexpFile file = read_sexps(text);
  if (file.forms.size() != 1) fail(ErrorCode::kSyntax, "expected exactly one type");
  return read_type(file.forms[0]);
}

Term parse_term(std::string_view text, const Context& ctx) {
  SexpFile file = read_sexps(text);
  if (file.forms.size() != 1) fail(ErrorCode::kSyntax, "expected exactly one term");
  return Parser(ctx).term(file.forms[0]);
}

ParsedFile parse_file(std::string_view text) {
  SexpFile file = read_sexps(text);
  Context ctx;
  size_t i = 0;
  for (; i < file.forms.size(); ++i) {
    const Sexp& s = file.forms[i];
    if (!s.is_list || s.items.empty() || !s.items[0].is_atom("declare")) break;
    Parser p(ctx);
    for (size_t j = 1; j < s.items.size(); ++j) {
      Binder b = p.binder(s.items[j], false);
      ctx[b.name] = b.type;
    }
  }
  if (i + 1 != file.forms.size()) {
    if (i == file.forms.size()) fail(ErrorCode::kSyntax, "no formula found");
    fail(ErrorCode::kSyntax, "trailing input at " + file.forms[i + 1].where());
  }
  Parser p(ctx);
  Formula f = p.formula(file.forms[i]);
  typecheck(f, ctx);
  return ParsedFile{f, ctx, std::move(file.comments)};
}

Formula parse_formula(std::string_view text, const Context& ctx) {
  SexpFile file = read_sexps(text);
  if (file.forms.empty()) fail(ErrorCode::kSyntax, "no formula found");
  if (file.forms.size() == 1) {
    Formula f = Parser(ctx).formula(file.forms[0]);
    typecheck(f, ctx);
    return f;
  }
  return parse_file(text).formula;
}

}  // namespace stnf
