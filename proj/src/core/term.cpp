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

#include "stnf/term.hpp"

#include "stnf/error.hpp"

namespace stnf {

struct Term::Node {
  TermKind kind;
  std::string name;
  Type type;
  int64_t value = 0;
  std::vector<Term> args;
};

namespace {

std::shared_ptr<Term::Node> make(TermKind k) {
  auto n = std::make_shared<Term::Node>();
  n->kind = k;
  return n;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::kType, what); }

}  // namespace

Term Term::var(std::string name, Type type) {
  auto n = make(TermKind::kVar);
  n->name = std::move(name);
  n->type = std::move(type);
  return Term(n);
}

Term Term::lambda(std::string name, Type var_type, Term body) {
  auto n = make(TermKind::kLambda);
  n->name = std::move(name);
  n->type = std::move(var_type);
  n->args = {std::move(body)};
  return Term(n);
}

Term Term::apply(Term fn, Term arg) {
  auto n = make(TermKind::kApply);
  n->args = {std::move(fn), std::move(arg)};
  return Term(n);
}

Term Term::apply(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = apply(fn, a);
  return fn;
}

Term Term::num(int64_t value) {
  auto n = make(TermKind::kNumLit);
  n->value = value;
  return Term(n);
}

Term Term::add(Term a, Term b) {
  auto n = make(TermKind::kAdd);
  n->args = {std::move(a), std::move(b)};
  return Term(n);
}

Term Term::empty_seq(Type elem) {
  auto n = make(TermKind::kEmptySeq);
  n->type = std::move(elem);
  return Term(n);
}

Term Term::seq_lit(Type elem, std::vector<Term> elems) {
  auto n = make(TermKind::kSeqLit);
  n->type = std::move(elem);
  n->args = std::move(elems);
  return Term(n);
}

Term Term::length(Term s) {
  auto n = make(TermKind::kLength);
  n->args = {std::move(s)};
  return Term(n);
}

Term Term::index(Term s, Term i) {
  auto n = make(TermKind::kIndex);
  n->args = {std::move(s), std::move(i)};
  return Term(n);
}

Term Term::concat(Term a, Term b) {
  auto n = make(TermKind::kConcat);
  n->args = {std::move(a), std::move(b)};
  return Term(n);
}

Term Term::init_seg(Term s, Term len) {
  auto n = make(TermKind::kInitSeg);
  n->args = {std::move(s), std::move(len)};
  return Term(n);
}

Term Term::max(Term s) {
  auto n = make(TermKind::kMax);
  n->args = {std::move(s)};
  return Term(n);
}

Term Term::grid_rat(int64_t numerator, Term scale) {
  auto n = make(TermKind::kGridRat);
  n->value = numerator;
  n->args = {std::move(scale)};
  return Term(n);
}

TermKind Term::kind() const { return node_->kind; }

bool Term::is_var(const std::string& name) const {
  return node_->kind == TermKind::kVar && node_->name == name;
}

const std::string& Term::name() const { return node_->name; }
const Type& Term::var_type() const { return node_->type; }
int64_t Term::value() const { return node_->value; }
const std::vector<Term>& Term::args() const { return node_->args; }

Type Term::type() const {
  const auto& a = node_->args;
  switch (node_->kind) {
    case TermKind::kVar:
      return node_->type;
    case TermKind::kLambda:
      return Type::arrow(node_->type, a[0].type());
    case TermKind::kApply: {
      Type f = a[0].type();
      if (!f.is_arrow()) bad("application of non-function of type " + f.str());
      Type x = a[1].type();
      if (f.dom() != x)
        bad("argument of type " + x.str() + " where " + f.dom().str() +
            " expected");
      return f.cod();
    }
    case TermKind::kNumLit:
      return Type::base();
    case TermKind::kAdd:
      if (!a[0].type().is_base() || !a[1].type().is_base())
        bad("addition of non-numbers");
      return Type::base();
    case TermKind::kEmptySeq:
      return Type::seq(node_->type);
    case TermKind::kSeqLit:
      for (const auto& e : a)
        if (e.type() != node_->type)
          bad("sequence literal element of type " + e.type().str() +
              " in sequence of " + node_->type.str());
      return Type::seq(node_->type);
    case TermKind::kLength:
      if (!a[0].type().is_seq()) bad("length of non-sequence");
      return Type::base();
    case TermKind::kIndex: {
      Type s = a[0].type();
      if (!s.is_seq()) bad("index into non-sequence of type " + s.str());
      if (!a[1].type().is_base()) bad("non-numeric sequence index");
      return s.elem();
    }
    case TermKind::kConcat: {
      Type s = a[0].type();
      if (!s.is_seq() || s != a[1].type()) bad("concatenation of mismatched sequences");
      return s;
    }
    case TermKind::kInitSeg: {
      Type s = a[0].type();
      if (!s.is_seq()) bad("initial segment of non-sequence");
      if (!a[1].type().is_base()) bad("non-numeric initial segment length");
      return s;
    }
    case TermKind::kMax: {
      Type s = a[0].type();
      if (!s.is_seq() || !s.elem().is_base()) bad("max of non-numeric sequence");
      return Type::base();
    }
    case TermKind::kGridRat:
      if (!a[0].type().is_base()) bad("non-numeric grid scale");
      return Type::real();
  }
  bad("unknown term");
}

bool Term::same(const Term& other) const {
  if (node_ == other.node_) return true;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.kind != y.kind || x.name != y.name || x.value != y.value ||
      x.args.size() != y.args.size())
    return false;
  switch (x.kind) {
    case TermKind::kVar:
    case TermKind::kLambda:
    case TermKind::kEmptySeq:
    case TermKind::kSeqLit:
      if (x.type != y.type) return false;
      break;
    default:
      break;
  }
  for (size_t i = 0; i < x.args.size(); ++i)
    if (!x.args[i].same(y.args[i])) return false;
  return true;
}

namespace {

void collect(const Term& t, std::vector<std::string>& bound, VarMap* out) {
  switch (t.kind()) {
    case TermKind::kVar:
      for (const auto& b : bound)
        if (b == t.name()) return;
      out->emplace(t.name(), t.var_type());
      return;
    case TermKind::kLambda:
      bound.push_back(t.name());
      collect(t.arg(0), bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& a : t.args()) collect(a, bound, out);
  }
}

}  // namespace

void collect_free_vars(const Term& t, VarMap* out) {
  std::vector<std::string> bound;
  collect(t, bound, out);
}

VarMap free_vars(const Term& t) {
  VarMap m;
  collect_free_vars(t, &m);
  return m;
}

bool occurs_free(const std::string& name, const Term& t) {
  return free_vars(t).count(name) > 0;
}

}  // namespace stnf
