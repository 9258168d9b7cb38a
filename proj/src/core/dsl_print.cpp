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

namespace stnf {

std::string to_sexp(const Type& t) { return t.str(); }

std::string to_sexp(const Term& t) {
  auto args = [&](const char* head) {
    std::string out = std::string("(") + head;
    for (const auto& a : t.args()) out += " " + to_sexp(a);
    return out + ")";
  };
  switch (t.kind()) {
    case TermKind::kVar:
      return t.name();
    case TermKind::kLambda:
      return "(lambda (" + t.name() + " " + t.var_type().str() + ") " +
             to_sexp(t.arg(0)) + ")";
    case TermKind::kApply: {
      std::vector<const Term*> chain;
      const Term* f = &t;
      while (f->kind() == TermKind::kApply) {
        chain.push_back(&f->arg(1));
        f = &f->arg(0);
      }
      std::string out = "(" + to_sexp(*f);
      for (size_t i = chain.size(); i-- > 0;) out += " " + to_sexp(*chain[i]);
      return out + ")";
    }
    case TermKind::kNumLit:
      return std::to_string(t.value());
    case TermKind::kAdd:
      return args("+");
    case TermKind::kEmptySeq:
      return "(empty " + t.var_type().str() + ")";
    case TermKind::kSeqLit: {
      std::string out = "(seq " + t.var_type().str();
      for (const auto& a : t.args()) out += " " + to_sexp(a);
      return out + ")";
    }
    case TermKind::kLength:
      return args("len");
    case TermKind::kIndex:
      return args("at");
    case TermKind::kConcat:
      return args("concat");
    case TermKind::kInitSeg:
      return args("init");
    case TermKind::kMax:
      return args("max");
    case TermKind::kGridRat:
      return "(grid " + std::to_string(t.value()) + " " + to_sexp(t.arg(0)) + ")";
  }
  return "?";
}

namespace {

const char* pred_name(Pred p) {
  switch (p) {
    case Pred::kEq: return "=";
    case Pred::kLe: return "<=";
    case Pred::kLt: return "<";
    case Pred::kInSeq: return "in";
    case Pred::kInSet: return "in";
    case Pred::kApproxEq: return "approx-eq";
    case Pred::kMeasureLeq: return "measure<=";
    case Pred::kRealLt: return "real<";
    case Pred::kRealLe: return "real<=";
  }
  return "?";
}

const char* quant_name(FormulaKind k) {
  switch (k) {
    case FormulaKind::kForall: return "forall";
    case FormulaKind::kExists: return "exists";
    case FormulaKind::kForallSt: return "forall-st";
    case FormulaKind::kExistsSt: return "exists-st";
    default: return "?";
  }
}

std::string binder_sexp(const Binder& b) {
  std::string out = "(" + b.name + " " + b.type.str();
  if (b.guard) out += " :in " + to_sexp(*b.guard);
  return out + ")";
}

}  // namespace

std::string to_sexp(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kAtom: {
      std::string out = std::string("(") + pred_name(f.pred());
      for (const auto& a : f.args()) out += " " + to_sexp(a);
      return out + ")";
    }
    case FormulaKind::kSt:
      return "(st " + to_sexp(f.term()) + ")";
    case FormulaKind::kNot:
      return "(not " + to_sexp(f.body()) + ")";
    case FormulaKind::kAnd:
      return "(and " + to_sexp(f.lhs()) + " " + to_sexp(f.rhs()) + ")";
    case FormulaKind::kOr:
      return "(or " + to_sexp(f.lhs()) + " " + to_sexp(f.rhs()) + ")";
    case FormulaKind::kImplies:
      return "(implies " + to_sexp(f.lhs()) + " " + to_sexp(f.rhs()) + ")";
    default:
      return std::string("(") + quant_name(f.kind()) + " " +
             binder_sexp(f.binder()) + " " + to_sexp(f.body()) + ")";
  }
}

std::string to_file_text(const Formula& f) {
  std::string out;
  VarMap fv = free_vars(f);
  if (!fv.empty()) {
    out = "(declare";
    for (const auto& [name, type] : fv) out += " (" + name + " " + type.str() + ")";
    out += ")\n";
  }
  return out + to_sexp(f) + "\n";
}

std::string pretty(const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar:
      return t.name();
    case TermKind::kLambda:
      return "\xce\xbb" + t.name() + "." + pretty(t.arg(0));
    case TermKind::kApply: {
      std::vector<const Term*> chain;
      const Term* f = &t;
      while (f->kind() == TermKind::kApply) {
        chain.push_back(&f->arg(1));
        f = &f->arg(0);
      }
      std::string out = pretty(*f) + "(";
      for (size_t i = chain.size(); i-- > 0;) {
        out += pretty(*chain[i]);
        if (i) out += ", ";
      }
      return out + ")";
    }
    case TermKind::kNumLit:
      return std::to_string(t.value());
    case TermKind::kAdd:
      return "(" + pretty(t.arg(0)) + " + " + pretty(t.arg(1)) + ")";
    case TermKind::kEmptySeq:
      return "\xe2\x9f\xa8\xe2\x9f\xa9";
    case TermKind::kSeqLit: {
      std::string out = "\xe2\x9f\xa8";
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        out += pretty(t.arg(i));
      }
      return out + "\xe2\x9f\xa9";
    }
    case TermKind::kLength:
      return "|" + pretty(t.arg(0)) + "|";
    case TermKind::kIndex:
      return pretty(t.arg(0)) + "[" + pretty(t.arg(1)) + "]";
    case TermKind::kConcat:
      return pretty(t.arg(0)) + " * " + pretty(t.arg(1));
    case TermKind::kInitSeg:
      return "init(" + pretty(t.arg(0)) + ", " + pretty(t.arg(1)) + ")";
    case TermKind::kMax:
      return "max(" + pretty(t.arg(0)) + ")";
    case TermKind::kGridRat:
      return std::to_string(t.value()) + "/2^" + pretty(t.arg(0));
  }
  return "?";
}

std::string pretty(const Formula& f) {
  const auto& a = f.args();
  switch (f.kind()) {
    case FormulaKind::kAtom:
      switch (f.pred()) {
        case Pred::kEq:
          return pretty(a[0]) + " = " + pretty(a[1]);
        case Pred::kLe:
          return pretty(a[0]) + " \xe2\x89\xa4 " + pretty(a[1]);
        case Pred::kLt:
          return pretty(a[0]) + " < " + pretty(a[1]);
        case Pred::kInSeq:
        case Pred::kInSet:
          return pretty(a[0]) + " \xe2\x88\x88 " + pretty(a[1]);
        case Pred::kApproxEq:
          return "|" + pretty(a[0]) + " \xe2\x88\x92 " + pretty(a[1]) +
                 "| \xe2\x89\xa4 1/" + pretty(a[2]);
        case Pred::kMeasureLeq:
          return "|L(" + pretty(a[0]) + ")| \xe2\x89\xa4 1/" + pretty(a[1]);
        case Pred::kRealLt:
          return pretty(a[0]) + " <\xe1\xb5\xa3 " + pretty(a[1]);
        case Pred::kRealLe:
          return pretty(a[0]) + " \xe2\x89\xa4\xe1\xb5\xa3 " + pretty(a[1]);
      }
      return "?";
    case FormulaKind::kSt:
      return "st(" + pretty(f.term()) + ")";
    case FormulaKind::kNot:
      return "\xc2\xac" + pretty(f.body());
    case FormulaKind::kAnd:
      return "(" + pretty(f.lhs()) + " \xe2\x88\xa7 " + pretty(f.rhs()) + ")";
    case FormulaKind::kOr:
      return "(" + pretty(f.lhs()) + " \xe2\x88\xa8 " + pretty(f.rhs()) + ")";
    case FormulaKind::kImplies:
      return "(" + pretty(f.lhs()) + " \xe2\x86\x92 " + pretty(f.rhs()) + ")";
    default:
      break;
  }
  bool all = f.is(FormulaKind::kForall) || f.is(FormulaKind::kForallSt);
  std::string out = all ? "(\xe2\x88\x80" : "(\xe2\x88\x83";
  if (f.is_st_quantifier()) out += "^st ";
  const Binder& b = f.binder();
  out += b.name;
  if (b.guard)
    out += "\xe2\x88\x88" + pretty(*b.guard);
  else
    out += "^" + b.type.str();
  return out + ")" + pretty(f.body());
}

}  // namespace stnf
