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
#include "stnf/dsl.hpp"

namespace stnf {

namespace {

struct Checker {
  std::vector<std::string> warnings;

  Type term(const Term& t, const Context& ctx) {
    switch (t.kind()) {
      case TermKind::kVar: {
        auto it = ctx.find(t.name());
        if (it != ctx.end() && it->second != t.var_type())
          fail(ErrorCode::kType, "variable " + t.name() + " used at type " +
                                     t.var_type().str() + " but declared " +
                                     it->second.str());
        return t.var_type();
      }
      case TermKind::kLambda: {
        Context inner = ctx;
        inner[t.name()] = t.var_type();
        term(t.arg(0), inner);
        break;
      }
      case TermKind::kIndex: {
        for (const auto& a : t.args()) term(a, ctx);
        const Term& s = t.arg(0);
        const Term& i = t.arg(1);
        if (i.kind() == TermKind::kNumLit) {
          size_t len = s.kind() == TermKind::kEmptySeq   ? 0
                       : s.kind() == TermKind::kSeqLit ? s.args().size()
                                                       : SIZE_MAX;
          if (i.value() < 0 || static_cast<size_t>(i.value()) >= len) {
            if (len != SIZE_MAX)
              warnings.push_back("index " + std::to_string(i.value()) +
                                 " out of range in " + to_sexp(t) +
                                 "; evaluates to the default value");
          }
        }
        break;
      }
      case TermKind::kGridRat: {
        term(t.arg(0), ctx);
        const Term& m = t.arg(0);
        if (m.kind() == TermKind::kNumLit) {
          if (m.value() < 0 || m.value() > 62)
            fail(ErrorCode::kType, "grid scale out of range in " + to_sexp(t));
          int64_t top = int64_t{1} << m.value();
          if (t.value() < 0 || t.value() > top)
            fail(ErrorCode::kType, "grid numerator outside [0, 2^M] in " + to_sexp(t));
        } else if (t.value() < 0) {
          fail(ErrorCode::kType, "negative grid numerator in " + to_sexp(t));
        }
        break;
      }
      default:
        for (const auto& a : t.args()) term(a, ctx);
    }
    try {
      return t.type();
    } catch (const Error& e) {
      fail(ErrorCode::kType, std::string(e.what()) + " in " + to_sexp(t));
    }
  }

  void expect(const Formula& f, size_t i, const Type& want, const Type& got) {
    if (want != got)
      fail(ErrorCode::kType, "argument " + std::to_string(i + 1) + " of " +
                                 to_sexp(f) + " has type " + got.str() +
                                 ", expected " + want.str());
  }

  void atom(const Formula& f, const Context& ctx) {
    std::vector<Type> ts;
    for (const auto& a : f.args()) ts.push_back(term(a, ctx));
    auto arity = [&](size_t n) {
      if (ts.size() != n)
        fail(ErrorCode::kType, "wrong number of arguments in " + to_sexp(f));
    };
    switch (f.pred()) {
      case Pred::kEq:
        arity(2);
        if (ts[0].is_arrow())
          fail(ErrorCode::kType, "equality at function type in " + to_sexp(f));
        expect(f, 1, ts[0], ts[1]);
        break;
      case Pred::kLe:
      case Pred::kLt:
        arity(2);
        expect(f, 0, Type::base(), ts[0]);
        expect(f, 1, Type::base(), ts[1]);
        break;
      case Pred::kInSeq:
        arity(2);
        if (!ts[1].is_seq())
          fail(ErrorCode::kType, "membership in non-sequence in " + to_sexp(f));
        expect(f, 0, ts[1].elem(), ts[0]);
        break;
      case Pred::kInSet:
        arity(2);
        expect(f, 0, Type::real(), ts[0]);
        expect(f, 1, Type::set(), ts[1]);
        break;
      case Pred::kApproxEq:
        arity(3);
        expect(f, 0, Type::real(), ts[0]);
        expect(f, 1, Type::real(), ts[1]);
        expect(f, 2, Type::base(), ts[2]);
        break;
      case Pred::kMeasureLeq:
        arity(2);
        expect(f, 0, Type::set(), ts[0]);
        expect(f, 1, Type::base(), ts[1]);
        break;
      case Pred::kRealLt:
      case Pred::kRealLe:
        arity(2);
        expect(f, 0, Type::real(), ts[0]);
        expect(f, 1, Type::real(), ts[1]);
        break;
    }
  }

  void formula(const Formula& f, const Context& ctx) {
    switch (f.kind()) {
      case FormulaKind::kAtom:
        atom(f, ctx);
        return;
      case FormulaKind::kSt:
        term(f.term(), ctx);
        return;
      case FormulaKind::kNot:
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
      case FormulaKind::kImplies:
        for (size_t i = 0; i < f.num_children(); ++i) formula(f.child(i), ctx);
        return;
      default:
        break;
    }
    const Binder& b = f.binder();
    if (b.guard) {
      Type g = term(*b.guard, ctx);
      bool ok = (g.is_seq() && g.elem() == b.type) ||
                (g.kind() == Type::Kind::kSet && b.type == Type::real());
      if (!ok)
        fail(ErrorCode::kType, "bound of " + b.name + " has type " + g.str() +
                                   ", not a container of " + b.type.str());
    }
    Context inner = ctx;
    inner[b.name] = b.type;
    formula(f.body(), inner);
  }
};

}  // namespace

TypeReport typecheck(const Term& t, const Context& ctx) {
  Checker c;
  Type ty = c.term(t, ctx);
  return TypeReport{ty, std::move(c.warnings)};
}

std::vector<std::string> typecheck(const Formula& f, const Context& ctx) {
  Checker c;
  c.formula(f, ctx);
  return std::move(c.warnings);
}

}  // namespace stnf
