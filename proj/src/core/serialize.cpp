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

#include "stnf/serialize.hpp"

#include "stnf/dsl.hpp"

namespace stnf {

namespace {

struct TermName {
  TermKind kind;
  const char* name;
};

const TermName kTermNames[] = {
    {TermKind::kVar, "var"},         {TermKind::kLambda, "lambda"},
    {TermKind::kApply, "apply"},     {TermKind::kNumLit, "num"},
    {TermKind::kAdd, "add"},         {TermKind::kEmptySeq, "empty-seq"},
    {TermKind::kSeqLit, "seq"},      {TermKind::kLength, "length"},
    {TermKind::kIndex, "index"},     {TermKind::kConcat, "concat"},
    {TermKind::kInitSeg, "init-seg"}, {TermKind::kMax, "max"},
    {TermKind::kGridRat, "grid-rat"},
};

struct PredName {
  Pred pred;
  const char* name;
};

const PredName kPredNames[] = {
    {Pred::kEq, "eq"},           {Pred::kLe, "le"},
    {Pred::kLt, "lt"},           {Pred::kInSeq, "in-seq"},
    {Pred::kInSet, "in-set"},    {Pred::kApproxEq, "approx-eq"},
    {Pred::kMeasureLeq, "measure-leq"}, {Pred::kRealLt, "real-lt"},
    {Pred::kRealLe, "real-le"},
};

struct KindName {
  FormulaKind kind;
  const char* name;
};

const KindName kKindNames[] = {
    {FormulaKind::kAtom, "atom"},         {FormulaKind::kSt, "st"},
    {FormulaKind::kNot, "not"},           {FormulaKind::kAnd, "and"},
    {FormulaKind::kOr, "or"},             {FormulaKind::kImplies, "implies"},
    {FormulaKind::kForall, "forall"},     {FormulaKind::kExists, "exists"},
    {FormulaKind::kForallSt, "forall-st"}, {FormulaKind::kExistsSt, "exists-st"},
};

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::kSyntax, "JSON: " + what); }

}  // namespace

Json to_json(const Type& t) { return t.str(); }

Json to_json(const Term& t) {
  Json j;
  for (const auto& n : kTermNames)
    if (n.kind == t.kind()) j["kind"] = n.name;
  switch (t.kind()) {
    case TermKind::kVar:
      j["name"] = t.name();
      j["type"] = t.var_type().str();
      return j;
    case TermKind::kLambda:
      j["var"] = t.name();
      j["type"] = t.var_type().str();
      j["body"] = to_json(t.arg(0));
      return j;
    case TermKind::kNumLit:
      j["value"] = t.value();
      return j;
    case TermKind::kEmptySeq:
      j["type"] = t.var_type().str();
      return j;
    case TermKind::kSeqLit:
      j["type"] = t.var_type().str();
      break;
    case TermKind::kGridRat:
      j["value"] = t.value();
      break;
    default:
      break;
  }
  j["args"] = Json::array();
  for (const auto& a : t.args()) j["args"].push_back(to_json(a));
  return j;
}

Json to_json(const Binder& b) {
  Json j;
  j["var"] = b.name;
  j["type"] = b.type.str();
  if (b.guard) j["guard"] = to_json(*b.guard);
  return j;
}

Json to_json(const Formula& f) {
  Json j;
  for (const auto& n : kKindNames)
    if (n.kind == f.kind()) j["kind"] = n.name;
  switch (f.kind()) {
    case FormulaKind::kAtom:
      for (const auto& n : kPredNames)
        if (n.pred == f.pred()) j["pred"] = n.name;
      j["args"] = Json::array();
      for (const auto& a : f.args()) j["args"].push_back(to_json(a));
      return j;
    case FormulaKind::kSt:
      j["term"] = to_json(f.term());
      return j;
    case FormulaKind::kNot:
      j["body"] = to_json(f.body());
      return j;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
      j["left"] = to_json(f.lhs());
      j["right"] = to_json(f.rhs());
      return j;
    default:
      break;
  }
  j.update(to_json(f.binder()));
  j["body"] = to_json(f.body());
  return j;
}

Json to_json(const NormalForm& nf) {
  Json j;
  j["univ"] = Json::array();
  for (const auto& b : nf.univ) j["univ"].push_back(to_json(b));
  j["exist"] = Json::array();
  for (const auto& b : nf.exist) j["exist"].push_back(to_json(b));
  j["matrix"] = to_json(nf.matrix);
  j["sexp"] = to_sexp(nf.render());
  return j;
}

Type type_from_json(const Json& j) {
  if (!j.is_string()) bad("type must be a string");
  return parse_type(j.get<std::string>());
}

Term term_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("term without kind");
  std::string k = j.at("kind").get<std::string>();
  auto args = [&]() {
    std::vector<Term> out;
    for (const auto& a : j.at("args")) out.push_back(term_from_json(a));
    return out;
  };
  auto need = [&](const std::vector<Term>& a, size_t n) {
    if (a.size() != n) bad("term '" + k + "' needs " + std::to_string(n) + " args");
    return a;
  };
  if (k == "var") return Term::var(j.at("name"), type_from_json(j.at("type")));
  if (k == "lambda")
    return Term::lambda(j.at("var"), type_from_json(j.at("type")),
                        term_from_json(j.at("body")));
  if (k == "num") return Term::num(j.at("value").get<int64_t>());
  if (k == "empty-seq") return Term::empty_seq(type_from_json(j.at("type")));
  if (k == "seq") return Term::seq_lit(type_from_json(j.at("type")), args());
  if (k == "grid-rat") return Term::grid_rat(j.at("value").get<int64_t>(), need(args(), 1)[0]);
  if (k == "apply") {
    auto a = need(args(), 2);
    return Term::apply(a[0], a[1]);
  }
  if (k == "add") {
    auto a = need(args(), 2);
    return Term::add(a[0], a[1]);
  }
  if (k == "length") return Term::length(need(args(), 1)[0]);
  if (k == "max") return Term::max(need(args(), 1)[0]);
  if (k == "index") {
    auto a = need(args(), 2);
    return Term::index(a[0], a[1]);
  }
  if (k == "concat") {
    auto a = need(args(), 2);
    return Term::concat(a[0], a[1]);
  }
  if (k == "init-seg") {
    auto a = need(args(), 2);
    return Term::init_seg(a[0], a[1]);
  }
  bad("unknown term kind '" + k + "'");
}

Formula formula_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("formula without kind");
  std::string k = j.at("kind").get<std::string>();
  for (const auto& n : kKindNames) {
    if (k != n.name) continue;
    switch (n.kind) {
      case FormulaKind::kAtom: {
        std::string p = j.at("pred").get<std::string>();
        std::vector<Term> args;
        for (const auto& a : j.at("args")) args.push_back(term_from_json(a));
        for (const auto& pn : kPredNames)
          if (p == pn.name) return Formula::atom(pn.pred, std::move(args));
        bad("unknown predicate '" + p + "'");
      }
      case FormulaKind::kSt:
        return Formula::st(term_from_json(j.at("term")));
      case FormulaKind::kNot:
        return Formula::neg(formula_from_json(j.at("body")));
      case FormulaKind::kAnd:
        return Formula::conj(formula_from_json(j.at("left")), formula_from_json(j.at("right")));
      case FormulaKind::kOr:
        return Formula::disj(formula_from_json(j.at("left")), formula_from_json(j.at("right")));
      case FormulaKind::kImplies:
        return Formula::implies(formula_from_json(j.at("left")),
                                formula_from_json(j.at("right")));
      default: {
        Binder b(j.at("var"), type_from_json(j.at("type")));
        if (j.contains("guard")) b.guard = term_from_json(j.at("guard"));
        return Formula::quant(n.kind, std::move(b), formula_from_json(j.at("body")));
      }
    }
  }
  bad("unknown formula kind '" + k + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace stnf
