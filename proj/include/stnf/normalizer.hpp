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

#ifndef STNF_NORMALIZER_HPP_
#define STNF_NORMALIZER_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stnf/core.hpp"
#include "stnf/serialize.hpp"

namespace stnf {

enum class Rule {
  kPrenexSt,
  kClassicalPrenex,
  kIdealize,
  kMaxCollapse,
  kHerbrandize,
  kSkolemizeAntecedent,
  kElimNonstandardParam,
  kNegateNF,
  kSubstituteProperty,
};

const char* rule_name(Rule r);
// One of I, HAC_int, classical.
const char* rule_axiom(Rule r);

struct Step {
  Rule rule;
  Formula before;
  Formula after;
  std::vector<std::string> side_conditions;
  // Formulas the step relies on, such as "the bound has a standard element".
  std::vector<Formula> assumptions;
};

struct Derivation {
  Formula input;
  std::vector<Step> steps;

  explicit Derivation(Formula in) : input(std::move(in)) {}
  const Formula& output() const { return steps.empty() ? input : steps.back().after; }
  std::set<std::string> axioms_used() const;
  std::vector<Formula> assumptions() const;
  // Each step starts where the previous one ended.
  bool chained() const;
  void append(const Derivation& other);
};

Json to_json(const Derivation& d);
std::string pretty(const Derivation& d);

struct RewriteResult {
  Formula output;
  Derivation derivation;
};

// Moves st quantifiers outward through connectives and internal quantifiers
// of the matching kind, and pushes negations through st quantifiers. Never
// uses idealization or choice.
RewriteResult prenex_st(const Formula& f);

// (forall z)(exists-st y) phi  ~>  (exists-st w)(forall z)(exists y in w) phi,
// applied at the first position from the outside where it fits.
RewriteResult idealize(const Formula& f);

// (exists-st K)(... (exists k in K) theta ...)  ~>  (exists-st l)(... theta[l] ...)
// for theta upward monotone in k. An empty seq_var picks the first eligible
// st existential sequence variable.
RewriteResult max_collapse(const Formula& f, const std::string& seq_var = "");

// (forall-st x)(exists-st y) phi  ~>  (exists-st F)(forall-st x)(exists y in F(x)) phi
RewriteResult herbrandize(const Formula& f);

// [(forall-st x)(exists-st y) A -> C]  ~>  (forall-st g)[(forall-st x) A[g(x)] -> C]
RewriteResult skolemize_antecedent(const Formula& f);

// (forall M)[not st(M) -> NF]  ~>  normal form without the st(M) hypothesis.
RewriteResult eliminate_nonstandard_param(const Formula& f);

// Brings (exists-st u)(forall-st z)(exists-st w) phi, or the negation of a
// normal form, back to normal form.
RewriteResult negate_normal_form(const Formula& f);

// Replaces "t in A" for the set variable A by property[hole := t].
RewriteResult substitute_property(const Formula& f, const std::string& set_var,
                                  const Formula& property,
                                  const std::string& hole);

struct NormalizeResult {
  NormalForm nf;
  Derivation derivation;
};

// Throws Error(kStuck) when no rule applies to some external subformula.
NormalizeResult normalize(const Formula& f);

// Upward monotonicity of f in a number or sequence variable. On failure
// optionally reports the offending subformula.
bool monotone_in(const Formula& f, const std::string& var,
                 std::string* offending = nullptr);

// Translation of formulas in st-prenex form into normal form.
std::optional<Formula> s_st_translate(const Formula& f);
// True iff translating the formula gives back an alpha-equivalent formula.
bool s_st_fixed_point_check(const Formula& f);

}  // namespace stnf

#endif  // STNF_NORMALIZER_HPP_
