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

#ifndef STNF_FORMULA_HPP_
#define STNF_FORMULA_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stnf/term.hpp"

namespace stnf {

enum class Pred {
  kEq,          // =_0, also exact equality of reals, sets and sequences
  kLe,          // <=_0
  kLt,          // <_0
  kInSeq,       // x in s for a finite sequence s
  kInSet,       // grid point in grid set
  kApproxEq,    // |a - b| <= 1/k, with 1/k read as 2^-k on the grid
  kMeasureLeq,  // |L(B)| <= 1/k
  kRealLt,
  kRealLe,
};

enum class FormulaKind {
  kAtom,
  kSt,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kForall,
  kExists,
  kForallSt,
  kExistsSt,
};

// A bound variable with an optional bounding container: a sequence
// (x in s) or, for grid points, a grid set.
struct Binder {
  std::string name;
  Type type;
  std::optional<Term> guard;

  Binder() = default;
  Binder(std::string n, Type t) : name(std::move(n)), type(std::move(t)) {}
  Binder(std::string n, Type t, std::optional<Term> g)
      : name(std::move(n)), type(std::move(t)), guard(std::move(g)) {}
};

class Formula {
 public:
  static Formula atom(Pred pred, std::vector<Term> args);
  static Formula st(Term t);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula quant(FormulaKind kind, Binder binder, Formula body);
  static Formula forall(Binder b, Formula body);
  static Formula exists(Binder b, Formula body);
  static Formula forall_st(Binder b, Formula body);
  static Formula exists_st(Binder b, Formula body);

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return kind() == k; }
  bool is_quantifier() const;
  bool is_st_quantifier() const;
  bool is_binary() const;

  Pred pred() const;
  const std::vector<Term>& args() const;
  const Term& term() const;  // St argument
  const Binder& binder() const;
  const Formula& body() const;  // quantifier body or negated formula
  const Formula& lhs() const;
  const Formula& rhs() const;

  size_t num_children() const;
  const Formula& child(size_t i) const;
  Formula with_child(size_t i, Formula c) const;
  Formula with_binder(Binder b) const;

  bool same(const Formula& other) const;
  const void* id() const { return node_.get(); }

 public:
  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Membership atom for a binder guard: InSeq or InSet by container type.
Formula guard_atom(const Term& x, const Term& container);

Formula conj_all(const std::vector<Formula>& fs);

// No st anywhere.
bool is_internal(const Formula& f);

void collect_free_vars(const Formula& f, VarMap* out);
VarMap free_vars(const Formula& f);
bool occurs_free(const std::string& name, const Formula& f);
// Free and bound names.
std::set<std::string> all_names(const Formula& f);
size_t formula_size(const Formula& f);
int st_quantifier_depth(const Formula& f);

}  // namespace stnf

#endif  // STNF_FORMULA_HPP_
