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

#ifndef STNF_TERM_HPP_
#define STNF_TERM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stnf/type.hpp"

namespace stnf {

enum class TermKind {
  kVar,
  kLambda,
  kApply,
  kNumLit,
  kAdd,
  kEmptySeq,
  kSeqLit,
  kLength,
  kIndex,
  kConcat,
  kInitSeg,
  kMax,
  kGridRat,
};

// Immutable, shared term. Variables carry their type, so a term knows its
// own type without a context.
class Term {
 public:
  static Term var(std::string name, Type type);
  static Term lambda(std::string name, Type var_type, Term body);
  static Term apply(Term fn, Term arg);
  static Term apply(Term fn, const std::vector<Term>& args);
  static Term num(int64_t value);
  static Term add(Term a, Term b);
  static Term empty_seq(Type elem);
  static Term seq_lit(Type elem, std::vector<Term> elems);
  static Term length(Term s);
  static Term index(Term s, Term i);
  static Term concat(Term a, Term b);
  static Term init_seg(Term s, Term n);
  static Term max(Term s);
  static Term grid_rat(int64_t numerator, Term scale);

  TermKind kind() const;
  bool is_var() const { return kind() == TermKind::kVar; }
  bool is_var(const std::string& name) const;
  // Var name or Lambda binder name.
  const std::string& name() const;
  // Var type, Lambda binder type, or element type of a sequence literal.
  const Type& var_type() const;
  int64_t value() const;
  const std::vector<Term>& args() const;
  const Term& arg(size_t i) const { return args()[i]; }

  // Result type; throws a type error for ill-formed terms.
  Type type() const;

  bool same(const Term& other) const;
  const void* id() const { return node_.get(); }

 public:
  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using VarMap = std::map<std::string, Type>;

void collect_free_vars(const Term& t, VarMap* out);
VarMap free_vars(const Term& t);
bool occurs_free(const std::string& name, const Term& t);

}  // namespace stnf

#endif  // STNF_TERM_HPP_
