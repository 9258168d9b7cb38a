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

#ifndef STNF_CORE_HPP_
#define STNF_CORE_HPP_

#include <set>
#include <string>
#include <vector>

#include "stnf/error.hpp"
#include "stnf/formula.hpp"

namespace stnf {

// Typechecking.

using Context = VarMap;

struct TypeReport {
  Type type;
  std::vector<std::string> warnings;
};

TypeReport typecheck(const Term& t, const Context& ctx = {});
// Throws Error(kType) naming the offending subformula.
std::vector<std::string> typecheck(const Formula& f, const Context& ctx = {});

// Names and substitution.

// First of hint, hint1, hint2, ... not in avoid.
std::string fresh_name(const std::string& hint,
                       const std::set<std::string>& avoid);

Term substitute(const Term& t, const std::string& name, const Term& value);
Formula substitute(const Formula& f, const std::string& name,
                   const Term& value);
Formula rename_free(const Formula& f, const std::string& from,
                    const std::string& to);

bool alpha_equiv(const Term& a, const Term& b);
bool alpha_equiv(const Formula& a, const Formula& b);

// Standardness of terms: a term is standard when every free variable is
// assumed standard.
bool infer_standard(const Term& t, const std::set<std::string>& assumptions);

// Normal forms (forall-st x)(exists-st y) phi with phi internal.

struct NormalForm {
  std::vector<Binder> univ;
  std::vector<Binder> exist;
  Formula matrix;

  Formula render() const;
};

enum class Classification { kInternal, kNormalForm, kExternalOther };

struct ClassifyResult {
  Classification kind;
  std::optional<NormalForm> nf;
};

ClassifyResult classify(const Formula& f);
const char* classification_name(Classification c);

// Splits a formula into its st prefix and the rest, without requiring the
// rest to be internal.
struct StPrefix {
  std::vector<std::pair<bool, Binder>> binders;  // true for forall-st
  Formula rest;
};
StPrefix split_st_prefix(const Formula& f);

}  // namespace stnf

#endif  // STNF_CORE_HPP_
