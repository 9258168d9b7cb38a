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

#ifndef STNF_SRC_NORMALIZER_INTERNAL_HPP_
#define STNF_SRC_NORMALIZER_INTERNAL_HPP_

#include <set>
#include <string>
#include <vector>

#include "stnf/normalizer.hpp"

namespace stnf {
namespace detail {

struct Names {
  std::set<std::string> used;
  int skolem_count = 0;

  std::string fresh(const std::string& hint) {
    std::string n = fresh_name(hint, used);
    used.insert(n);
    return n;
  }
  void add(const Formula& f) {
    std::set<std::string> n = all_names(f);
    used.insert(n.begin(), n.end());
  }
};

struct Move {
  Formula out;
  Rule rule;
  std::vector<std::string> side;
  std::vector<Formula> assumptions;
};

using Path = std::vector<int>;

class Rewriter {
 public:
  explicit Rewriter(const Formula& root) : root_(root), deriv_(root) {
    names_.add(root);
  }

  const Formula& root() const { return root_; }
  Formula at(const Path& p) const;
  void apply(const Path& p, Move m);
  Names& names() { return names_; }
  Derivation& derivation() { return deriv_; }

 private:
  Formula root_;
  Derivation deriv_;
  Names names_;
};

Path child_path(Path p, int i);
Path descend(Path p, size_t n);

// Single rewrite moves on a subformula.
Move push_negation(const Formula& f, Names& names);
Move unfold_st(const Formula& f, Names& names);
Move pull(const Formula& f, int side, Names& names);
// f is a block of `block` internal quantifiers of one kind over an st
// quantifier; moves that st quantifier above the block.
Move swap_out(const Formula& f, size_t block, Names& names);
Move idealize_block(const Formula& f, size_t block, Names& names);
Move max_collapse_at(const Formula& f, Names& names);
Move herbrandize_at(const Formula& f, Names& names);
Move skolemize_at(const Formula& f, Names& names);
// f = (exists-st x...)(forall-st u...) psi with psi internal.
Move dual_collapse_at(const Formula& f, Names& names);

Formula ext_eq(const Term& a, const Term& b, Names& names);
size_t internal_block(const Formula& f, FormulaKind kind);
bool nf_with_both_blocks(const Formula& f);
bool collapsible(const Formula& f);

// The engine: normalizes the subformula at p in place.
void normalize_at(Rewriter& rw, const Path& p);

}  // namespace detail
}  // namespace stnf

#endif  // STNF_SRC_NORMALIZER_INTERNAL_HPP_
