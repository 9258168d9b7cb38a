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

#include "internal.hpp"
#include "stnf/dsl.hpp"

namespace stnf {
namespace detail {

namespace {

void combine_binary(Rewriter& rw, Path p) {
  for (;;) {
    Formula f = rw.at(p);
    int side = -1;
    if (f.lhs().is(FormulaKind::kForallSt)) side = 0;
    else if (f.rhs().is(FormulaKind::kForallSt)) side = 1;
    else if (f.lhs().is(FormulaKind::kExistsSt)) side = 0;
    else if (f.rhs().is(FormulaKind::kExistsSt)) side = 1;
    if (side < 0) return;
    rw.apply(p, pull(f, side, rw.names()));
    p = child_path(p, 0);
  }
}

void combine_implies(Rewriter& rw, Path p) {
  while (rw.at(p).rhs().is(FormulaKind::kForallSt)) {
    rw.apply(p, pull(rw.at(p), 1, rw.names()));
    p = child_path(p, 0);
  }
  if (nf_with_both_blocks(rw.at(p).lhs())) {
    Move m = skolemize_at(rw.at(p), rw.names());
    size_t n = internal_block(m.out, FormulaKind::kForallSt);
    rw.apply(p, std::move(m));
    p = descend(p, n);
  }
  while (rw.at(p).lhs().is_st_quantifier()) {
    rw.apply(p, pull(rw.at(p), 0, rw.names()));
    p = child_path(p, 0);
  }
  while (rw.at(p).rhs().is(FormulaKind::kExistsSt)) {
    rw.apply(p, pull(rw.at(p), 1, rw.names()));
    p = child_path(p, 0);
  }
}

void try_collapse(Rewriter& rw, const Path& p) {
  Formula f = rw.at(p);
  if (!collapsible(f)) return;
  try {
    Move m = max_collapse_at(f, rw.names());
    rw.apply(p, std::move(m));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotMonotone && e.code() != ErrorCode::kNotApplicable)
      throw;
  }
}

void forall_block(Rewriter& rw, Path p, size_t block) {
  while (rw.at(descend(p, block)).is(FormulaKind::kForallSt)) {
    rw.apply(p, swap_out(rw.at(p), block, rw.names()));
    p = child_path(p, 0);
  }
  Formula inner = rw.at(descend(p, block));
  if (!inner.is(FormulaKind::kExistsSt)) return;
  size_t m = internal_block(inner, FormulaKind::kExistsSt);
  rw.apply(p, idealize_block(rw.at(p), block, rw.names()));
  for (size_t j = 0; j < m; ++j) try_collapse(rw, descend(p, j));
}

void exists_block(Rewriter& rw, Path p, size_t block) {
  Formula inner = rw.at(descend(p, block));
  if (inner.is(FormulaKind::kForallSt))
    fail(ErrorCode::kStuck,
         "no rule moves an st universal out of an internal existential in " +
             to_sexp(rw.at(p)));
  while (rw.at(descend(p, block)).is(FormulaKind::kExistsSt)) {
    rw.apply(p, swap_out(rw.at(p), block, rw.names()));
    p = child_path(p, 0);
  }
}

void exists_st(Rewriter& rw, const Path& p) {
  Path body = child_path(p, 0);
  Formula b = rw.at(body);
  if (!b.is(FormulaKind::kForallSt)) return;
  if (nf_with_both_blocks(b)) rw.apply(body, herbrandize_at(b, rw.names()));
  rw.apply(p, dual_collapse_at(rw.at(p), rw.names()));
}

}  // namespace

void normalize_at(Rewriter& rw, const Path& p) {
  Formula f = rw.at(p);
  if (is_internal(f)) return;
  switch (f.kind()) {
    case FormulaKind::kNot:
      rw.apply(p, push_negation(f, rw.names()));
      normalize_at(rw, p);
      return;
    case FormulaKind::kSt:
      rw.apply(p, unfold_st(f, rw.names()));
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      normalize_at(rw, child_path(p, 0));
      normalize_at(rw, child_path(p, 1));
      combine_binary(rw, p);
      return;
    case FormulaKind::kImplies:
      normalize_at(rw, child_path(p, 0));
      normalize_at(rw, child_path(p, 1));
      combine_implies(rw, p);
      return;
    case FormulaKind::kForallSt:
      normalize_at(rw, child_path(p, 0));
      return;
    case FormulaKind::kExistsSt:
      normalize_at(rw, child_path(p, 0));
      exists_st(rw, p);
      return;
    case FormulaKind::kForall: {
      size_t block = internal_block(f, FormulaKind::kForall);
      normalize_at(rw, descend(p, block));
      forall_block(rw, p, block);
      return;
    }
    case FormulaKind::kExists: {
      size_t block = internal_block(f, FormulaKind::kExists);
      normalize_at(rw, descend(p, block));
      exists_block(rw, p, block);
      return;
    }
    case FormulaKind::kAtom:
      return;
  }
}

}  // namespace detail
}  // namespace stnf
