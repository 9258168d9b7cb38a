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

namespace stnf {
namespace detail {

Path child_path(Path p, int i) {
  p.push_back(i);
  return p;
}

Path descend(Path p, size_t n) {
  for (size_t i = 0; i < n; ++i) p.push_back(0);
  return p;
}

Formula Rewriter::at(const Path& p) const {
  Formula f = root_;
  for (int i : p) f = f.child(static_cast<size_t>(i));
  return f;
}

namespace {

Formula replace_at(const Formula& f, const Path& p, size_t depth,
                   const Formula& sub) {
  if (depth == p.size()) return sub;
  size_t i = static_cast<size_t>(p[depth]);
  return f.with_child(i, replace_at(f.child(i), p, depth + 1, sub));
}

}  // namespace

void Rewriter::apply(const Path& p, Move m) {
  Formula before = root_;
  root_ = replace_at(root_, p, 0, m.out);
  names_.add(m.out);
  deriv_.steps.push_back(Step{m.rule, before, root_, std::move(m.side),
                              std::move(m.assumptions)});
}

}  // namespace detail
}  // namespace stnf
