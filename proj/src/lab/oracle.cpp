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

#include "stnf/error.hpp"
#include "stnf/lab.hpp"

namespace stnf {

namespace {

struct Grid {
  int64_t size, step, scale, s;
  explicit Grid(const FiniteModel& m)
      : size(m.grid_size()), step(m.std_grid_step()), scale(int64_t{1} << m.M), s(m.s) {}
  bool standard(int64_t i) const { return i % step == 0; }
  bool near(int64_t x, int64_t y) const {
    int64_t d = x > y ? x - y : y - x;
    return (d << s) <= scale;
  }
  bool small(int64_t count) const { return (count << s) <= scale; }
};

}  // namespace

GridSet st_preimage_oracle(const std::vector<int64_t>& a, const FiniteModel& m, int variant) {
  Grid g(m);
  std::vector<bool> in_a(g.size, false);
  for (int64_t i : a)
    if (i >= 0 && i < g.size) in_a[i] = true;
  GridSet out(g.size, false);
  for (int64_t x = 0; x < g.size; ++x) {
    if (variant == 1) {
      for (int64_t p = 0; p < g.size; ++p)
        if (g.standard(p) && in_a[p] && g.near(x, p)) out[x] = true;
      continue;
    }
    for (int64_t lo = 0; lo < g.size && !out[x]; lo += g.step) {
      if (!(lo < x || g.near(lo, x))) continue;
      for (int64_t hi = 0; hi < g.size && !out[x]; hi += g.step) {
        if (!(x < hi || g.near(x, hi))) continue;
        bool covered = true;
        for (int64_t d = lo; d <= hi; d += g.step)
          if (!in_a[d]) covered = false;
        if (covered) out[x] = true;
      }
    }
  }
  return out;
}

bool loeb_zero_oracle(const std::vector<int64_t>& a, const FiniteModel& m, int variant) {
  if (variant != 1 && variant != 2) fail(ErrorCode::kUsage, "variant must be 1 or 2");
  if (m.M > 4 || (uint64_t{1} << m.grid_size()) > default_budget())
    fail(ErrorCode::kBudgetExceeded, "grid subsets not enumerable at M=" + std::to_string(m.M));
  Grid g(m);
  uint64_t pre = grid_set_mask(st_preimage_oracle(a, m, variant));
  uint64_t all = (uint64_t{1} << g.size) - 1;
  for (uint64_t b = 0; b <= all; ++b) {
    if (g.small(__builtin_popcountll(b))) continue;
    uint64_t outside = b & ~pre;
    bool antecedent = true;
    for (uint64_t e = outside;; e = (e - 1) & outside) {
      if (!g.small(__builtin_popcountll(e))) {
        antecedent = false;
        break;
      }
      if (e == 0) break;
    }
    if (antecedent) return false;
  }
  return true;
}

}  // namespace stnf
