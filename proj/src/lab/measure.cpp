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

GridSet grid_set_from_mask(uint64_t mask, int M) {
  size_t n = (size_t{1} << M) + 1;
  GridSet b(n, false);
  for (size_t i = 0; i < n && i < 64; ++i) b[i] = (mask >> i) & 1;
  return b;
}

uint64_t grid_set_mask(const GridSet& b) {
  if (b.size() > 64) fail(ErrorCode::kSortTooLarge, "grid set does not fit a 64-bit mask");
  uint64_t mask = 0;
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i]) mask |= uint64_t{1} << i;
  return mask;
}

Rational grid_measure_eval(const GridSet& b, int M) {
  if (b.size() != (size_t{1} << M) + 1)
    fail(ErrorCode::kEval, "grid set length must be 2^M+1");
  int64_t count = 0;
  for (bool x : b) count += x;
  return Rational(count, int64_t{1} << M);
}

bool almost_subset_eval(const GridSet& c, const GridSet& d, const FiniteModel& m) {
  if (c.size() != d.size() || c.size() != static_cast<size_t>(m.grid_size()))
    fail(ErrorCode::kEval, "grid sets must match the model grid");
  GridSet diff(c.size());
  for (size_t i = 0; i < c.size(); ++i) diff[i] = c[i] && !d[i];
  return grid_measure_eval(diff, m.M) <= Rational(1, int64_t{1} << m.s);
}

}  // namespace stnf
