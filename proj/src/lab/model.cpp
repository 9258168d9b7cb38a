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

#include <cstdlib>
#include <set>

#include "stnf/error.hpp"
#include "stnf/model.hpp"

namespace stnf {

namespace {

int get_int(const Json& j, const char* key, int dflt) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_number_integer())
    fail(ErrorCode::kInvalidModel, std::string("field ") + key + " must be an integer");
  return j[key].get<int>();
}

}  // namespace

FiniteModel FiniteModel::from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kInvalidModel, "model must be a JSON object");
  FiniteModel m;
  m.N = get_int(j, "N", m.N);
  m.s = get_int(j, "s", m.s);
  m.M = get_int(j, "M", m.M);
  m.L = get_int(j, "L", m.L);
  try {
    if (j.contains("F1")) m.F1 = j["F1"].get<std::vector<std::vector<int64_t>>>();
    if (j.contains("F1_standard"))
      m.F1_standard = j["F1_standard"].get<std::vector<size_t>>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kInvalidModel, std::string("bad F1 field: ") + e.what());
  }
  m.validate();
  return m;
}

Json FiniteModel::to_json() const {
  Json j;
  j["N"] = N;
  j["s"] = s;
  j["M"] = M;
  j["L"] = L;
  j["F1"] = F1;
  j["F1_standard"] = F1_standard;
  return j;
}

void FiniteModel::validate() const {
  auto bad = [](const std::string& msg) { fail(ErrorCode::kInvalidModel, msg); };
  if (s < 0 || N <= s) bad("need 0 <= s < N");
  if (M <= s || M > 6) bad("need s < M <= 6");
  if (L < 1) bad("need L >= 1");
  for (const auto& f : F1) {
    if (f.size() != static_cast<size_t>(N) + 1) bad("F1 member must list N+1 values");
    for (int64_t v : f)
      if (v < 0 || v > N) bad("F1 value out of range");
  }
  std::set<std::vector<int64_t>> std_members;
  for (size_t i : F1_standard) {
    if (i >= F1.size()) bad("F1_standard index out of range");
    std_members.insert(F1[i]);
  }
  if (F1.empty()) return;
  std::vector<int64_t> id(N + 1);
  for (int i = 0; i <= N; ++i) id[i] = i;
  if (!std_members.count(id)) bad("standard F1 subfamily must contain the identity");
  for (const auto& f : std_members)
    for (const auto& g : std_members) {
      std::vector<int64_t> fg(N + 1);
      for (int i = 0; i <= N; ++i) fg[i] = f[g[i]];
      if (!std_members.count(fg))
        bad("standard F1 subfamily must be closed under composition");
    }
}

bool FiniteModel::standard_closed() const {
  int64_t std_fns = F1.empty() ? s + 1 : static_cast<int64_t>(F1_standard.size());
  return s + 1 <= L && std_grid_points() <= L && std_fns <= L && L >= 2;
}

uint64_t default_budget() {
  if (const char* env = std::getenv("STNF_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return uint64_t{1} << 22;
}

}  // namespace stnf
