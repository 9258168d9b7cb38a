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


#include "doctest.h"
#include "stnf/dsl.hpp"
#include "stnf/lab.hpp"

using namespace stnf;

namespace {

NormalForm nf_of(const char* text) {
  ClassifyResult c = classify(parse_file(text).formula);
  REQUIRE(c.nf.has_value());
  return *c.nf;
}

FiniteModel model(int N, int s, int M, int L) {
  FiniteModel m;
  m.N = N;
  m.s = s;
  m.M = M;
  m.L = L;
  return m;
}

// Every row has a candidate making the matrix true.
bool herbrand_by_eval(const NormalForm& nf, const WitnessTable& t, Universe& u) {
  for (const auto& row : t.rows) {
    bool any = false;
    for (const auto& ys : row.ys) {
      Env env;
      for (size_t i = 0; i < nf.univ.size(); ++i) env[nf.univ[i].name] = row.x[i];
      for (size_t i = 0; i < nf.exist.size(); ++i) env[nf.exist[i].name] = ys[i];
      any = any || eval(nf.matrix, u, env);
    }
    if (!any) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity witness") {
  NormalForm nf = nf_of("(forall-st (x 0) (exists-st (y 0) (<= x y)))");
  Universe u(model(5, 3, 4, 4), default_budget());
  WitnessTable t = extract_witnesses(nf, u);
  REQUIRE(t.rows.size() == 4);
  for (const auto& row : t.rows) {
    REQUIRE(row.ys.size() == 1);
    CHECK(row.ys[0][0] == row.x[0]);
  }
  CHECK(herbrand_by_eval(nf, t, u));
  WitnessCheck c = verify_witnesses(nf, t, u);
  CHECK(c.ok());
}

TEST_CASE("false normal form has no witnesses") {
  NormalForm nf = nf_of("(forall-st (x 0) (exists-st (y 0) (< x y)))");
  Universe u(model(5, 2, 3, 4), default_budget());
  try {
    extract_witnesses(nf, u);
    FAIL("expected NotValid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotValid);
  }
}

TEST_CASE("corrupted tables fail verification") {
  NormalForm nf = nf_of("(forall-st (x 0) (exists-st (y 0) (<= x y)))");
  Universe u(model(5, 2, 3, 4), default_budget());
  WitnessTable t = extract_witnesses(nf, u);
  REQUIRE(verify_witnesses(nf, t, u).ok());

  WitnessTable missing = t;
  missing.rows.pop_back();
  CHECK_FALSE(verify_witnesses(nf, missing, u).complete);

  WitnessTable wrong = t;
  wrong.rows.back().ys = {{0}};
  CHECK_FALSE(verify_witnesses(nf, wrong, u).herbrand);

  WitnessTable padded = t;
  padded.rows.front().ys.push_back({2});
  CHECK_FALSE(verify_witnesses(nf, padded, u).minimal);
}

TEST_CASE("witnesses over parameters") {
  NormalForm nf = nf_of("(declare (p 0)) (forall-st (x 0) (exists-st (y 0) (<= (+ x p) (+ y p))))");
  Universe u(model(4, 1, 2, 3), default_budget());
  WitnessTable t = extract_witnesses(nf, u);
  CHECK(t.params.size() == 5);
  CHECK(verify_witnesses(nf, t, u).ok());
}
