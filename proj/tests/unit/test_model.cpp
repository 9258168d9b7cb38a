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

#include "doctest.h"
#include "stnf/lab.hpp"
#include "stnf/dsl.hpp"
#include "stnf/model.hpp"

using namespace stnf;

namespace {

FiniteModel model(int N, int s, int M, int L) {
  FiniteModel m;
  m.N = N;
  m.s = s;
  m.M = M;
  m.L = L;
  return m;
}

int64_t binom(int n, int k) {
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int64_t subsets_up_to(int n, int L) {
  int64_t r = 0;
  for (int k = 0; k <= L && k <= n; ++k) r += binom(n, k);
  return r;
}

bool invalid(const FiniteModel& m) {
  try {
    m.validate();
  } catch (const Error& e) {
    return e.code() == ErrorCode::kInvalidModel;
  }
  return false;
}

FiniteModel with_f1() {
  FiniteModel m = model(3, 1, 2, 3);
  m.F1 = {{0, 1, 2, 3}, {0, 0, 0, 0}, {1, 2, 3, 3}};
  m.F1_standard = {0, 1};
  return m;
}

}  // namespace

TEST_CASE("model validation") {
  CHECK_NOTHROW(model(8, 2, 3, 4).validate());
  CHECK(invalid(model(2, 2, 3, 4)));
  CHECK(invalid(model(8, 2, 2, 4)));
  CHECK(invalid(model(8, 2, 7, 4)));
  CHECK(invalid(model(8, 2, 3, 0)));
  CHECK_NOTHROW(with_f1().validate());
  FiniteModel bad_row = with_f1();
  bad_row.F1[2] = {1, 2, 3};
  CHECK(invalid(bad_row));
  FiniteModel bad_value = with_f1();
  bad_value.F1[2][0] = 9;
  CHECK(invalid(bad_value));
  FiniteModel no_id = with_f1();
  no_id.F1_standard = {1, 2};
  CHECK(invalid(no_id));
  FiniteModel open = with_f1();
  open.F1_standard = {0, 2};
  CHECK(invalid(open));
}

TEST_CASE("model json round trip") {
  FiniteModel m = with_f1();
  FiniteModel back = FiniteModel::from_json(Json::parse(m.to_json().dump()));
  CHECK(back.to_json() == m.to_json());
  CHECK(back.F1 == m.F1);
}

TEST_CASE("standard closure") {
  for (const FiniteModel& m : default_battery_models()) {
    CHECK(m.standard_closed());
    CHECK(m.N <= 16);
    CHECK(m.s <= 3);
    CHECK(m.M <= 4);
    CHECK(m.F1.size() <= 8);
    CHECK(m.L <= 4);
  }
  CHECK(default_battery_models().size() >= 5);
  CHECK_FALSE(non_standard_closed_model().standard_closed());
}

TEST_CASE("carrier sizes") {
  FiniteModel m = model(5, 2, 3, 3);
  Universe u(m, default_budget());
  TypeInfo* nat = u.info(Type::base());
  CHECK(u.all(nat).size() == 6);
  CHECK(u.standard(nat).size() == 3);
  TypeInfo* real = u.info(Type::real());
  CHECK(u.all(real).size() == 9);
  CHECK(u.standard(real).size() == 5);
  for (Value v : u.standard(real)) CHECK(v % 2 == 0);
  TypeInfo* set = u.info(Type::set());
  CHECK(u.all(set).size() == 512);
  CHECK(u.standard(set).size() == 2);
  TypeInfo* seq = u.info(Type::seq(Type::base()));
  CHECK(int64_t(u.all(seq).size()) == subsets_up_to(6, 3));
  CHECK(int64_t(u.standard(seq).size()) == subsets_up_to(3, 3));
  TypeInfo* rseq = u.info(Type::seq(Type::real()));
  CHECK(int64_t(u.all(rseq).size()) == subsets_up_to(9, 3));
}

TEST_CASE("F1 functions") {
  FiniteModel m = with_f1();
  Universe u(m, default_budget());
  TypeInfo* f = u.info(Type::arrow(Type::base(), Type::base()));
  REQUIRE(u.all(f).size() == 3);
  CHECK(u.standard(f).size() == 2);
  const std::vector<Value>& fs = u.all(f);
  for (size_t i = 0; i < fs.size(); ++i)
    for (Value x = 0; x <= m.N; ++x) CHECK(u.apply(f, fs[i], x) == m.F1[i][x]);
  CHECK_FALSE(u.is_standard(f, fs[2]));
}

TEST_CASE("value json round trip") {
  FiniteModel m = with_f1();
  Universe u(m, default_budget());
  for (const char* t : {"0", "real", "set", "(* 0)", "(-> 0 0)", "(-> real 0)", "(* real)"}) {
    Type ty = parse_type(t);
    TypeInfo* info = u.info(ty);
    for (Value v : u.all(info)) CHECK(u.from_json(info, u.to_json(info, v)) == v);
  }
}

TEST_CASE("enumeration budget") {
  FiniteModel m = model(8, 2, 6, 4);
  Universe u(m, 1000);
  CHECK_THROWS_AS(u.all(u.info(Type::set())), Error);
  setenv("STNF_BUDGET", "12345", 1);
  CHECK(default_budget() == 12345);
  unsetenv("STNF_BUDGET");
}
