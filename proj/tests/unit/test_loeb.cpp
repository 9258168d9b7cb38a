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


#include <chrono>

#include "doctest.h"
#include "stnf/dsl.hpp"
#include "stnf/lab.hpp"
#include "stnf/loeb.hpp"

using namespace stnf;

namespace {

Formula F(const char* text) { return parse_file(text).formula; }

const Type R = Type::real();
const Type S = Type::set();
const Type N0 = Type::base();

FiniteModel model(int N, int s, int M, int L) {
  FiniteModel m;
  m.N = N;
  m.s = s;
  m.M = M;
  m.L = L;
  return m;
}

int64_t full(const FiniteModel& m) { return (int64_t(1) << ((1 << m.M) + 1)) - 1; }

int64_t interval(int lo, int hi) {
  int64_t mask = 0;
  for (int i = lo; i <= hi; ++i) mask |= int64_t(1) << i;
  return mask;
}

Formula v2_nonempty_interval() {
  return F("(declare (A set) (b real)) (exists-st (a real) (exists-st (c real) (and (real<= a c) "
           "(and (and (or (real< a b) (forall-st (n 0) (approx-eq a b n))) "
           "(or (real< b c) (forall-st (n 0) (approx-eq b c n)))) "
           "(forall-st (d real) (implies (and (real<= a d) (real<= d c)) (in d A)))))))");
}

}  // namespace

TEST_CASE("grid measure atom") {
  FiniteModel m = model(4, 1, 3, 4);
  Universe u(m, default_budget());
  Formula at = grid_measure_atom(Term::var("B", S), Term::var("k", N0));
  for (int64_t b = 0; b < full(m); ++b) {
    if (__builtin_popcountll(b) <= (1 << m.M)) CHECK(eval(at, u, {{"B", b}, {"k", 0}}));
  }
  for (int k = 0; k <= m.N; ++k) CHECK(eval(at, u, {{"B", 0}, {"k", k}}));
  CHECK_FALSE(eval(at, u, {{"B", full(m)}, {"k", 1}}));
}

TEST_CASE("almost subset examples") {
  FiniteModel m = model(4, 1, 2, 4);
  Universe u(m, default_budget());
  Formula same = almost_subset_formula(Term::var("C", S), grid_set(Term::var("C", S)));
  Formula any = almost_subset_formula(Term::var("C", S), grid_set(Term::var("D", S)));
  for (int64_t c = 0; c <= full(m); ++c) {
    CHECK(eval(same, u, {{"C", c}}));
    CHECK(eval(any, u, {{"C", 0}, {"D", c}}));
  }
}

TEST_CASE("st preimage membership") {
  FiniteModel m = model(4, 2, 4, 5);
  Universe u(m, default_budget());
  PointProperty A = PointProperty::explicit_set();
  Formula mem = st_preimage_membership(Term::var("b", R), A);
  for (int b = 0; b <= 16; b += 4) CHECK(eval(mem, u, {{"A", int64_t(1) << b}, {"b", b}}));

  Formula neg = st_preimage(A).non_member(Term::var("e", R));
  CHECK(alpha_equiv(neg, F("(declare (A set) (e real)) (forall-st (a real :in A) "
                           "(not (forall-st (n 0) (approx-eq a e n))))")));
}

TEST_CASE("second st preimage membership") {
  FiniteModel m = model(4, 2, 4, 5);
  Universe u(m, default_budget());
  Formula mem = st_preimage2_membership(Term::var("b", R), PointProperty::explicit_set());
  for (int b = 4; b <= 12; ++b)
    for (int d = 4; d <= 4; d += 4) CHECK(eval(mem, u, {{"A", interval(b - d, b + d)}, {"b", b}}));
}

TEST_CASE("second preimage inside the first on closed intervals"
          * doctest::should_fail()
          * doctest::description("a > c makes [a, c] empty at finite scale")) {
  FiniteModel m = model(4, 2, 4, 5);
  Universe u(m, default_budget());
  PointProperty A = PointProperty::explicit_set();
  Formula v1 = st_preimage_membership(Term::var("b", R), A);
  Formula v2 = st_preimage2_membership(Term::var("b", R), A);
  int empty_hits = 0, outside = 0;
  for (int b = 0; b <= 16; ++b) empty_hits += eval(v2, u, {{"A", 0}, {"b", b}});
  for (int lo = 0; lo <= 16; ++lo)
    for (int hi = lo; hi <= 16; ++hi)
      for (int b = 0; b <= 16; ++b) {
        Env env{{"A", interval(lo, hi)}, {"b", b}};
        if (eval(v2, u, env) && !eval(v1, u, env)) ++outside;
      }
  CHECK(empty_hits == 0);
  CHECK(outside == 0);
}

TEST_CASE("second preimage with a nonempty interval lies inside the first") {
  FiniteModel m = model(4, 2, 4, 5);
  Universe u(m, default_budget());
  Formula v1 = st_preimage_membership(Term::var("b", R), PointProperty::explicit_set());
  Formula v2 = v2_nonempty_interval();
  for (int b = 0; b <= 16; ++b) CHECK_FALSE(eval(v2, u, {{"A", 0}, {"b", b}}));
  int hits = 0;
  for (int lo = 0; lo <= 16; ++lo)
    for (int hi = lo; hi <= 16; ++hi)
      for (int b = 0; b <= 16; ++b) {
        Env env{{"A", interval(lo, hi)}, {"b", b}};
        if (eval(v2, u, env)) {
          ++hits;
          CHECK(eval(v1, u, env));
        }
      }
  CHECK(hits > 0);
}

TEST_CASE("A0 and B0 templates") {
  FiniteModel m = model(4, 1, 2, 4);
  Universe u(m, default_budget());
  Formula a0 = a0_template(Term::var("a", R), Term::var("E", S), Term::var("B", S),
                           Term::var("l", N0));
  for (int a = 0; a <= 4; ++a)
    for (int l = 0; l <= 4; ++l) {
      CHECK(eval(a0, u, {{"a", a}, {"E", 0}, {"B", 0}, {"l", l}}));
      CHECK_FALSE(eval(a0, u, {{"a", a}, {"E", int64_t(1) << a}, {"B", full(m)}, {"l", l}}));
    }

  Formula b0 = b0_template(Term::var("B", S), Term::var("k", N0),
                           Term::var("g", Type::arrow(R, N0)),
                           Term::seq_lit(R, {}), PointProperty::explicit_set());
  Universe u2(m, default_budget());
  Env env{{"A", full(m)}, {"B", 3}, {"k", 1}};
  env["g"] = u2.default_value(u2.info(Type::arrow(R, N0)));
  CHECK_FALSE(eval(b0, u2, env));
}

TEST_CASE("loeb zero agrees with the brute force oracle on small sets") {
  FiniteModel m = model(8, 1, 3, 32);
  Universe u(m, default_budget());
  Formula f = loeb_zero_formula(PointProperty::explicit_set(), LoebVariant::kFirst);
  for (int64_t a : {int64_t(0), int64_t(1), int64_t(0x10), int64_t(0x111), full(m)}) {
    std::vector<int64_t> pts;
    for (int i = 0; i <= 8; ++i)
      if (a >> i & 1) pts.push_back(i);
    CHECK(eval(f, u, {{"A", a}}) == loeb_zero_oracle(pts, m, 1));
  }
  CHECK(loeb_zero_oracle({}, m, 1));
  CHECK_FALSE(loeb_zero_oracle({0, 1, 2, 3, 4, 5, 6, 7, 8}, m, 1));
}

TEST_CASE("normalizability closure") {
  std::vector<PointProperty> props = {
      PointProperty::explicit_set(),
      PointProperty::formula(F("(declare (a real)) (real<= a (grid 1 2))"), "a"),
      PointProperty::formula(F("(declare (f (-> real real)) (a real)) (forall-st (k 0) "
                               "(exists-st (n 0) (forall (x real) (implies (approx-eq x a n) "
                               "(approx-eq (f x) (f a) k)))))"),
                             "a"),
      PointProperty::formula(F("(declare (a real)) (exists-st (u 0) (forall-st (z 0) "
                               "(exists-st (w 0) (approx-eq a a (+ u (+ z w))))))"),
                             "a"),
  };
  for (const PointProperty& p : props)
    for (LoebVariant v : {LoebVariant::kFirst, LoebVariant::kSecond}) {
      NormalizeResult r = loeb_zero_normal_form(p, v);
      CHECK(classify(r.nf.render()).kind != Classification::kExternalOther);
      CHECK(r.derivation.chained());
    }
}

TEST_CASE("variant 1 normal form: rule order and runtime") {
  auto t0 = std::chrono::steady_clock::now();
  NormalizeResult r = loeb_zero_normal_form(PointProperty::explicit_set(), LoebVariant::kFirst);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);
  std::vector<Rule> core;
  for (const Step& s : r.derivation.steps)
    if (s.rule != Rule::kPrenexSt && s.rule != Rule::kClassicalPrenex) core.push_back(s.rule);
  CHECK(core == std::vector<Rule>{Rule::kIdealize, Rule::kMaxCollapse, Rule::kSkolemizeAntecedent,
                                  Rule::kIdealize, Rule::kSkolemizeAntecedent, Rule::kIdealize});
  for (const std::string& a : r.derivation.axioms_used())
    CHECK((a == "I" || a == "HAC_int" || a == "classical"));
}

TEST_CASE("almost everywhere") {
  FiniteModel m = model(8, 1, 3, 32);
  Universe u(m, default_budget());
  Formula yes = almost_everywhere_formula(
      PointProperty::formula(F("(declare (a real)) (real<= a a)"), "a"), LoebVariant::kFirst);
  CHECK(eval(yes, u));
  Formula no = almost_everywhere_formula(
      PointProperty::formula(F("(declare (a real)) (real< a a)"), "a"), LoebVariant::kFirst);
  Formula all = loeb_zero_formula(PointProperty::explicit_set(), LoebVariant::kFirst);
  CHECK(eval(no, u) == eval(all, u, {{"A", full(m)}}));
  CHECK_FALSE(eval(no, u));
}

TEST_CASE("hole type mismatch") {
  CHECK_THROWS_AS(PointProperty::formula(F("(declare (a 0)) (<= a 1)"), "a"), Error);
}

TEST_CASE("frozen oracle values at M = 3") {
  for (int s : {1, 2}) {
    FiniteModel m = model(8, s, 3, 32);
    Universe u(m, default_budget());
    for (int v : {1, 2}) {
      Formula f = loeb_zero_formula(PointProperty::explicit_set(),
                                    v == 1 ? LoebVariant::kFirst : LoebVariant::kSecond);
      CHECK(loeb_zero_oracle({}, m, v) == (v == 1));
      CHECK_FALSE(loeb_zero_oracle({4}, m, v));
      CHECK_FALSE(loeb_zero_oracle({0, 1, 2, 3, 4, 5, 6, 7, 8}, m, v));
      CHECK(eval(f, u, {{"A", 0}}) == (v == 1));
      CHECK_FALSE(eval(f, u, {{"A", 1 << 4}}));
      CHECK_FALSE(eval(f, u, {{"A", full(m)}}));
    }
  }
}
