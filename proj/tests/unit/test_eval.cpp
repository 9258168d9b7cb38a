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
#include "stnf/dsl.hpp"
#include "stnf/lab.hpp"
#include "stnf/loeb.hpp"

using namespace stnf;

namespace {

Formula F(const char* text) { return parse_file(text).formula; }

FiniteModel model(int N, int s, int M, int L) {
  FiniteModel m;
  m.N = N;
  m.s = s;
  m.M = M;
  m.L = L;
  return m;
}

// Runs both evaluators on every assignment of the free variables, up to a cap.
int disagreements(Universe& u, const Formula& f, int cap) {
  Evaluator plain(u, f, EvalOptions{false});
  Evaluator pruned(u, f, EvalOptions{true});
  const auto& vars = plain.free_vars();
  std::vector<const std::vector<Value>*> carriers;
  for (const auto& [name, t] : vars) carriers.push_back(&u.all(u.info(t)));
  std::vector<size_t> idx(vars.size(), 0);
  int bad = 0;
  for (int n = 0; n < cap; ++n) {
    std::vector<Value> vals;
    for (size_t i = 0; i < idx.size(); ++i) vals.push_back((*carriers[i])[idx[i]]);
    if (plain.run(vals) != pruned.run(vals)) ++bad;
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == carriers[i]->size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return bad;
}

}  // namespace

TEST_CASE("standard quantifiers range over the standard part") {
  for (int s = 0; s <= 3; ++s) {
    FiniteModel m = model(6, s, 4, 4);
    Universe u(m, default_budget());
    bool want = true;
    for (int x = 0; x <= s; ++x) {
      bool found = false;
      for (int y = 0; y <= s; ++y) found = found || y > x;
      want = want && found;
    }
    CHECK(eval(F("(forall-st (x 0) (exists-st (y 0) (< x y)))"), u) == want);
    CHECK(eval(F("(forall (x 0) (exists (y 0) (<= x y)))"), u));
    CHECK_FALSE(eval(F("(forall (x 0) (exists (y 0) (< x y)))"), u));
  }
}

TEST_CASE("standard sequences hold every standard number only when L is large enough") {
  Formula f = F("(exists-st (K (* 0)) (forall-st (x 0) (exists (k 0 :in K) (= k x))))");
  for (int s = 0; s <= 3; ++s) {
    FiniteModel small = model(6, s, 4, s);
    FiniteModel big = model(6, s, 4, s + 1);
    if (s > 0) {
      Universe u(small, default_budget());
      CHECK_FALSE(eval(f, u));
    }
    Universe v(big, default_budget());
    CHECK(eval(f, v));
  }
}

TEST_CASE("grid approximation semantics") {
  FiniteModel m = model(8, 2, 3, 4);
  Universe u(m, default_budget());
  Formula f = F("(declare (a real) (b real) (n 0)) (approx-eq a b n)");
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int n = 0; n <= 8; ++n) {
        bool want = n > m.M ? a == b : std::abs(a - b) * (1 << n) <= (1 << m.M);
        CHECK(eval(f, u, {{"a", a}, {"b", b}, {"n", n}}) == want);
      }
  Formula lt = F("(declare (a real) (b real)) (real< a b)");
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) CHECK(eval(lt, u, {{"a", a}, {"b", b}}) == (a < b));
}

TEST_CASE("measure atom semantics") {
  FiniteModel m = model(8, 2, 3, 4);
  Universe u(m, default_budget());
  Formula f = F("(declare (B set) (k 0)) (measure<= B k)");
  for (int64_t b = 0; b < 512; b += 7)
    for (int k = 0; k <= 8; ++k) {
      bool want = int64_t(__builtin_popcountll(b)) << k <= (int64_t(1) << m.M);
      CHECK(eval(f, u, {{"B", b}, {"k", k}}) == want);
    }
}

TEST_CASE("F1 standard functions map standard numbers to standard numbers") {
  for (const FiniteModel& m : default_battery_models()) {
    if (m.F1.empty()) continue;
    Universe u(m, default_budget());
    CHECK(eval(F("(forall-st (f (-> 0 0)) (forall-st (x 0) (exists-st (y 0) (= (f x) y))))"), u));
  }
}

TEST_CASE("monotone pruning agrees with plain evaluation") {
  std::vector<FiniteModel> models = default_battery_models();
  int bad = 0, checked = 0;
  for (Rule r : {Rule::kIdealize, Rule::kMaxCollapse, Rule::kHerbrandize,
                 Rule::kSkolemizeAntecedent, Rule::kNegateNF}) {
    for (const GeneratedCase& c : generate_cases(r, 20, 77)) {
      for (const FiniteModel& m : models) {
        Universe u(m, default_budget());
        bad += disagreements(u, c.input, 200);
        bad += disagreements(u, c.derivation.output(), 200);
        checked += 2;
      }
    }
  }
  CHECK(checked > 0);
  CHECK(bad == 0);
}

TEST_CASE("monotone pruning agrees on the measure zero normal forms") {
  FiniteModel m = model(8, 1, 3, 32);
  Universe u(m, default_budget());
  for (LoebVariant v : {LoebVariant::kFirst, LoebVariant::kSecond}) {
    Formula nf = loeb_zero_normal_form(PointProperty::explicit_set(), v).nf.render();
    Evaluator plain(u, nf, EvalOptions{false});
    Evaluator pruned(u, nf, EvalOptions{true});
    for (int i = -1; i <= 8; ++i)
      for (int j = i; j <= 8; ++j) {
        int64_t a = (i < 0 ? 0 : int64_t(1) << i) | (j < 0 ? 0 : int64_t(1) << j);
        CHECK(plain.run(Env{{"A", a}}) == pruned.run(Env{{"A", a}}));
      }
  }
}

TEST_CASE("unassigned free variables are reported") {
  FiniteModel m = model(4, 1, 2, 3);
  Universe u(m, default_budget());
  Evaluator e(u, F("(declare (p 0)) (<= p 1)"));
  CHECK_THROWS_AS(e.run(Env{}), Error);
}
