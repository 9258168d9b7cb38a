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
#include "stnf/serialize.hpp"

using namespace stnf;

namespace {

Formula F(const char* text) { return parse_file(text).formula; }

ErrorCode code_of(const char* text) {
  try {
    parse_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kUsage;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  const char* texts[] = {
      "(forall-st (x 0) (exists-st (y 0) (<= x y)))",
      "(declare (A set)) (exists-st (a real :in A) (forall-st (n 0) (approx-eq a a n)))",
      "(forall (f (-> 0 0)) (exists (s (* 0)) (= (f 0) (len s))))",
      "(forall (M 0) (implies (not (st M)) (forall-st (x 0) (< x M))))",
  };
  for (const char* t : texts) {
    Formula f = F(t);
    CHECK(alpha_equiv(F(to_file_text(f).c_str()), f));
    CHECK(to_sexp(F(to_file_text(f).c_str())) == to_sexp(f));
  }
}

TEST_CASE("syntax and type errors") {
  CHECK(code_of("(forall-st x)") == ErrorCode::kSyntax);
  CHECK(code_of("(forall-st (x 0) (<= x y)") == ErrorCode::kSyntax);
  CHECK(code_of("(declare (A set)) (forall (x 0) (<= x A))") == ErrorCode::kType);
  CHECK(code_of("(forall (x 0) (in x x))") == ErrorCode::kType);
  try {
    parse_file("(forall-st (x 0)\n  (<= x 1)))");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2, column 12") != std::string::npos);
  }
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equiv(F("(forall-st (x 0) (exists-st (y 0) (<= x y)))"),
                    F("(forall-st (u 0) (exists-st (v 0) (<= u v)))")));
  CHECK_FALSE(alpha_equiv(F("(forall-st (x 0) (exists-st (y 0) (<= x y)))"),
                          F("(forall-st (x 0) (exists-st (y 0) (<= y x)))")));
  CHECK_FALSE(alpha_equiv(F("(forall-st (x 0) (exists-st (y 0) (<= x y)))"),
                          F("(forall-st (x 0) (exists (y 0) (<= x y)))")));
  CHECK_FALSE(alpha_equiv(F("(declare (z 0)) (forall (x 0) (<= x z))"),
                          F("(declare (w 0)) (forall (x 0) (<= x w))")));
}

TEST_CASE("substitution avoids capture") {
  Formula f = F("(declare (z 0)) (forall (y 0) (<= z y))");
  Formula g = substitute(f, "z", Term::var("y", Type::base()));
  CHECK(occurs_free("y", g));
  CHECK(alpha_equiv(g, F("(declare (y 0)) (forall (y1 0) (<= y y1))")));
  CHECK(alpha_equiv(substitute(f, "y", Term::num(3)), f));
}

TEST_CASE("fresh names") {
  CHECK(fresh_name("w", {}) == "w");
  CHECK(fresh_name("w", {"w"}) == "w1");
  CHECK(fresh_name("w", {"w", "w1", "w2"}) == "w3");
}

TEST_CASE("classification") {
  ClassifyResult nf = classify(F("(forall-st (x 0) (exists-st (y 0) (<= x y)))"));
  REQUIRE(nf.kind == Classification::kNormalForm);
  CHECK(nf.nf->univ.size() == 1);
  CHECK(nf.nf->exist.size() == 1);
  CHECK(alpha_equiv(nf.nf->render(), F("(forall-st (x 0) (exists-st (y 0) (<= x y)))")));
  CHECK(classify(F("(forall (x 0) (<= x x))")).kind == Classification::kInternal);
  CHECK(classify(F("(forall (x 0) (exists-st (y 0) (<= x y)))")).kind ==
        Classification::kExternalOther);
  CHECK(classify(F("(exists-st (y 0) (forall-st (x 0) (<= x y)))")).kind ==
        Classification::kExternalOther);
}

TEST_CASE("json serialization round trip") {
  Formula f = F("(declare (A set)) (forall (B set) (exists (k 0 :in (seq 0 1 2)) "
                "(implies (measure<= B k) (forall (e real :in B) (in e A)))))");
  Formula g = formula_from_json(Json::parse(dump(to_json(f))));
  CHECK(alpha_equiv(f, g));
  CHECK(dump(to_json(f)) == dump(to_json(g)));
}
