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


#include <string>

#include "doctest.h"
#include "stnf/stnf.h"

namespace {

stnf_formula* parse(const char* text) {
  stnf_formula* f = nullptr;
  REQUIRE(stnf_formula_parse(text, &f) == STNF_OK);
  return f;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  stnf_string_free(s);
  return out;
}

const char* kModel = "{\"N\": 4, \"s\": 1, \"M\": 2, \"L\": 3, \"F1\": [], \"F1_standard\": []}";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(stnf_version()).size() > 0);
  CHECK(std::string(stnf_status_name(STNF_OK)) == "Ok");
  CHECK(std::string(stnf_status_name(STNF_ERR_STUCK)) == "Stuck");
}

TEST_CASE("parse errors and null arguments") {
  stnf_formula* f = nullptr;
  CHECK(stnf_formula_parse("(forall-st x)", &f) == STNF_ERR_SYNTAX);
  CHECK(f == nullptr);
  CHECK(std::string(stnf_last_error()).size() > 0);
  CHECK(stnf_formula_parse("(forall (x 0) (in x x))", &f) == STNF_ERR_TYPE);
  CHECK(stnf_formula_parse(nullptr, &f) == STNF_ERR_NULL_ARGUMENT);
  CHECK(stnf_formula_parse("(= 0 0)", nullptr) == STNF_ERR_NULL_ARGUMENT);
  stnf_formula* ok = parse("(= 0 0)");
  CHECK(std::string(stnf_last_error()).empty());
  stnf_formula_free(ok);
}

TEST_CASE("formula handles") {
  stnf_formula* a = parse("(forall-st (x 0) (exists-st (y 0) (<= x y)))");
  stnf_formula* b = parse("(forall-st (u 0) (exists-st (v 0) (<= u v)))");
  int eq = 0;
  CHECK(stnf_formula_alpha_equiv(a, b, &eq) == STNF_OK);
  CHECK(eq == 1);
  stnf_classification c;
  CHECK(stnf_formula_classify(a, &c) == STNF_OK);
  CHECK(c == STNF_NORMAL_FORM);
  char* s = nullptr;
  CHECK(stnf_formula_to_sexp(a, &s) == STNF_OK);
  CHECK(take(s).find("forall-st") != std::string::npos);
  CHECK(stnf_formula_to_json(a, &s) == STNF_OK);
  CHECK(take(s).find('{') == 0);
  stnf_formula_free(a);
  stnf_formula_free(b);
}

TEST_CASE("normalize through the C API") {
  stnf_formula* f = parse("(forall (M 0) (implies (not (st M)) (forall-st (x 0) (exists-st (y 0) (<= x (+ y M))))))");
  stnf_formula* nf = nullptr;
  char* deriv = nullptr;
  CHECK(stnf_normalize(f, &nf, &deriv) == STNF_OK);
  CHECK(take(deriv).find("ElimNonstandardParam") != std::string::npos);
  stnf_classification c;
  CHECK(stnf_formula_classify(nf, &c) == STNF_OK);
  CHECK(c == STNF_NORMAL_FORM);
  stnf_formula_free(nf);
  stnf_formula_free(f);

  stnf_formula* stuck = parse("(exists (x 0) (forall-st (y 0) (<= y x)))");
  CHECK(stnf_normalize(stuck, &nf, nullptr) == STNF_ERR_STUCK);
  stnf_formula_free(stuck);
}

TEST_CASE("models and evaluation") {
  stnf_model* m = nullptr;
  CHECK(stnf_model_from_json("{\"N\": 1, \"s\": 2}", &m) == STNF_ERR_INVALID_MODEL);
  CHECK(stnf_model_from_json("not json", &m) == STNF_ERR_INVALID_MODEL);
  REQUIRE(stnf_model_from_json(kModel, &m) == STNF_OK);
  stnf_formula* f = parse("(declare (p 0)) (forall-st (x 0) (<= x p))");
  int v = -1;
  CHECK(stnf_eval(f, m, "{\"p\": 1}", &v) == STNF_OK);
  CHECK(v == 1);
  CHECK(stnf_eval(f, m, "{\"p\": 0}", &v) == STNF_OK);
  CHECK(v == 0);
  CHECK(stnf_eval(f, m, nullptr, &v) != STNF_OK);
  stnf_formula_free(f);
  stnf_model_free(m);
}

TEST_CASE("command layer exit codes") {
  char* out = nullptr;
  CHECK(stnf_cmd_parse("(forall-st x)", &out) == 2);
  CHECK(take(out).find("SyntaxError") != std::string::npos);
  CHECK(stnf_cmd_normalize("(exists (x 0) (forall-st (y 0) (<= y x)))", 0, 0, &out) == 1);
  take(out);
  CHECK(stnf_cmd_check("(forall-st (x 0) (exists-st (y 0) (<= x y)))", kModel,
                       "(forall-st (x 0) (exists-st (y 0) (< y x)))", &out) == 1);
  CHECK(take(out).find("Counterexample") != std::string::npos);
  CHECK(stnf_cmd_loeb(3, "A", 0, 0, &out) == 2);
  take(out);
  CHECK(stnf_cmd_fixtures(nullptr, &out) == 0);
  take(out);
}

TEST_CASE("command output is deterministic") {
  char* a = nullptr;
  char* b = nullptr;
  CHECK(stnf_cmd_loeb(1, "A", 1, 0, &a) == 0);
  CHECK(stnf_cmd_loeb(1, "A", 1, 0, &b) == 0);
  CHECK(take(a) == take(b));
  CHECK(stnf_cmd_battery("{\"per_rule\": 3}", &a) == 0);
  CHECK(stnf_cmd_battery("{\"per_rule\": 3}", &b) == 0);
  CHECK(take(a) == take(b));
}
