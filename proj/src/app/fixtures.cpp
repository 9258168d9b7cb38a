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


#include <filesystem>

#include "app.hpp"
#include "stnf/dsl.hpp"
#include "stnf/loeb.hpp"
#include "stnf/normalizer.hpp"

namespace stnf::app {
namespace {

Term var(const char* name, const Type& t) { return Term::var(name, t); }

ParsedFile load(const std::filesystem::path& p) { return parse_file(read_file(p.string())); }

RewriteResult rewrite(const std::string& op, const Formula& f) {
  if (op == "prenex_st") return prenex_st(f);
  if (op == "idealize") return idealize(f);
  if (op == "max_collapse") return max_collapse(f);
  if (op == "herbrandize") return herbrandize(f);
  if (op == "skolemize_antecedent") return skolemize_antecedent(f);
  fail(ErrorCode::kUsage, "unknown rewrite " + op);
}

Json check_entry(const std::filesystem::path& dir, const Json& e) {
  Json out;
  std::string file = e.at("file");
  out["file"] = file;
  Json checks = Json::object();
  try {
    ParsedFile pf = load(dir / file);
    const Formula& f = pf.formula;
    checks["header"] = !pf.comments.empty() && !pf.comments.front().empty();
    if (e.contains("builder"))
      checks["builder"] = alpha_equiv(f, builder_formula(e["builder"]));
    if (e.contains("normalize") || e.contains("normalize_to_builder")) {
      NormalizeResult r = normalize(f);
      Formula want = e.contains("normalize") ? load(dir / e["normalize"].get<std::string>()).formula
                                             : builder_formula(e["normalize_to_builder"]);
      checks["normalize"] = alpha_equiv(r.nf.render(), want);
      checks["chained"] = r.derivation.chained();
      bool axioms = true;
      for (const std::string& a : r.derivation.axioms_used())
        if (a != "I" && a != "HAC_int" && a != "classical") axioms = false;
      checks["axioms"] = axioms;
      if (e.contains("rules")) {
        Json seen = Json::array();
        for (const Step& s : r.derivation.steps)
          if (s.rule != Rule::kPrenexSt && s.rule != Rule::kClassicalPrenex)
            seen.push_back(rule_name(s.rule));
        checks["rules"] = seen == e["rules"];
      }
    }
    if (e.contains("rewrite")) {
      RewriteResult r = rewrite(e["rewrite"], f);
      Formula want = load(dir / e["expect"].get<std::string>()).formula;
      checks["rewrite"] = alpha_equiv(r.output, want);
      if (e.value("exact", false)) checks["exact"] = to_sexp(r.output) == to_sexp(want);
    }
    if (e.value("normal_form", false)) {
      checks["classify"] = classify(f).kind != Classification::kExternalOther;
      checks["s_st_fixed_point"] = s_st_fixed_point_check(f);
    }
  } catch (const Error& err) {
    out["error"] = std::string(error_code_name(err.code())) + ": " + err.what();
  }
  bool ok = !out.contains("error");
  for (auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
  out["checks"] = checks;
  out["ok"] = ok;
  return out;
}

}  // namespace

Formula builder_formula(const std::string& name) {
  const Type R = Type::real(), S = Type::set(), N = Type::base();
  const PointProperty A = PointProperty::explicit_set();
  if (name == "st_preimage") return st_preimage_membership(var("b", R), A);
  if (name == "st_preimage_2") return st_preimage2_membership(var("b", R), A);
  if (name == "almost_subset")
    return almost_subset_formula(var("C", S), grid_set(var("D", S)));
  if (name == "a0") return a0_template(var("a", R), var("E", S), var("B", S), var("l", N));
  if (name == "b0")
    return b0_template(var("B", S), var("k", N), var("g", Type::arrow(R, N)),
                       var("b", Type::seq(R)), A);
  if (name == "loeb_zero_1") return loeb_zero_formula(A, LoebVariant::kFirst);
  if (name == "loeb_zero_2") return loeb_zero_formula(A, LoebVariant::kSecond);
  if (name == "loeb_zero_nf_1") return loeb_zero_normal_form(A, LoebVariant::kFirst).nf.render();
  if (name == "loeb_zero_nf_2") return loeb_zero_normal_form(A, LoebVariant::kSecond).nf.render();
  fail(ErrorCode::kUsage, "unknown builder " + name);
}

Json run_fixtures(const std::string& dir, bool* all_ok) {
  std::filesystem::path d(dir);
  Json manifest = Json::parse(read_file((d / "manifest.json").string()));
  Json results = Json::array();
  int passed = 0;
  for (const Json& e : manifest.at("fixtures")) {
    Json r = check_entry(d, e);
    if (r["ok"].get<bool>()) ++passed;
    results.push_back(std::move(r));
  }
  int total = static_cast<int>(results.size());
  if (all_ok) *all_ok = passed == total;
  return Json{{"fixtures", results}, {"passed", passed}, {"failed", total - passed},
              {"ok", passed == total}};
}

Outcome fixtures_cmd(const std::string& dir) {
  bool ok = false;
  Json j = run_fixtures(dir, &ok);
  return {dump(j), ok ? kExitOk : kExitFailed};
}

}  // namespace stnf::app
