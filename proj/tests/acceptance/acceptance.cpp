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


#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "app/app.hpp"
#include "stnf/dsl.hpp"
#include "stnf/lab.hpp"
#include "stnf/loeb.hpp"
#include "stnf/normalizer.hpp"

using namespace stnf;

namespace {

constexpr double kChainSeconds = 1.0;
constexpr double kPetziSeconds = 1.0;
constexpr double kBatterySeconds = 600.0;
constexpr double kOracleSeconds = 300.0;
constexpr int kPerRule = 100;
constexpr int kGeneratedNormalForms = 200;
constexpr uint64_t kSeed = 20260101;

// Truth counts over the 130 sets with at most three grid points at M = 3,
// fixed by the brute-force oracle before the build.
struct Frozen {
  int s;
  int variant;
  int true_count;
};
constexpr Frozen kFrozen[] = {{1, 1, 42}, {2, 1, 15}, {1, 2, 0}, {2, 2, 0}};

const std::filesystem::path kDir = STNF_DEFAULT_FIXTURE_DIR;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Formula load(const std::string& name) {
  return parse_file(app::read_file((kDir / name).string())).formula;
}

std::vector<Rule> core_rules(const Derivation& d) {
  std::vector<Rule> out;
  for (const Step& s : d.steps)
    if (s.rule != Rule::kPrenexSt && s.rule != Rule::kClassicalPrenex) out.push_back(s.rule);
  return out;
}

bool axioms_ok(const Derivation& d) {
  for (const std::string& a : d.axioms_used())
    if (a != "I" && a != "HAC_int" && a != "classical") return false;
  return true;
}

FiniteModel model(int N, int s, int M, int L) {
  FiniteModel m;
  m.N = N;
  m.s = s;
  m.M = M;
  m.L = L;
  return m;
}

struct Result {
  bool pass = true;
  std::string detail;
};

int report(int n, const char* name, const std::function<Result()>& fn) {
  Result r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%s criterion %d: %s (%s)\n", r.pass ? "PASS" : "FAIL", n, name, r.detail.c_str());
  std::fflush(stdout);
  return r.pass ? 0 : 1;
}

Result golden_chain() {
  const std::vector<Rule> want = {Rule::kIdealize, Rule::kMaxCollapse, Rule::kSkolemizeAntecedent,
                                  Rule::kIdealize, Rule::kSkolemizeAntecedent, Rule::kIdealize};
  Formula final_nf = load("loeb1_final.sexp");
  Result r;
  for (const char* name : {"loeb1_chain.sexp", "loeb1_unfold.sexp"}) {
    Formula in = load(name);
    auto t0 = Clock::now();
    NormalizeResult n = normalize(in);
    double secs = since(t0);
    bool ok = alpha_equiv(n.nf.render(), final_nf) && core_rules(n.derivation) == want &&
              n.derivation.chained() && axioms_ok(n.derivation) && secs < kChainSeconds;
    r.pass = r.pass && ok;
    r.detail += std::string(name) + (ok ? " ok " : " mismatch ") + std::to_string(secs) + "s; ";
  }
  Formula built = loeb_zero_formula(PointProperty::explicit_set(), LoebVariant::kFirst);
  bool same = alpha_equiv(built, load("loeb1_chain.sexp"));
  r.pass = r.pass && same;
  r.detail += same ? "builder matches the chain line" : "builder differs from the chain line";
  return r;
}

Result golden_petzi() {
  Result r;
  const std::pair<const char*, const char*> cases[] = {{"petzi.sexp", "petzi_final.sexp"},
                                                       {"petzi_fn.sexp", "petzi_fn_final.sexp"}};
  for (const auto& [in, out] : cases) {
    auto t0 = Clock::now();
    NormalizeResult n = normalize(load(in));
    double secs = since(t0);
    bool ok = alpha_equiv(n.nf.render(), load(out)) && secs < kPetziSeconds &&
              axioms_ok(n.derivation);
    r.pass = r.pass && ok;
    r.detail += std::string(in) + (ok ? " ok " : " mismatch ") + std::to_string(secs) + "s; ";
  }
  return r;
}

Result sub_chains() {
  Formula oji = idealize(load("oji_input.sexp")).output;
  Formula oji2 = max_collapse(oji).output;
  bool a = to_sexp(oji) == to_sexp(load("oji.sexp"));
  bool b = to_sexp(oji2) == to_sexp(load("oji2.sexp"));
  bool c = alpha_equiv(app::builder_formula("a0"), load("a0.sexp"));
  bool d = alpha_equiv(app::builder_formula("b0"), load("b0.sexp"));
  Result r{a && b && c && d, ""};
  r.detail = std::string("oji ") + (a ? "exact" : "differs") + ", oji2 " + (b ? "exact" : "differs") +
             ", A0 " + (c ? "alpha-equal" : "differs") + ", B0 " + (d ? "alpha-equal" : "differs");
  return r;
}

// (exists-st y)(forall-st x) phi from (forall-st x)(exists-st y) phi.
Formula corrupt_prefix(const NormalForm& nf) {
  Formula body = nf.matrix;
  for (size_t i = nf.univ.size(); i-- > 0;) body = Formula::forall_st(nf.univ[i], body);
  for (size_t i = nf.exist.size(); i-- > 0;) body = Formula::exists_st(nf.exist[i], body);
  return body;
}

struct Suite {
  std::vector<NormalForm> nfs;
  int generated = 0;
  int golden = 0;
  int stuck = 0;
};

// Generated normal forms followed by those of every golden fixture.
Suite suite() {
  const Rule rules[] = {Rule::kPrenexSt, Rule::kClassicalPrenex, Rule::kIdealize, Rule::kMaxCollapse,
                        Rule::kHerbrandize, Rule::kSkolemizeAntecedent,
                        Rule::kElimNonstandardParam, Rule::kNegateNF, Rule::kSubstituteProperty};
  Suite st;
  std::vector<NormalForm>& nfs = st.nfs;
  for (int round = 0; static_cast<int>(nfs.size()) < kGeneratedNormalForms && round < 20; ++round) {
    for (Rule rule : rules) {
      for (const GeneratedCase& c : generate_cases(rule, 5, kSeed + round)) {
        if (static_cast<int>(nfs.size()) == kGeneratedNormalForms) break;
        try {
          nfs.push_back(normalize(c.input).nf);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kStuck) throw;
          ++st.stuck;
        }
      }
    }
  }
  st.generated = static_cast<int>(nfs.size());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(kDir))
    if (entry.path().extension() == ".sexp") files.push_back(entry.path().filename());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    nfs.push_back(normalize(load(f.string())).nf);
    ++st.golden;
  }
  return st;
}

Result fixed_point() {
  Suite st = suite();
  const std::vector<NormalForm>& nfs = st.nfs;
  int generated = st.generated, golden = st.golden, stuck = st.stuck;
  int fixed = 0, controls = 0, rejected = 0;
  for (const NormalForm& nf : nfs) {
    fixed += s_st_fixed_point_check(nf.render());
    if (!nf.univ.empty() && !nf.exist.empty()) {
      ++controls;
      rejected += !s_st_fixed_point_check(corrupt_prefix(nf));
    }
  }
  Result r;
  r.pass = generated == kGeneratedNormalForms && fixed == static_cast<int>(nfs.size()) &&
           controls > 0 && rejected == controls;
  r.detail = std::to_string(fixed) + "/" + std::to_string(nfs.size()) + " fixed points (" +
             std::to_string(generated) + " generated, " + std::to_string(golden) +
             " golden, " + std::to_string(stuck) + " stuck inputs skipped); " +
             std::to_string(rejected) + "/" + std::to_string(controls) +
             " corrupted prefixes rejected";
  return r;
}

Result battery_soundness() {
  auto t0 = Clock::now();
  std::vector<FiniteModel> models = default_battery_models();
  bool bounds = models.size() >= 5;
  for (const FiniteModel& m : models)
    bounds = bounds && m.standard_closed() && m.N <= 16 && m.s <= 3 && m.M <= 4 &&
             m.F1.size() <= 8 && m.L <= 4;
  BatteryConfig cfg;
  cfg.seed = kSeed;
  cfg.per_rule = kPerRule;
  BatteryReport rep = battery(models, cfg);
  int formulas = 0, checks = 0, cex = 0;
  bool each = true;
  for (const auto& [rule, st] : rep.per_rule) {
    formulas += st.formulas;
    checks += st.checks;
    cex += st.counterexamples + st.budget_exceeded;
    each = each && st.formulas >= kPerRule;
  }
  BatteryConfig nc = cfg;
  nc.rules = {Rule::kIdealize};
  BatteryReport bad = battery({non_standard_closed_model()}, nc);
  int expected = bad.per_rule.at("Idealize").counterexamples;
  double secs = since(t0);
  Result r;
  r.pass = bounds && each && rep.per_rule.size() == 9 && cex == 0 && expected > 0 &&
           secs < kBatterySeconds;
  r.detail = std::to_string(formulas) + " formulas, " + std::to_string(checks) + " checks over " +
             std::to_string(models.size()) + " standard-closed models, " + std::to_string(cex) +
             " counterexamples; non-closed model: " + std::to_string(expected) +
             " Idealize counterexamples; " + std::to_string(secs) + "s";
  return r;
}

Result oracle_agreement() {
  auto t0 = Clock::now();
  std::vector<int64_t> sets;
  for (int64_t a = 0; a < 512; ++a)
    if (__builtin_popcountll(a) <= 3) sets.push_back(a);
  Result r;
  int mismatches = 0;
  for (const Frozen& fz : kFrozen) {
    FiniteModel m = model(8, fz.s, 3, 32);
    Universe u(m, default_budget());
    LoebVariant v = fz.variant == 1 ? LoebVariant::kFirst : LoebVariant::kSecond;
    Formula unfolded = loeb_zero_formula(PointProperty::explicit_set(), v);
    Formula nf = loeb_zero_normal_form(PointProperty::explicit_set(), v).nf.render();
    Evaluator eu(u, unfolded);
    Evaluator en(u, nf);
    int truths = 0, bad = 0;
    for (int64_t a : sets) {
      std::vector<int64_t> pts;
      for (int i = 0; i <= 8; ++i)
        if (a >> i & 1) pts.push_back(i);
      bool want = loeb_zero_oracle(pts, m, fz.variant);
      bool x = eu.run(Env{{"A", a}});
      bool y = en.run(Env{{"A", a}});
      bad += (x != want) + (y != want);
      truths += want;
    }
    mismatches += bad;
    bool ok = bad == 0 && truths == fz.true_count;
    r.pass = r.pass && ok;
    r.detail += "s=" + std::to_string(fz.s) + " v" + std::to_string(fz.variant) + ": " +
                std::to_string(truths) + "/" + std::to_string(sets.size()) + " true" +
                (ok ? "" : " (expected " + std::to_string(fz.true_count) + ", " +
                               std::to_string(bad) + " disagreements)") + "; ";
  }
  double secs = since(t0);
  r.pass = r.pass && secs < kOracleSeconds && sets.size() == 130;
  r.detail += std::to_string(mismatches) + " disagreements, " + std::to_string(secs) + "s";
  return r;
}

// Recomputes the Herbrand condition of a table by direct evaluation.
bool recheck(const NormalForm& nf, const WitnessTable& t, Universe& u) {
  auto guard_ok = [&](const Binder& b, const Env& env) {
    return !b.guard || eval(guard_atom(Term::var(b.name, b.type), *b.guard), u, env);
  };
  for (const Env& params : t.params) {
    for (const auto& row : t.rows) {
      Env env = params;
      bool relevant = true;
      for (size_t i = 0; i < nf.univ.size(); ++i) {
        env[nf.univ[i].name] = row.x[i];
        relevant = relevant && guard_ok(nf.univ[i], env);
      }
      if (!relevant) continue;
      bool any = false;
      for (const auto& ys : row.ys) {
        Env e = env;
        bool guards = true;
        for (size_t i = 0; i < nf.exist.size(); ++i) {
          e[nf.exist[i].name] = ys[i];
          guards = guards && guard_ok(nf.exist[i], e);
        }
        any = any || (guards && eval(nf.matrix, u, e));
      }
      if (!any) return false;
    }
  }
  return true;
}

Result witness_extraction() {
  Suite st = suite();
  FiniteModel m = default_battery_models().front();
  Universe u(m, default_budget());
  int valid = 0, not_valid = 0, budget = 0, failed = 0;
  for (const NormalForm& nf : st.nfs) {
    WitnessTable t;
    try {
      t = extract_witnesses(nf, u);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kNotValid) {
        ++not_valid;
        continue;
      }
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      ++budget;
      continue;
    }
    ++valid;
    failed += !(verify_witnesses(nf, t, u).ok() && recheck(nf, t, u));
  }
  Result r;
  r.pass = valid > 0 && failed == 0 && budget == 0;
  r.detail = std::to_string(valid - failed) + "/" + std::to_string(valid) +
             " valid normal forms pass the Herbrand, minimality and eval checks; " +
             std::to_string(not_valid) + " not valid in the model, " + std::to_string(budget) +
             " over budget";
  return r;
}

Result measure() {
  std::mt19937_64 rng(kSeed);
  int64_t checked = 0, bad = 0;
  for (int M = 0; M <= 6; ++M) {
    const size_t points = (size_t{1} << M) + 1;
    const Rational unit(1, int64_t{1} << M);
    auto counted = [&](const GridSet& b) {
      int64_t n = 0;
      for (size_t i = 0; i < points; ++i) n += b[i];
      return unit * n;
    };
    // b and c disjoint
    auto pair = [&](const GridSet& b, const GridSet& c) {
      GridSet u(points);
      for (size_t i = 0; i < points; ++i) u[i] = b[i] || c[i];
      Rational lb = grid_measure_eval(b, M), lc = grid_measure_eval(c, M);
      Rational lu = grid_measure_eval(u, M);
      bad += lb != counted(b);
      bad += lu != lb + lc;
      bad += lb > lu || lc > lu;
      ++checked;
    };
    bad += grid_measure_eval(GridSet(points, false), M) != Rational(0);
    bad += grid_measure_eval(GridSet(points, true), M) !=
           Rational((int64_t{1} << M) + 1, int64_t{1} << M);
    if (M <= 3) {
      // every ordered pair of disjoint sets: one ternary digit per point
      int64_t total = 1;
      for (size_t i = 0; i < points; ++i) total *= 3;
      for (int64_t code = 0; code < total; ++code) {
        GridSet b(points), c(points);
        int64_t x = code;
        for (size_t i = 0; i < points; ++i, x /= 3) {
          b[i] = x % 3 == 1;
          c[i] = x % 3 == 2;
        }
        pair(b, c);
      }
    } else if (M == 4) {
      // every set, split against a fixed mask
      for (uint64_t mask = 0; mask < (uint64_t{1} << points); ++mask) {
        GridSet b(points), c(points);
        for (size_t i = 0; i < points; ++i) {
          bool in = (mask >> i) & 1;
          b[i] = in && i % 3 == 0;
          c[i] = in && i % 3 != 0;
        }
        pair(b, c);
      }
    } else {
      std::uniform_int_distribution<int> digit(0, 2);
      for (int k = 0; k < 100000; ++k) {
        GridSet b(points), c(points);
        for (size_t i = 0; i < points; ++i) {
          int d = digit(rng);
          b[i] = d == 1;
          c[i] = d == 2;
        }
        pair(b, c);
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " disjoint pairs over M = 0..6, " +
                        std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  int failed = 0;
  failed += report(1, "golden chain", golden_chain);
  failed += report(2, "golden petzi", golden_petzi);
  failed += report(3, "sub-chain fixtures", sub_chains);
  failed += report(4, "S_st fixed point", fixed_point);
  failed += report(5, "rewrite soundness battery", battery_soundness);
  failed += report(6, "oracle agreement", oracle_agreement);
  failed += report(7, "witness extraction", witness_extraction);
  failed += report(8, "measure arithmetic", measure);
  return failed == 0 ? 0 : 1;
}
