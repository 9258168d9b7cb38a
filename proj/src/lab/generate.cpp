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
#include <functional>
#include <random>

#include "stnf/dsl.hpp"
#include "stnf/error.hpp"
#include "stnf/lab.hpp"

namespace stnf {

namespace {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  int pick(int n) { return static_cast<int>(rng_() % static_cast<uint64_t>(n)); }
  bool coin(int percent) { return pick(100) < percent; }
  std::string fresh(const std::string& base) { return base + std::to_string(++counter_); }

  std::vector<std::string> nats;
  std::vector<std::string> reals;
  bool has_f = false;

  std::string nat_term() {
    int r = pick(10);
    if (nats.empty() || r < 2) return std::to_string(pick(4));
    const std::string& v = nats[pick(static_cast<int>(nats.size()))];
    if (r == 2) return "(+ " + v + " 1)";
    if (r == 3 && has_f) return "(f " + v + ")";
    return v;
  }

  std::string real_term() {
    if (reals.empty() || coin(25)) return "(grid " + std::to_string(pick(5)) + " 2)";
    return reals[pick(static_cast<int>(reals.size()))];
  }

  std::string atom() {
    if (!reals.empty() && coin(50)) {
      std::string a = real_term(), b = real_term();
      switch (pick(4)) {
        case 0: return "(real<= " + a + " " + b + ")";
        case 1: return "(real< " + a + " " + b + ")";
        case 2: return "(= " + a + " " + b + ")";
        default: return "(approx-eq " + a + " " + b + " " + std::to_string(pick(3)) + ")";
      }
    }
    std::string a = nat_term(), b = nat_term();
    switch (pick(3)) {
      case 0: return "(= " + a + " " + b + ")";
      case 1: return "(<= " + a + " " + b + ")";
      default: return "(< " + a + " " + b + ")";
    }
  }

  // Internal formula over the variables in scope.
  std::string matrix(int depth) {
    if (depth == 0 || coin(35)) return atom();
    switch (pick(6)) {
      case 0: return "(and " + matrix(depth - 1) + " " + matrix(depth - 1) + ")";
      case 1: return "(or " + matrix(depth - 1) + " " + matrix(depth - 1) + ")";
      case 2: return "(implies " + matrix(depth - 1) + " " + matrix(depth - 1) + ")";
      case 3: return "(not " + matrix(depth - 1) + ")";
      default: {
        std::string z = fresh("z");
        std::string q = coin(50) ? "forall" : "exists";
        nats.push_back(z);
        std::string body = matrix(depth - 1);
        nats.pop_back();
        return "(" + q + " (" + z + " 0) " + body + ")";
      }
    }
  }

  // Internal formula upward monotone in the number variable k.
  std::string monotone(const std::string& k, int depth) {
    if (depth == 0 || coin(30)) {
      auto saved = nats;
      nats.erase(std::remove(nats.begin(), nats.end(), k), nats.end());
      std::string out;
      switch (pick(4)) {
        case 0: out = "(<= " + nat_term() + " " + k + ")"; break;
        case 1: out = "(< " + nat_term() + " " + k + ")"; break;
        case 2: out = "(not (<= " + k + " " + nat_term() + "))"; break;
        default: out = matrix(1); break;
      }
      nats = saved;
      return out;
    }
    switch (pick(3)) {
      case 0: return "(and " + monotone(k, depth - 1) + " " + monotone(k, depth - 1) + ")";
      case 1: return "(or " + monotone(k, depth - 1) + " " + monotone(k, depth - 1) + ")";
      default: {
        std::string z = fresh("z");
        nats.push_back(z);
        std::string body = monotone(k, depth - 1);
        nats.pop_back();
        return "(" + std::string(coin(50) ? "forall" : "exists") + " (" + z + " 0) " + body + ")";
      }
    }
  }

  // st quantifier over a number, optionally bounded by the free sequence w.
  std::string st_quant(bool universal, bool allow_guard, const std::function<std::string()>& body) {
    std::string x = fresh(universal ? "x" : "y");
    std::string guard = allow_guard && coin(30) ? " :in w" : "";
    if (!guard.empty()) uses_w = true;
    nats.push_back(x);
    std::string b = body();
    nats.pop_back();
    return "(" + std::string(universal ? "forall-st" : "exists-st") + " (" + x + " 0" + guard +
           ") " + b + ")";
  }

  // External formula with st quantifiers that prenex moves can pull out.
  std::string external(int depth) {
    auto leaf = [&] { return st_quant(coin(50), true, [&] { return matrix(2); }); };
    if (depth == 0) return leaf();
    switch (pick(7)) {
      case 0: return "(and " + external(depth - 1) + " " + matrix(1) + ")";
      case 1: return "(or " + matrix(1) + " " + external(depth - 1) + ")";
      case 2: return "(implies " + external(depth - 1) + " " + matrix(1) + ")";
      case 3: return "(implies " + matrix(1) + " " + external(depth - 1) + ")";
      case 4: return "(not " + external(depth - 1) + ")";
      case 5: return "(and " + external(depth - 1) + " " + external(depth - 1) + ")";
      default: {
        bool universal = coin(50);
        std::string z = fresh("z");
        nats.push_back(z);
        std::string inner =
            st_quant(universal, true, [&] { return coin(50) ? matrix(2) : external(0); });
        nats.pop_back();
        return "(" + std::string(universal ? "forall" : "exists") + " (" + z + " 0) " + inner + ")";
      }
    }
  }

  bool uses_w = false;

 private:
  std::mt19937_64 rng_;
  int counter_ = 0;
};

struct Attempt {
  std::string text;
  std::function<Derivation(const Formula&)> apply;
};

Derivation via_normalize(const Formula& f) { return normalize(f).derivation; }

std::string st_or_matrix(Gen& g) {
  return g.st_quant(true, false, [&] { return g.matrix(1); });
}

std::string nf_text(Gen& g, const std::string& y_type = "0") {
  std::string x = g.fresh("x"), y = g.fresh("y");
  g.nats.push_back(x);
  if (y_type == "0") g.nats.push_back(y); else g.reals.push_back(y);
  std::string m = g.matrix(2);
  if (y_type == "0") g.nats.pop_back(); else g.reals.pop_back();
  g.nats.pop_back();
  return "(forall-st (" + x + " 0) (exists-st (" + y + " " + y_type + ") " + m + "))";
}

std::string property_text(Gen& g) {
  std::string i = std::to_string(g.pick(5));
  switch (g.pick(4)) {
    case 0: return "(real<= h (grid " + i + " 2))";
    case 1: return "(exists-st (c real) (approx-eq h c " + std::to_string(g.pick(3)) + "))";
    case 2: return "(not (approx-eq h (grid " + i + " 2) 1))";
    default: return "(forall-st (c real) (implies (real< c h) (approx-eq h c 1)))";
  }
}

Attempt attempt(Rule rule, Gen& g) {
  switch (rule) {
    case Rule::kPrenexSt:
      return {g.external(2), [](const Formula& f) { return prenex_st(f).derivation; }};
    case Rule::kClassicalPrenex: {
      std::string inner;
      switch (g.pick(4)) {
        case 0: inner = "(and " + g.external(1) + " " + g.matrix(1) + ")"; break;
        case 1: inner = "(implies " + g.matrix(1) + " " + g.external(1) + ")"; break;
        case 2: inner = "(not " + g.external(1) + ")"; break;
        default: inner = "(or " + g.external(0) + " " + g.matrix(1) + ")"; break;
      }
      return {"(not " + inner + ")", via_normalize};
    }
    case Rule::kIdealize: {
      bool real = g.coin(30);
      std::string z = g.fresh("z"), y = g.fresh("y");
      std::string guard = g.coin(25) ? " :in w" : "";
      if (!guard.empty()) g.uses_w = true;
      g.nats.push_back(z);
      if (real) g.reals.push_back(y); else g.nats.push_back(y);
      std::string m = g.matrix(2);
      if (!real && g.coin(30))
        m = "(and (implies (<= " + z + " " + std::to_string(g.pick(4)) + ") (= " + y + " " + z +
            ")) " + m + ")";
      return {"(forall (" + z + " 0" + guard + ") (exists-st (" + y + (real ? " real" : " 0") +
                  ") " + m + "))",
              [](const Formula& f) { return idealize(f).derivation; }};
    }
    case Rule::kMaxCollapse: {
      std::string z = g.fresh("z");
      g.nats.push_back(z);
      g.nats.push_back("k");
      std::string m = g.monotone("k", 2);
      return {"(exists-st (K (* 0)) (forall (" + z + " 0) (exists (k 0 :in K) " + m + ")))",
              [](const Formula& f) { return max_collapse(f, "K").derivation; }};
    }
    case Rule::kHerbrandize:
      return {nf_text(g, g.coin(30) ? "real" : "0"),
              [](const Formula& f) { return herbrandize(f).derivation; }};
    case Rule::kSkolemizeAntecedent: {
      std::string x = g.fresh("x");
      g.nats.push_back(x);
      g.nats.push_back("y");
      std::string a = g.coin(50) ? g.monotone("y", 2) : g.matrix(2);
      g.nats.pop_back();
      g.nats.pop_back();
      std::string c = g.coin(50) ? g.matrix(1) : st_or_matrix(g);
      return {"(implies (forall-st (" + x + " 0) (exists-st (y 0) " + a + ")) " + c + ")",
              [](const Formula& f) { return skolemize_antecedent(f).derivation; }};
    }
    case Rule::kElimNonstandardParam: {
      g.nats.push_back("M");
      std::string nf = nf_text(g);
      g.nats.pop_back();
      return {"(forall (M 0) (implies (not (st M)) " + nf + "))",
              [](const Formula& f) { return eliminate_nonstandard_param(f).derivation; }};
    }
    case Rule::kNegateNF: {
      if (g.coin(50)) return {"(not " + nf_text(g) + ")", [](const Formula& f) {
                                return negate_normal_form(f).derivation;
                              }};
      std::string u = g.fresh("u");
      g.nats.push_back(u);
      std::string inner = nf_text(g);
      g.nats.pop_back();
      return {"(exists-st (" + u + " 0) " + inner + ")",
              [](const Formula& f) { return negate_normal_form(f).derivation; }};
    }
    case Rule::kSubstituteProperty: {
      std::string a = g.fresh("a");
      g.reals.push_back(a);
      std::string m = g.matrix(1);
      g.reals.pop_back();
      std::string text;
      switch (g.pick(4)) {
        case 0: text = "(forall-st (" + a + " real) (implies (in " + a + " A) " + m + "))"; break;
        case 1: text = "(exists (" + a + " real :in A) " + m + ")"; break;
        case 2: text = "(forall (" + a + " real) (or (not (in " + a + " A)) " + m + "))"; break;
        default: text = "(exists-st (" + a + " real) (and (in " + a + " A) " + m + "))"; break;
      }
      std::string prop = property_text(g);
      return {text, [prop](const Formula& f) {
                Formula p = parse_formula(prop, Context{{"h", Type::real()}});
                return substitute_property(f, "A", p, "h").derivation;
              }};
    }
  }
  fail(ErrorCode::kUsage, "unknown rule");
}

}  // namespace

std::vector<GeneratedCase> generate_cases(Rule rule, int count, uint64_t seed) {
  std::vector<GeneratedCase> out;
  std::mt19937_64 seeds(seed ^ (0x9E3779B97F4A7C15ull * (static_cast<uint64_t>(rule) + 1)));
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < count * 50; ++tries) {
    Gen g(seeds());
    Context ctx;
    if (g.coin(30)) {
      g.nats.push_back("p");
      ctx["p"] = Type::base();
    }
    if (g.coin(20)) {
      g.has_f = true;
      ctx["f"] = Type::arrow(Type::base(), Type::base());
    }
    Attempt a = attempt(rule, g);
    if (g.uses_w) ctx["w"] = Type::seq(Type::base());
    if (rule == Rule::kSubstituteProperty) ctx["A"] = Type::set();
    try {
      Formula f = parse_formula(a.text, ctx);
      Derivation d = a.apply(f);
      bool fired = false;
      for (const auto& s : d.steps) fired = fired || s.rule == rule;
      if (!fired) continue;
      VarMap used = free_vars(f);
      Context params;
      for (const auto& [n, t] : ctx)
        if (used.count(n)) params[n] = t;
      out.push_back(GeneratedCase{rule, f, params, d});
    } catch (const Error&) {
      continue;
    }
  }
  return out;
}

}  // namespace stnf
