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

#ifndef STNF_LAB_HPP_
#define STNF_LAB_HPP_

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stnf/core.hpp"
#include "stnf/model.hpp"
#include "stnf/normalizer.hpp"

namespace stnf {

// Compiled evaluator for one formula over one universe.  Memo tables are
// kept between runs, so repeated runs with different values of the free
// variables share work on subformulas that do not mention them.
struct EvalOptions {
  // An existential over a sequence sort whose body is upward monotone in
  // the variable only tries the maximal sequences; a universal whose body
  // is downward monotone only tries the empty one.
  bool monotone_pruning = true;
};

class Evaluator {
 public:
  Evaluator(Universe& u, const Formula& f, const EvalOptions& opt = {});
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  // Free variables in name order.
  const std::vector<std::pair<std::string, Type>>& free_vars() const;
  bool run(const std::vector<Value>& values);
  // Throws Error(kEval) when a free variable is unassigned.
  bool run(const Env& env);

  // Zero disables the limit; past it run() throws Error(kBudgetExceeded).
  void set_step_limit(uint64_t limit);
  uint64_t steps() const;
  void clear_memo();

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

bool eval(const Formula& f, Universe& u, const Env& env = {});
bool eval(const Formula& f, const FiniteModel& m, const Env& env = {});
Value eval_term(const Term& t, Universe& u, const Env& env = {});

Env env_from_json(const Json& j, const VarMap& vars, Universe& u);
Json env_to_json(const Env& env, const VarMap& vars, Universe& u);

struct EquivOptions {
  // Assignments violating an assumption are skipped.
  std::vector<Formula> assumptions;
  uint64_t max_assignments = 0;  // zero means default_budget()
  EvalOptions eval{false};
};

struct EquivResult {
  enum class Status { kEquivalent, kCounterexample, kBudgetExceeded };
  Status status = Status::kEquivalent;
  Env counterexample;
  bool f_value = false;
  bool g_value = false;
  uint64_t checked = 0;
  uint64_t skipped = 0;
  uint64_t space = 0;
  Json to_json(const VarMap& vars, Universe& u) const;
};

EquivResult check_equiv(const Formula& f, const Formula& g, Universe& u,
                        const EquivOptions& opt = {});

// Herbrand witness table for a normal form: for each standard tuple of the
// universal block, a finite list of tuples for the existential block.
struct WitnessTable {
  std::vector<Binder> univ;
  std::vector<Binder> exist;
  struct Row {
    std::vector<Value> x;
    std::vector<std::vector<Value>> ys;
  };
  std::vector<Row> rows;
  // Parameter assignments the table was checked against.
  std::vector<Env> params;
  Json to_json(Universe& u) const;
};

// Parameters fixed by `params`; any remaining free variable of the matrix
// is enumerated over its whole sort.  Throws Error(kNotValid).
WitnessTable extract_witnesses(const NormalForm& nf, Universe& u, const Env& params = {});

struct WitnessCheck {
  bool herbrand = false;
  bool minimal = false;
  bool complete = false;
  std::string detail;
  bool ok() const { return herbrand && minimal && complete; }
};
WitnessCheck verify_witnesses(const NormalForm& nf, const WitnessTable& t, Universe& u);

// Grid subsets of {i/2^M : 0 <= i <= 2^M}.
using GridSet = std::vector<bool>;
using Rational = boost::rational<int64_t>;

GridSet grid_set_from_mask(uint64_t mask, int M);
uint64_t grid_set_mask(const GridSet& b);
Rational grid_measure_eval(const GridSet& b, int M);
bool almost_subset_eval(const GridSet& c, const GridSet& d, const FiniteModel& m);

// Brute-force truth of the Loeb-measure-zero statement for an explicit set
// of grid indices.  Throws Error(kBudgetExceeded) for M > 4.
bool loeb_zero_oracle(const std::vector<int64_t>& a, const FiniteModel& m, int variant);
// Grid indices in the standard preimage of `a`.
GridSet st_preimage_oracle(const std::vector<int64_t>& a, const FiniteModel& m, int variant);

// Random formulas on which one rewrite rule fires, with the rewrite applied.
struct GeneratedCase {
  Rule rule;
  Formula input;
  Context params;
  Derivation derivation;
};

std::vector<GeneratedCase> generate_cases(Rule rule, int count, uint64_t seed);

struct BatteryConfig {
  uint64_t seed = 20260101;
  int per_rule = 100;
  std::vector<Rule> rules;  // empty means every rule
  uint64_t max_assignments = 0;
};

struct BatteryReport {
  struct RuleStats {
    int formulas = 0;
    int steps = 0;
    int checks = 0;
    int counterexamples = 0;
    int budget_exceeded = 0;
  };
  std::map<std::string, RuleStats> per_rule;
  struct Failure {
    std::string rule;
    size_t model = 0;
    std::string before;
    std::string after;
    Json counterexample;
  };
  std::vector<Failure> failures;
  size_t models = 0;
  bool all_standard_closed = true;
  double seconds = 0;
  bool passed() const;
  Json to_json() const;
};

std::vector<FiniteModel> default_battery_models();
// A model with L too small to hold all standard numbers in one sequence.
FiniteModel non_standard_closed_model();

BatteryReport battery(const std::vector<FiniteModel>& models, const BatteryConfig& cfg);

}  // namespace stnf

#endif  // STNF_LAB_HPP_
