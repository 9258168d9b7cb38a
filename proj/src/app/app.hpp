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


#ifndef STNF_APP_APP_HPP_
#define STNF_APP_APP_HPP_

#include <optional>
#include <string>

#include "stnf/core.hpp"
#include "stnf/error.hpp"
#include "stnf/serialize.hpp"

namespace stnf::app {

enum ExitCode { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

struct Outcome {
  std::string output;
  int exit_code = kExitOk;
};

// Syntax, type, usage and model errors are usage errors; anything else
// (Stuck, NotValid, budget) counts as a failed run.
int exit_code_for(ErrorCode code);
Outcome error_outcome(const Error& e);

std::string read_file(const std::string& path);

Outcome parse_cmd(const std::string& text);
Outcome normalize_cmd(const std::string& text, bool trace, bool pretty);
Outcome check_cmd(const std::string& text, const std::string& model_json,
                  const std::optional<std::string>& against);
Outcome extract_cmd(const std::string& text, const std::string& model_json);
// `property` is a set variable name or a DSL formula in the hole variable a.
Outcome loeb_cmd(int variant, const std::string& property, bool normalize, bool pretty);
// Config keys: seed, per_rule, rules, max_assignments, models, non_closed.
Outcome battery_cmd(const std::string& config_json);
Outcome fixtures_cmd(const std::string& dir);

// Builder output for a fixture manifest entry, e.g. "loeb_zero_nf_1".
Formula builder_formula(const std::string& name);
Json run_fixtures(const std::string& dir, bool* all_ok);

}  // namespace stnf::app

#endif  // STNF_APP_APP_HPP_
