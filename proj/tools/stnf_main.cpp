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


#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stnf/stnf.h"

namespace {

bool slurp(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

int usage_error(const std::string& msg) {
  nlohmann::json j{{"error", {{"code", "Usage"}, {"message", msg}}}};
  std::cout << j.dump() << "\n";
  return 2;
}

int emit(int code, char** out) {
  if (*out) std::fputs(*out, stdout);
  stnf_string_free(*out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stnf: normal forms for nonstandard formulas"};
  app.require_subcommand(1);
  app.set_version_flag("--version", stnf_version());

  std::string file, model, against, property = "A", config, dir;
  bool trace = false, pretty = false, normalize = false, run_all = false, non_closed = false;
  int variant = 1, per_rule = -1;
  long long seed = -1;

  auto* parse = app.add_subcommand("parse", "Parse a DSL file and classify it");
  parse->add_option("file", file)->required();

  auto* norm = app.add_subcommand("normalize", "Normalize a formula");
  norm->add_option("file", file)->required();
  norm->add_flag("--trace", trace, "Include the derivation");
  norm->add_flag("--pretty", pretty, "Print the chain one equivalence per line");

  auto* check = app.add_subcommand("check", "Check validity or equivalence on a finite model");
  check->add_option("file", file)->required();
  check->add_option("--model", model)->required();
  check->add_option("--against", against);

  auto* extract = app.add_subcommand("extract", "Extract Herbrand witnesses");
  extract->add_option("file", file)->required();
  extract->add_option("--model", model)->required();

  auto* loeb = app.add_subcommand("loeb", "Build L*(A) ~ 0 for a point property");
  loeb->add_option("--variant", variant)->check(CLI::IsMember({1, 2}));
  loeb->add_option("--set", property, "Set variable or DSL formula in the hole a");
  loeb->add_flag("--normalize", normalize);
  loeb->add_flag("--pretty", pretty);

  auto* battery = app.add_subcommand("battery", "Run the rewrite soundness battery");
  battery->add_option("--config", config, "JSON config file");
  battery->add_option("--per-rule", per_rule);
  battery->add_option("--seed", seed);
  battery->add_flag("--non-closed", non_closed, "Also run Idealize on the non standard-closed model");

  auto* fixtures = app.add_subcommand("fixtures", "Check the golden fixtures");
  fixtures->add_flag("--run-all", run_all);
  fixtures->add_option("--dir", dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  char* out = nullptr;
  std::string text;
  if (parse->parsed() || norm->parsed() || check->parsed() || extract->parsed()) {
    if (!slurp(file, &text)) return usage_error("cannot read " + file);
  }
  if (parse->parsed()) return emit(stnf_cmd_parse(text.c_str(), &out), &out);
  if (norm->parsed()) return emit(stnf_cmd_normalize(text.c_str(), trace, pretty, &out), &out);
  if (check->parsed() || extract->parsed()) {
    std::string m;
    if (!slurp(model, &m)) return usage_error("cannot read " + model);
    if (extract->parsed()) return emit(stnf_cmd_extract(text.c_str(), m.c_str(), &out), &out);
    std::string g;
    if (!against.empty() && !slurp(against, &g)) return usage_error("cannot read " + against);
    return emit(stnf_cmd_check(text.c_str(), m.c_str(), against.empty() ? nullptr : g.c_str(),
                               &out),
                &out);
  }
  if (loeb->parsed())
    return emit(stnf_cmd_loeb(variant, property.c_str(), normalize, pretty, &out), &out);
  if (battery->parsed()) {
    std::string cfg = "{}";
    if (!config.empty() && !slurp(config, &cfg)) return usage_error("cannot read " + config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(cfg);
    } catch (const nlohmann::json::exception&) {
      return usage_error("bad battery config");
    }
    if (per_rule >= 0) j["per_rule"] = per_rule;
    if (seed >= 0) j["seed"] = seed;
    if (non_closed) j["non_closed"] = true;
    cfg = j.dump();
    return emit(stnf_cmd_battery(cfg.c_str(), &out), &out);
  }
  if (fixtures->parsed()) {
    if (!run_all) return usage_error("fixtures needs --run-all");
    return emit(stnf_cmd_fixtures(dir.empty() ? nullptr : dir.c_str(), &out), &out);
  }
  return 2;
}
