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
#include <filesystem>
#include <set>

#include "app/app.hpp"
#include "doctest.h"
#include "stnf/dsl.hpp"
#include "stnf/normalizer.hpp"

using namespace stnf;

namespace {

const std::filesystem::path kDir = STNF_DEFAULT_FIXTURE_DIR;

ParsedFile load(const char* name) { return parse_file(app::read_file((kDir / name).string())); }

}  // namespace

TEST_CASE("every fixture check passes") {
  bool ok = false;
  Json j = app::run_fixtures(kDir.string(), &ok);
  for (const Json& e : j["fixtures"]) {
    INFO(e.dump());
    CHECK(e["ok"].get<bool>());
  }
  CHECK(ok);
}

TEST_CASE("every fixture file is listed and has a header") {
  Json manifest = Json::parse(app::read_file((kDir / "manifest.json").string()));
  std::set<std::string> listed;
  for (const Json& e : manifest["fixtures"]) {
    listed.insert(e["file"].get<std::string>());
    for (const char* key : {"expect", "normalize"})
      if (e.contains(key)) listed.insert(e[key].get<std::string>());
  }
  for (const auto& entry : std::filesystem::directory_iterator(kDir)) {
    if (entry.path().extension() != ".sexp") continue;
    std::string name = entry.path().filename().string();
    INFO(name);
    CHECK(listed.count(name) == 1);
    ParsedFile p = load(name.c_str());
    REQUIRE_FALSE(p.comments.empty());
    CHECK(p.comments.front().find('\\') != std::string::npos);
  }
}

TEST_CASE("oji sub-chain is reproduced exactly") {
  Formula in = load("oji_input.sexp").formula;
  RewriteResult a = idealize(in);
  CHECK(to_sexp(a.output) == to_sexp(load("oji.sexp").formula));
  RewriteResult b = max_collapse(a.output);
  CHECK(to_sexp(b.output) == to_sexp(load("oji2.sexp").formula));
}

TEST_CASE("petzi instances normalize quickly") {
  for (const char* name : {"petzi.sexp", "petzi_fn.sexp"}) {
    auto t0 = std::chrono::steady_clock::now();
    NormalizeResult r = normalize(load(name).formula);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 1.0);
    CHECK(r.derivation.steps.front().rule == Rule::kElimNonstandardParam);
    CHECK(r.derivation.steps.back().rule == Rule::kIdealize);
  }
}
