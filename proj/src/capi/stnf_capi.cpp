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


#include "stnf/stnf.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "../app/app.hpp"
#include "stnf/dsl.hpp"
#include "stnf/lab.hpp"
#include "stnf/normalizer.hpp"

struct stnf_formula {
  stnf::Formula f;
};

struct stnf_model {
  std::unique_ptr<stnf::Universe> u;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
stnf_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return STNF_OK;
  } catch (const stnf::Error& e) {
    g_last_error = e.what();
    return static_cast<stnf_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return STNF_ERR_INTERNAL;
  }
}

stnf_status null_arg() {
  g_last_error = "null argument";
  return STNF_ERR_NULL_ARGUMENT;
}

template <class Fn>
int command(char** out, Fn&& fn) {
  if (!out) return stnf::app::kExitUsage;
  stnf::app::Outcome r;
  try {
    r = fn();
  } catch (const stnf::Error& e) {
    r = stnf::app::error_outcome(e);
  } catch (const std::exception& e) {
    r = stnf::app::error_outcome(stnf::Error(stnf::ErrorCode::kEval, e.what()));
  }
  *out = copy_string(r.output);
  return r.exit_code;
}

std::string str(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char* stnf_version(void) { return "1.0.0"; }

const char* stnf_last_error(void) { return g_last_error.c_str(); }

const char* stnf_status_name(stnf_status s) {
  switch (s) {
    case STNF_OK: return "Ok";
    case STNF_ERR_NULL_ARGUMENT: return "NullArgument";
    case STNF_ERR_INTERNAL: return "Internal";
    default:
      if (s > STNF_OK && s < STNF_ERR_NULL_ARGUMENT)
        return stnf::error_code_name(static_cast<stnf::ErrorCode>(s - 1));
      return "Unknown";
  }
}

void stnf_string_free(char* s) { std::free(s); }

stnf_status stnf_formula_parse(const char* text, stnf_formula** out) {
  if (!text || !out) return null_arg();
  return guarded([&] { *out = new stnf_formula{stnf::parse_file(text).formula}; });
}

void stnf_formula_free(stnf_formula* f) { delete f; }

stnf_status stnf_formula_to_sexp(const stnf_formula* f, char** out) {
  if (!f || !out) return null_arg();
  return guarded([&] { *out = copy_string(stnf::to_file_text(f->f)); });
}

stnf_status stnf_formula_to_json(const stnf_formula* f, char** out) {
  if (!f || !out) return null_arg();
  return guarded([&] { *out = copy_string(stnf::dump(stnf::to_json(f->f))); });
}

stnf_status stnf_formula_alpha_equiv(const stnf_formula* a, const stnf_formula* b, int* out) {
  if (!a || !b || !out) return null_arg();
  return guarded([&] { *out = stnf::alpha_equiv(a->f, b->f) ? 1 : 0; });
}

stnf_status stnf_formula_classify(const stnf_formula* f, stnf_classification* out) {
  if (!f || !out) return null_arg();
  return guarded([&] {
    switch (stnf::classify(f->f).kind) {
      case stnf::Classification::kInternal: *out = STNF_INTERNAL; break;
      case stnf::Classification::kNormalForm: *out = STNF_NORMAL_FORM; break;
      case stnf::Classification::kExternalOther: *out = STNF_EXTERNAL_OTHER; break;
    }
  });
}

stnf_status stnf_normalize(const stnf_formula* f, stnf_formula** nf, char** derivation_json) {
  if (!f || !nf) return null_arg();
  return guarded([&] {
    stnf::NormalizeResult r = stnf::normalize(f->f);
    if (derivation_json) *derivation_json = copy_string(stnf::dump(stnf::to_json(r.derivation)));
    *nf = new stnf_formula{r.nf.render()};
  });
}

stnf_status stnf_model_from_json(const char* json, stnf_model** out) {
  if (!json || !out) return null_arg();
  return guarded([&] {
    stnf::Json j;
    try {
      j = stnf::Json::parse(json);
    } catch (const stnf::Json::exception& e) {
      stnf::fail(stnf::ErrorCode::kInvalidModel, e.what());
    }
    stnf::FiniteModel m = stnf::FiniteModel::from_json(j);
    m.validate();
    *out = new stnf_model{std::make_unique<stnf::Universe>(m, stnf::default_budget())};
  });
}

void stnf_model_free(stnf_model* m) { delete m; }

stnf_status stnf_eval(const stnf_formula* f, stnf_model* m, const char* env_json, int* out) {
  if (!f || !m || !out) return null_arg();
  return guarded([&] {
    stnf::Env env;
    if (env_json) {
      stnf::Json j;
      try {
        j = stnf::Json::parse(env_json);
      } catch (const stnf::Json::exception& e) {
        stnf::fail(stnf::ErrorCode::kUsage, e.what());
      }
      env = stnf::env_from_json(j, stnf::free_vars(f->f), *m->u);
    }
    *out = stnf::eval(f->f, *m->u, env) ? 1 : 0;
  });
}

int stnf_cmd_parse(const char* text, char** out) {
  return command(out, [&] { return stnf::app::parse_cmd(str(text)); });
}

int stnf_cmd_normalize(const char* text, int trace, int pretty, char** out) {
  return command(out, [&] { return stnf::app::normalize_cmd(str(text), trace, pretty); });
}

int stnf_cmd_check(const char* text, const char* model_json, const char* against, char** out) {
  return command(out, [&] {
    std::optional<std::string> g;
    if (against) g = against;
    return stnf::app::check_cmd(str(text), str(model_json), g);
  });
}

int stnf_cmd_extract(const char* text, const char* model_json, char** out) {
  return command(out, [&] { return stnf::app::extract_cmd(str(text), str(model_json)); });
}

int stnf_cmd_loeb(int variant, const char* property, int normalize, int pretty, char** out) {
  return command(out, [&] {
    return stnf::app::loeb_cmd(variant, property ? property : "A", normalize, pretty);
  });
}

int stnf_cmd_battery(const char* config_json, char** out) {
  return command(out, [&] { return stnf::app::battery_cmd(str(config_json)); });
}

int stnf_cmd_fixtures(const char* dir, char** out) {
  return command(out, [&] {
    return stnf::app::fixtures_cmd(dir ? dir : STNF_DEFAULT_FIXTURE_DIR);
  });
}

}  // extern "C"
