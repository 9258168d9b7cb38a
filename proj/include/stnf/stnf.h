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


#ifndef STNF_STNF_H_
#define STNF_STNF_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(STNF_BUILDING_LIBRARY)
#define STNF_API __attribute__((visibility("default")))
#else
#define STNF_API
#endif

typedef enum {
  STNF_OK = 0,
  STNF_ERR_SYNTAX,
  STNF_ERR_TYPE,
  STNF_ERR_NOT_APPLICABLE,
  STNF_ERR_NOT_MONOTONE,
  STNF_ERR_UNSUPPORTED_SHAPE,
  STNF_ERR_STUCK,
  STNF_ERR_HOLE_TYPE_MISMATCH,
  STNF_ERR_SORT_TOO_LARGE,
  STNF_ERR_BUDGET_EXCEEDED,
  STNF_ERR_NOT_VALID,
  STNF_ERR_INVALID_MODEL,
  STNF_ERR_EVAL,
  STNF_ERR_USAGE,
  STNF_ERR_NULL_ARGUMENT,
  STNF_ERR_INTERNAL
} stnf_status;

typedef enum {
  STNF_INTERNAL = 0,
  STNF_NORMAL_FORM = 1,
  STNF_EXTERNAL_OTHER = 2
} stnf_classification;

typedef struct stnf_formula stnf_formula;
typedef struct stnf_model stnf_model;

STNF_API const char* stnf_version(void);
/* Message of the last failed call on this thread; empty if none. */
STNF_API const char* stnf_last_error(void);
STNF_API const char* stnf_status_name(stnf_status s);
STNF_API void stnf_string_free(char* s);

STNF_API stnf_status stnf_formula_parse(const char* text, stnf_formula** out);
STNF_API void stnf_formula_free(stnf_formula* f);
STNF_API stnf_status stnf_formula_to_sexp(const stnf_formula* f, char** out);
STNF_API stnf_status stnf_formula_to_json(const stnf_formula* f, char** out);
STNF_API stnf_status stnf_formula_alpha_equiv(const stnf_formula* a, const stnf_formula* b,
                                              int* out);
STNF_API stnf_status stnf_formula_classify(const stnf_formula* f, stnf_classification* out);
/* derivation_json may be NULL. */
STNF_API stnf_status stnf_normalize(const stnf_formula* f, stnf_formula** nf,
                                    char** derivation_json);

STNF_API stnf_status stnf_model_from_json(const char* json, stnf_model** out);
STNF_API void stnf_model_free(stnf_model* m);
/* env_json maps free variables to values; may be NULL for closed formulas. */
STNF_API stnf_status stnf_eval(const stnf_formula* f, stnf_model* m, const char* env_json,
                               int* out);

/* Command layer. Each call returns the process exit code (0 ok, 1 stuck or
   counterexample, 2 usage error) and stores the command output in *out. */
STNF_API int stnf_cmd_parse(const char* text, char** out);
STNF_API int stnf_cmd_normalize(const char* text, int trace, int pretty, char** out);
STNF_API int stnf_cmd_check(const char* text, const char* model_json, const char* against,
                            char** out);
STNF_API int stnf_cmd_extract(const char* text, const char* model_json, char** out);
STNF_API int stnf_cmd_loeb(int variant, const char* property, int normalize, int pretty,
                           char** out);
STNF_API int stnf_cmd_battery(const char* config_json, char** out);
/* dir may be NULL for the fixture directory of the source tree. */
STNF_API int stnf_cmd_fixtures(const char* dir, char** out);

#ifdef __cplusplus
}
#endif

#endif  /* STNF_STNF_H_ */
