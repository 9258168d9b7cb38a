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

#ifndef STNF_DSL_HPP_
#define STNF_DSL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "stnf/core.hpp"

namespace stnf {

// S-expression surface syntax, for example
//   (forall-st (x 0) (exists-st (y 0) (<= x y)))
// Types: 0, real, set, (-> a b ...), (* a).
// A file may start with (declare (A set) ...) to give free variables types.

struct ParsedFile {
  Formula formula;
  Context declared;
  std::vector<std::string> comments;
};

ParsedFile parse_file(std::string_view text);
Formula parse_formula(std::string_view text, const Context& ctx = {});
Term parse_term(std::string_view text, const Context& ctx = {});
Type parse_type(std::string_view text);

std::string to_sexp(const Type& t);
std::string to_sexp(const Term& t);
std::string to_sexp(const Formula& f);
// Declarations for the free variables followed by the formula; parses back
// to an alpha-equivalent formula.
std::string to_file_text(const Formula& f);

// Conventional mathematical notation.
std::string pretty(const Term& t);
std::string pretty(const Formula& f);

}  // namespace stnf

#endif  // STNF_DSL_HPP_
