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

#ifndef STNF_SRC_CORE_SEXP_HPP_
#define STNF_SRC_CORE_SEXP_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace stnf {

struct Sexp {
  bool is_list = false;
  std::string atom;
  std::vector<Sexp> items;
  int line = 1;
  int col = 1;

  bool is_atom(const char* s) const { return !is_list && atom == s; }
  std::string where() const;
};

struct SexpFile {
  std::vector<Sexp> forms;
  std::vector<std::string> comments;
};

SexpFile read_sexps(std::string_view text);
std::string write_sexp(const Sexp& s);

}  // namespace stnf

#endif  // STNF_SRC_CORE_SEXP_HPP_
