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

#ifndef STNF_SERIALIZE_HPP_
#define STNF_SERIALIZE_HPP_

#include "json.hpp"
#include "stnf/core.hpp"

namespace stnf {

using Json = nlohmann::json;

Json to_json(const Type& t);
Json to_json(const Term& t);
Json to_json(const Formula& f);
Json to_json(const Binder& b);
Json to_json(const NormalForm& nf);

Type type_from_json(const Json& j);
Term term_from_json(const Json& j);
Formula formula_from_json(const Json& j);

// Stable textual form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace stnf

#endif  // STNF_SERIALIZE_HPP_
