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

#include "stnf/error.hpp"
#include "stnf/model.hpp"
#include "type_info.hpp"

namespace stnf {

Json Universe::to_json(TypeInfo* t, Value v) {
  switch (t->kind) {
    case Type::Kind::kBase:
      return v;
    case Type::Kind::kReal:
      return Json{{"grid", v}, {"M", model_.M}};
    case Type::Kind::kSet: {
      Json pts = Json::array();
      for (int64_t i = 0; i < model_.grid_size(); ++i)
        if (v >> i & 1) pts.push_back(i);
      return Json{{"set", pts}};
    }
    case Type::Kind::kSeq: {
      Json items = Json::array();
      for (Value e : t->seqs[static_cast<size_t>(v)]) items.push_back(to_json(t->elem, e));
      return items;
    }
    case Type::Kind::kArrow: {
      const auto& fn = t->fns[static_cast<size_t>(v)];
      if (fn.is_const) return Json{{"const", to_json(t->cod, fn.c)}};
      if (t->f1)
        for (size_t i = 0; i < model_.F1.size(); ++i)
          if (model_.F1[i] == fn.table) return Json{{"F1", i}};
      Json tab = Json::array();
      for (Value e : fn.table) tab.push_back(to_json(t->cod, e));
      return Json{{"table", tab}};
    }
  }
  return nullptr;
}

Value Universe::from_json(TypeInfo* t, const Json& j) {
  auto bad = [&](const std::string& why) -> Value {
    fail(ErrorCode::kEval, "bad value for type " + t->type.str() + ": " + why);
  };
  switch (t->kind) {
    case Type::Kind::kBase:
      if (!j.is_number_integer()) return bad("expected integer");
      return j.get<Value>();
    case Type::Kind::kReal: {
      Json g = j.is_object() ? j.value("grid", Json()) : j;
      if (!g.is_number_integer()) return bad("expected grid index");
      Value v = g.get<Value>();
      if (v < 0 || v >= model_.grid_size()) return bad("grid index out of range");
      return v;
    }
    case Type::Kind::kSet: {
      Json pts = j.is_object() ? j.value("set", Json()) : j;
      if (!pts.is_array()) return bad("expected list of grid indices");
      if (model_.grid_size() > 62) return bad("grid too large for set values");
      Value mask = 0;
      for (const auto& p : pts) {
        if (!p.is_number_integer()) return bad("expected grid index");
        Value i = p.get<Value>();
        if (i < 0 || i >= model_.grid_size()) return bad("grid index out of range");
        mask |= Value{1} << i;
      }
      return mask;
    }
    case Type::Kind::kSeq: {
      if (!j.is_array()) return bad("expected list");
      std::vector<Value> items;
      for (const auto& e : j) items.push_back(from_json(t->elem, e));
      return seq(t, items);
    }
    case Type::Kind::kArrow: {
      if (!j.is_object()) return bad("expected object");
      if (j.contains("const")) return fn_const(t, from_json(t->cod, j["const"]));
      if (j.contains("F1") && t->f1) {
        size_t i = j["F1"].get<size_t>();
        if (i >= model_.F1.size()) return bad("F1 index out of range");
        return fn_table(t, model_.F1[i]);
      }
      if (j.contains("table") && j["table"].is_array()) {
        std::vector<Value> tab;
        for (const auto& e : j["table"]) tab.push_back(from_json(t->cod, e));
        if (tab.size() != all(t->dom).size()) return bad("table size must match domain");
        return fn_table(t, tab);
      }
      return bad("expected const, F1 or table");
    }
  }
  return bad("unknown type");
}

}  // namespace stnf
