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

#include "stnf/type.hpp"

#include <algorithm>
#include <optional>

#include "stnf/error.hpp"

namespace stnf {

struct Type::Node {
  Kind kind;
  std::optional<Type> a;
  std::optional<Type> b;
  std::string text;
  int level;
};

Type::Type() : Type(base()) {}

Type Type::base() {
  static const Type t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kBase;
    n->text = "0";
    n->level = 0;
    return Type(std::shared_ptr<const Node>(n));
  }();
  return t;
}

Type Type::real() {
  static const Type t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kReal;
    n->text = "real";
    n->level = 0;
    return Type(std::shared_ptr<const Node>(n));
  }();
  return t;
}

Type Type::set() {
  static const Type t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kSet;
    n->text = "set";
    n->level = 1;
    return Type(std::shared_ptr<const Node>(n));
  }();
  return t;
}

Type Type::arrow(const Type& dom, const Type& cod) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kArrow;
  n->a = dom;
  n->b = cod;
  n->text = "(-> " + dom.str() + " " + cod.str() + ")";
  n->level = std::max(dom.level() + 1, cod.level());
  return Type(std::shared_ptr<const Node>(n));
}

Type Type::seq(const Type& elem) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSeq;
  n->a = elem;
  n->text = "(* " + elem.str() + ")";
  n->level = elem.level();
  return Type(std::shared_ptr<const Node>(n));
}

Type::Kind Type::kind() const { return node_->kind; }

const Type& Type::dom() const {
  if (kind() != Kind::kArrow) fail(ErrorCode::kType, "not a function type: " + str());
  return *node_->a;
}

const Type& Type::cod() const {
  if (kind() != Kind::kArrow) fail(ErrorCode::kType, "not a function type: " + str());
  return *node_->b;
}

const Type& Type::elem() const {
  if (kind() != Kind::kSeq) fail(ErrorCode::kType, "not a sequence type: " + str());
  return *node_->a;
}

int Type::level() const { return node_->level; }

std::string Type::str() const { return node_->text; }

bool Type::operator==(const Type& other) const {
  return node_ == other.node_ || node_->text == other.node_->text;
}

}  // namespace stnf
