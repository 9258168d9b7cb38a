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

#ifndef STNF_TYPE_HPP_
#define STNF_TYPE_HPP_

#include <memory>
#include <string>

namespace stnf {

// Finite types. Real is a point of the grid {i/2^M}; Set is a subset of
// that grid.
class Type {
 public:
  enum class Kind { kBase, kReal, kSet, kArrow, kSeq };

  Type();
  static Type base();
  static Type real();
  static Type set();
  static Type arrow(const Type& dom, const Type& cod);
  static Type seq(const Type& elem);
  // Curried arrow a1 -> a2 -> ... -> cod.
  template <typename It>
  static Type curried(It first, It last, Type cod) {
    while (last != first) {
      --last;
      cod = arrow(*last, cod);
    }
    return cod;
  }

  Kind kind() const;
  bool is_base() const { return kind() == Kind::kBase; }
  bool is_arrow() const { return kind() == Kind::kArrow; }
  bool is_seq() const { return kind() == Kind::kSeq; }
  const Type& dom() const;
  const Type& cod() const;
  const Type& elem() const;

  int level() const;
  std::string str() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }
  bool operator<(const Type& other) const { return str() < other.str(); }

 public:
  struct Node;

 private:
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace stnf

#endif  // STNF_TYPE_HPP_
