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

#include "sexp.hpp"

#include <cctype>

#include "stnf/error.hpp"

namespace stnf {

std::string Sexp::where() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SexpFile run() {
    SexpFile out;
    skip(&out.comments);
    while (pos_ < text_.size()) {
      out.forms.push_back(read());
      skip(nullptr);
    }
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip(std::vector<std::string>* comments) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        if (comments) {
          std::string_view body = text_.substr(start, pos_ - start);
          while (!body.empty() && body.front() == ';') body.remove_prefix(1);
          if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
          comments->emplace_back(body);
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::kSyntax, what + " at line " + std::to_string(line_) +
                                 ", column " + std::to_string(col_));
  }

  Sexp read() {
    Sexp s;
    s.line = line_;
    s.col = col_;
    char c = text_[pos_];
    if (c == ')') error("unexpected ')'");
    if (c == '(') {
      s.is_list = true;
      advance();
      for (;;) {
        skip(nullptr);
        if (pos_ >= text_.size()) {
          fail(ErrorCode::kSyntax, "unbalanced '(' opened at line " +
                                       std::to_string(s.line) + ", column " +
                                       std::to_string(s.col));
        }
        if (text_[pos_] == ')') {
          advance();
          return s;
        }
        s.items.push_back(read());
      }
    }
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' ||
          std::isspace(static_cast<unsigned char>(d)))
        break;
      advance();
    }
    s.atom = std::string(text_.substr(start, pos_ - start));
    return s;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

SexpFile read_sexps(std::string_view text) { return Reader(text).run(); }

std::string write_sexp(const Sexp& s) {
  if (!s.is_list) return s.atom;
  std::string out = "(";
  for (size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ' ';
    out += write_sexp(s.items[i]);
  }
  return out + ")";
}

}  // namespace stnf
