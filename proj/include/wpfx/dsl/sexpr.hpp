// Copyright 2026 The wp-effects Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wpfx/value.hpp"

namespace wpfx::dsl {

struct Pos {
  int line = 1;
  int column = 1;
};

std::string to_string(Pos p);

/// Error with a source position, raised by the reader, parser and checker.
class SourceError : public Error {
 public:
  SourceError(Pos pos, const std::string& message);
  Pos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Pos pos_;
  std::string message_;
};

class ParseError : public SourceError {
 public:
  using SourceError::SourceError;
};

struct SExpr {
  enum class Kind { Symbol, Int, Str, List };
  Kind kind = Kind::Symbol;
  std::string text;  // symbol name or string contents
  std::int64_t number = 0;
  std::vector<SExpr> items;
  Pos pos;

  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  bool is_list() const { return kind == Kind::List; }
  /// True for a list whose first item is the symbol `head`.
  bool is_form(std::string_view head) const;
};

/// Reads every top-level datum in `text`. Comments run from `;` to the end
/// of the line.
std::vector<SExpr> read_all(std::string_view text);

}  // namespace wpfx::dsl
