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

#include "wpfx/dsl/sexpr.hpp"

#include <cctype>
#include <charconv>

namespace wpfx::dsl {

std::string to_string(Pos p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

SourceError::SourceError(Pos pos, const std::string& message)
    : Error(to_string(pos) + ": " + message), pos_(pos), message_(message) {}

bool SExpr::is_form(std::string_view head) const {
  return is_list() && !items.empty() && items.front().is_symbol(head);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    for (;;) {
      skip_space();
      if (at_end()) return out;
      out.push_back(datum());
    }
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return text_[i_]; }

  char advance() {
    char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
           c == ';';
  }

  SExpr datum() {
    SExpr e;
    e.pos = pos_;
    char c = peek();
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::List;
      for (;;) {
        skip_space();
        if (at_end()) throw ParseError(pos_, "unexpected end of input: unclosed form opened at " + to_string(e.pos));
        if (peek() == ')') {
          advance();
          return e;
        }
        e.items.push_back(datum());
      }
    }
    if (c == ')') throw ParseError(pos_, "unexpected ')'");
    if (c == '"') return string_literal();

    std::size_t start = i_;
    while (!at_end() && !delimiter(peek())) advance();
    std::string_view tok = text_.substr(start, i_ - start);
    if (looks_numeric(tok)) {
      std::int64_t n = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(e.pos, "malformed integer literal '" + std::string(tok) + "'");
      }
      e.kind = SExpr::Kind::Int;
      e.number = n;
      e.text = std::string(tok);
      return e;
    }
    e.kind = SExpr::Kind::Symbol;
    e.text = std::string(tok);
    return e;
  }

  static bool looks_numeric(std::string_view tok) {
    std::size_t k = (tok.size() > 1 && tok[0] == '-') ? 1 : 0;
    return k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]));
  }

  SExpr string_literal() {
    SExpr e;
    e.kind = SExpr::Kind::Str;
    e.pos = pos_;
    advance();
    for (;;) {
      if (at_end()) throw ParseError(e.pos, "unterminated string literal");
      char c = advance();
      if (c == '"') return e;
      if (c == '\\') {
        if (at_end()) throw ParseError(e.pos, "unterminated string literal");
        char esc = advance();
        switch (esc) {
          case 'n': e.text += '\n'; break;
          case 't': e.text += '\t'; break;
          case '"': e.text += '"'; break;
          case '\\': e.text += '\\'; break;
          default: throw ParseError(pos_, std::string("unknown escape \\") + esc);
        }
      } else {
        e.text += c;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Pos pos_;
};

}  // namespace

std::vector<SExpr> read_all(std::string_view text) { return Reader(text).all(); }

}  // namespace wpfx::dsl
