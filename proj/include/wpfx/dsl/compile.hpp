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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wpfx/dsl/check.hpp"
#include "wpfx/program.hpp"
#include "wpfx/wp.hpp"

namespace wpfx::dsl {

/// Evaluation failed at run time (integer overflow, or a shape mismatch that
/// the checker could not rule out). Carries the position of the expression.
class RuntimeError : public SourceError {
 public:
  using SourceError::SourceError;
};

/// An --env / --state literal is malformed or does not match its declared
/// shape.
class LiteralError : public Error {
 public:
  using Error::Error;
};

/// A postcondition name that the file does not declare.
class UnknownPostError : public Error {
 public:
  using Error::Error;
};

using Bindings = std::map<std::string, Value>;

/// Evaluates a checked expression under `vars`.
Value eval_expr(const CheckedFile& cf, const Syntax& expr, const Bindings& vars);

/// Builds the entry program. Guard conditions become deferred conditions and
/// branch bodies are built on demand, so construction evaluates nothing that
/// the interpreter would not.
EitherProg compile_either(const CheckedFile& cf);
RwsProg compile_rws(const CheckedFile& cf);

/// Named postconditions. Throws UnknownPostError if the name is unknown.
EitherPost either_post(const CheckedFile& cf, std::string_view name);
RwsPost rws_post(const CheckedFile& cf, std::string_view name);

/// Parses a constant literal and conforms it to `shape` (when given):
/// record fields are reordered to the declared order; missing or extra
/// fields and wrong shapes raise LiteralError naming the field.
Value parse_literal(std::string_view text, const std::optional<Shape>& shape);

/// Checks `v` against `shape` and returns it with record fields in declared
/// order. Throws LiteralError.
Value conform(const Value& v, const Shape& shape, const std::string& where = "");

}  // namespace wpfx::dsl
