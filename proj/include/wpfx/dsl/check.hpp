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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpfx/dsl/syntax.hpp"

namespace wpfx::dsl {

struct Diagnostic {
  Pos pos;
  std::string message;
};

/// One or more type errors. what() lists every diagnostic, one per line, as
/// `line:column: message`.
class CheckError : public Error {
 public:
  explicit CheckError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// A program file that passed the type checker, with its declared shapes
/// expanded (named types substituted).
struct CheckedFile {
  std::shared_ptr<const ProgramFile> file;
  EffectKind kind = EffectKind::Either;

  /// Declared shapes; absent when the file does not declare them.
  std::optional<Shape> state, env, output, error, result;

  /// Shapes inferred for the state, output, error and entry result after
  /// checking. Unconstrained positions appear as Named shapes `?n`.
  Shape inferred_state, inferred_output, inferred_error, inferred_result;

  /// Field order used to build the value of each `(record ...)` expression,
  /// so that records agree with the declared shapes they were unified with.
  std::map<const Syntax*, std::vector<std::string>> record_order;

  const Decl& entry() const;
  const Decl* post(std::string_view name) const;
  std::vector<std::string> post_names() const;
};

/// Type-checks a parsed file. Throws CheckError listing every problem found:
/// unknown fields on lens paths, guard chains without `otherwise`, `tell`
/// payloads that disagree with the output shape, comparisons of unordered
/// shapes, recursive definitions, forms used under the wrong effect, and
/// postconditions that are not Bool.
CheckedFile check(const ProgramFile& file);

/// Parse and check in one step.
CheckedFile load(std::string_view text);

/// True when `var` occurs free in the expression.
bool mentions(const Syntax& expr, std::string_view var);

}  // namespace wpfx::dsl
