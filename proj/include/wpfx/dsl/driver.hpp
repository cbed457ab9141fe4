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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wpfx/dsl/check.hpp"
#include "wpfx/wp.hpp"

namespace wpfx::dsl {

using Json = nlohmann::ordered_json;

/// The file's shapes do not fit the builtin program generator used by a sweep.
class SweepError : public Error {
 public:
  using Error::Error;
};

struct RunResult {
  EffectKind kind = EffectKind::Either;
  Outcome outcome;
};

/// Runs the entry program. `env` / `state` are literal texts; for either
/// programs they must be absent. Missing literals default to `unit` when the
/// declared shape is Unit. Throws LiteralError, RuntimeError.
RunResult run_file(const CheckedFile& cf, const std::optional<std::string>& env,
                   const std::optional<std::string>& state);

struct CheckOptions {
  std::string post;
  bool sweep = false;
  int bound = 3;
  int depth = 4;
  std::optional<std::string> env;
  std::optional<std::string> state;
  std::size_t cap = 1'000'000;
};

/// One checked case: a program (the entry, or a generated one) started from
/// one input.
struct CaseReport {
  std::size_t index = 0;
  std::string program;  // empty for the file's own entry program
  std::string input;    // rendered env/state, empty for either programs
  ContractReport contract;
};

struct CheckResult {
  EffectKind kind = EffectKind::Either;
  std::string post;
  bool sweep = false;
  std::size_t cases = 0;
  std::size_t violations = 0;
  /// Cases where the precondition and the postcondition on the run differ.
  std::size_t inexact = 0;
  /// Cases whose precondition does not hold.
  std::size_t failing = 0;
  bool truncated = false;
  std::size_t pass = 0, fail = 0, vacuous = 0;
  /// Every case for a single check; violating cases only for a sweep.
  std::vector<CaseReport> reported;
};

/// Computes the weakest precondition of the named postcondition, evaluates
/// its obligations and compares against the interpreter, either for the
/// entry program or, with `sweep`, over the builtin bounded program space.
/// Throws Error for an unknown postcondition, SweepError, LiteralError,
/// RuntimeError.
CheckResult check_file(const CheckedFile& cf, const CheckOptions& opts);

/// JSON encoding of values: Int/Str/Bool as JSON scalars, Unit as null,
/// {"nothing":null}, {"just":v}, {"left":v}, {"right":v}, {"tag":name},
/// records as objects in field order, sequences as arrays.
Json value_json(const Value& v);

Json to_json(const RunResult& r);
Json to_json(const CheckResult& r);
std::string to_text(const RunResult& r);
std::string to_text(const CheckResult& r);

}  // namespace wpfx::dsl
