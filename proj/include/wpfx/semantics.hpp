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

#include <ostream>
#include <string>
#include <vector>

#include "wpfx/program.hpp"
#include "wpfx/value.hpp"

namespace wpfx {

struct EitherOutcome {
  bool right = false;
  Value value;

  static EitherOutcome left_of(Value v) { return {false, std::move(v)}; }
  static EitherOutcome right_of(Value v) { return {true, std::move(v)}; }

  bool is_left() const { return !right; }
  bool is_right() const { return right; }
  /// The outcome as an Either value.
  Value as_value() const { return right ? Value::right(value) : Value::left(value); }

  friend bool operator==(const EitherOutcome&, const EitherOutcome&) = default;
};

struct RwsOutcome {
  Value value;
  Value state;
  std::vector<Value> outputs;

  friend bool operator==(const RwsOutcome&, const RwsOutcome&) = default;
};

std::string to_string(const EitherOutcome& o);
std::string to_string(const RwsOutcome& o);
std::ostream& operator<<(std::ostream& os, const EitherOutcome& o);
std::ostream& operator<<(std::ostream& os, const RwsOutcome& o);

/// Deterministic interpreter for the exception effect.
EitherOutcome run_either(const EitherProg& m);

/// Deterministic interpreter for Reader-Writer-State. `env` is constant for
/// the whole run; outputs are the in-order concatenation of every `tell`.
RwsOutcome run_rws(const RwsProg& m, const Value& env, const Value& state);

/// Index of the first guard whose condition holds, or branches.size().
template <class E>
std::size_t select_guard(const node::IfGuards<E>& g) {
  for (std::size_t i = 0; i < g.branches.size(); ++i) {
    if (g.branches[i].condition.holds()) return i;
  }
  return g.branches.size();
}

}  // namespace wpfx
