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
#include <string>
#include <vector>

#include "wpfx/program.hpp"
#include "wpfx/wp.hpp"

namespace wpfx {

template <class P>
struct Generated {
  P program;
  /// Human-readable rendering of the generated term.
  std::string text;
};

template <class P>
struct Generation {
  std::vector<Generated<P>> programs;
  bool truncated = false;
};

/// Bounded space of exception-effect programs.
///
/// Height 1 terms are `return v` and `bail e`. A term of height d is a height
/// 1 term, or one of
///   bind m k           m of height < d, k from the fixed continuation pool
///   bind a (_ -> p)    a of height 1, p of height in [2, d)
///   if-guards [(b, p)] a     b in {true, false}, p of height < d
///   case-either s (bail) (_ -> p)
///   case-maybe s a (return)
/// The continuation pool inspects its argument (identity, negation, a
/// positivity guard, a zero test through case-maybe, a sign test through
/// case-either) and also contains every height 1 term as a constant.
struct EitherSpace {
  std::vector<Value::Int> values{-1, 0, 1};
  std::vector<std::string> errors{"e"};
  int depth = 4;
};

/// Bounded space of Reader-Writer-State programs over state records with one
/// integer field `k`.
struct RwsSpace {
  std::vector<Value::Int> values{0, 1};
  std::vector<Value::Int> field_values{0, 1};
  std::vector<std::string> alphabet{"a", "b"};
  Value env = Value::unit();
  int depth = 3;

  std::vector<Value> states() const;
};

/// Stops once `cap` programs have been produced and sets `truncated`.
Generation<EitherProg> generate_either(const EitherSpace& space, std::size_t cap = 1'000'000);
Generation<RwsProg> generate_rws(const RwsSpace& space, std::size_t cap = 1'000'000);

/// is-left, is-right, and value-equals-k (Right k) for each k.
std::vector<EitherPost> either_predicate_pool(const std::vector<Value::Int>& values);

/// value-equals-k, state-field-equals-k on `field`, outputs-length-equals-n
/// for n in [0, max_outputs].
std::vector<RwsPost> rws_predicate_pool(const std::vector<Value::Int>& values,
                                        const std::vector<Value::Int>& field_values,
                                        const std::string& field = "k",
                                        std::size_t max_outputs = 3);

}  // namespace wpfx
