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
#include <type_traits>
#include <utility>
#include <vector>

#include "wpfx/value.hpp"

namespace wpfx {

/// One step into a value: a record field, a sequence index, or the payload of
/// a `just` / `left` / `right`.
struct PathStep {
  enum class Kind { Field, Index, Just, Left, Right };
  Kind kind;
  std::string field;
  std::size_t index = 0;

  bool operator==(const PathStep&) const = default;
};

using ValuePath = std::vector<PathStep>;

std::string render_path(const ValuePath& path);

/// Follows `path` into `v`. Returns nullopt when the path leaves the value
/// (e.g. an index past the end, or `just` on nothing).
std::optional<Value> project(const ValuePath& path, const Value& v);

/// Decidable equality with evidence. On `Yes` the witness is the shared value;
/// on `No` the path leads to the first position where the inputs disagree.
struct DecEqResult {
  bool equal = false;
  Value witness;
  ValuePath where;
  std::string reason;

  explicit operator bool() const { return equal; }
};

/// Throws ShapeError when the two values do not have the same shape at the
/// top level (different kinds, or records with different field lists).
DecEqResult dec_eq(const Value& a, const Value& b);
bool eq(const Value& a, const Value& b);
bool neq(const Value& a, const Value& b);

enum class Ordering { LT, EQ, GT };

std::string_view ordering_name(Ordering o);

struct CompareEvidence {
  Ordering ordering;
  Value lhs;
  Value rhs;
};

/// Trichotomous comparison of integers, strings, and sequences/records of
/// ordered values (lexicographic). Other shapes throw ShapeError.
CompareEvidence compare_ev(const Value& a, const Value& b);
bool is_ordered_shape(const Value& v);

/// Haskell-style guard chain: first true condition wins, `otherwise` is
/// required up front so evaluation is total.
template <class T>
class GuardChain {
 public:
  explicit GuardChain(T otherwise) : otherwise_(std::move(otherwise)) {}
  GuardChain(std::vector<std::pair<bool, T>> branches, T otherwise)
      : branches_(std::move(branches)), otherwise_(std::move(otherwise)) {}

  GuardChain& when(bool condition, T result) {
    branches_.emplace_back(condition, std::move(result));
    return *this;
  }

  const std::vector<std::pair<bool, T>>& branches() const { return branches_; }
  const T& otherwise() const { return otherwise_; }

  /// Index of the selected branch; branches().size() means `otherwise`.
  std::size_t selected_index() const {
    for (std::size_t i = 0; i < branches_.size(); ++i) {
      if (branches_[i].first) return i;
    }
    return branches_.size();
  }

 private:
  std::vector<std::pair<bool, T>> branches_;
  T otherwise_;
};

template <class T>
const T& eval_guards(const GuardChain<T>& chain) {
  std::size_t i = chain.selected_index();
  return i < chain.branches().size() ? chain.branches()[i].second
                                     : chain.otherwise();
}

// List monad.

template <class A>
std::vector<A> list_return(A a) {
  return {std::move(a)};
}

template <class A, class F>
auto list_bind(const std::vector<A>& xs, F&& f) {
  using Out = std::decay_t<decltype(f(xs.front()))>;
  Out out;
  for (const auto& x : xs) {
    auto ys = f(x);
    out.insert(out.end(), ys.begin(), ys.end());
  }
  return out;
}

// Small helpers over Maybe / Either values.

bool is_nothing(const Value& m);
Value from_maybe(const Value& fallback, const Value& m);

template <class F>
Value maybe_elim(const Value& fallback, F&& on_just, const Value& m) {
  return m.is_nothing() ? fallback : on_just(m.from_just());
}

template <class FL, class FR>
Value either_elim(FL&& on_left, FR&& on_right, const Value& e) {
  return e.is_left() ? on_left(e.either_payload()) : on_right(e.either_payload());
}

}  // namespace wpfx
