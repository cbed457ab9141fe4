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
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wpfx/program.hpp"
#include "wpfx/semantics.hpp"
#include "wpfx/value.hpp"

namespace wpfx {

using Outcome = std::variant<EitherOutcome, RwsOutcome>;

std::string to_string(const Outcome& o);

/// Named, total predicate over the outcome of a run.
template <class O>
struct Postcondition {
  std::string name;
  std::function<bool(const O&)> test;

  bool operator()(const O& o) const { return test(o); }
};

using EitherPost = Postcondition<EitherOutcome>;
using RwsPost = Postcondition<RwsOutcome>;

class Obligation;

namespace ob {

/// Postcondition applied to one concrete outcome.
struct Atom {
  std::string post_name;
  std::function<bool(const Outcome&)> post;
  Outcome outcome;
  /// Which primitive produced the outcome (return, bail, tell, ...).
  std::string label;
};

struct Conj {
  std::vector<Obligation> children;
};

struct Hypothesis {
  bool holds = false;
  std::string description;
};

/// Obligation guarded by a branch hypothesis. `body` is empty when the branch
/// could not be built because its scrutinee did not select it (e.g. the left
/// arm of a case split over a Right value); such a branch is always vacuous.
struct Implies;

/// `∀ alias → alias ≡ forced → body alias`: the quantified variable has
/// exactly one admissible value, so evaluation instantiates it there.
struct ForallAlias {
  std::string alias;
  Value forced;
  std::function<Obligation(const Value&)> body;
};

}  // namespace ob

class Obligation {
 public:
  using Node = std::variant<ob::Atom, ob::Conj, ob::Implies, ob::ForallAlias>;

  Obligation() = default;
  explicit Obligation(const Node& n);

  bool empty() const;
  const Node& node() const;

  bool is_atom() const;
  bool is_conj() const;
  bool is_implies() const;
  bool is_forall() const;
  const ob::Atom& atom() const;
  const ob::Conj& conj() const;
  const ob::Implies& implies() const;
  const ob::ForallAlias& forall() const;

 private:
  std::shared_ptr<const Node> node_;
};

namespace ob {

struct Implies {
  Hypothesis hypothesis;
  /// Short branch name used in report paths (guard[0], otherwise, left, ...).
  std::string branch;
  Obligation body;
};

}  // namespace ob

/// Weakest precondition of `post` for an exception-effect program.
Obligation wp_either(const EitherProg& m, const EitherPost& post);

/// Weakest precondition for a Reader-Writer-State program started from
/// `env` / `state`; `post` ranges over the full (value, state, outputs) triple.
Obligation wp_rws(const RwsProg& m, const Value& env, const Value& state,
                  const RwsPost& post);

enum class LeafStatus { Pass, Fail, Vacuous };

std::string_view status_name(LeafStatus s);

struct LeafReport {
  std::vector<std::string> path;
  std::vector<std::string> hypotheses;
  LeafStatus status = LeafStatus::Pass;
  std::string post;
  std::string label;
  std::string outcome;
};

struct Verdict {
  bool holds = true;
  std::vector<LeafReport> leaves;

  std::size_t count(LeafStatus s) const;
};

/// Collapses an obligation tree to a truth value and a leaf-by-leaf report.
/// Every leaf is reported exactly once, including leaves under false
/// hypotheses (status Vacuous, postcondition not evaluated).
Verdict eval_obligation(const Obligation& ob);

struct ContractReport {
  /// Truth of the weakest precondition.
  bool precondition = false;
  /// Truth of the postcondition on the interpreter's outcome.
  bool postcondition = false;
  Outcome outcome;
  Verdict verdict;

  /// The contract is violated when the precondition holds but the run does
  /// not satisfy the postcondition.
  bool violation() const { return precondition && !postcondition; }
  /// True when the precondition coincides with the postcondition on the run.
  bool exact() const { return precondition == postcondition; }
};

ContractReport check_contract(const EitherProg& m, const EitherPost& post);
ContractReport check_contract(const RwsProg& m, const Value& env, const Value& state,
                              const RwsPost& post);

}  // namespace wpfx
