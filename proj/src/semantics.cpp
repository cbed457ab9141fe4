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

#include "wpfx/semantics.hpp"

#include <optional>
#include <sstream>

#include "overloaded.hpp"

namespace wpfx {

namespace {

using detail::overloaded;

// One step of a conditional: returns the program chosen by the scrutinee.
template <class E>
Prog<E> choose(const node::IfGuards<E>& g) {
  std::size_t i = select_guard(g);
  return i < g.branches.size() ? g.branches[i].body() : g.otherwise();
}

template <class E>
Prog<E> choose(const node::CaseEither<E>& c) {
  return c.scrutinee.is_left() ? c.on_left(c.scrutinee.either_payload())
                               : c.on_right(c.scrutinee.either_payload());
}

template <class E>
Prog<E> choose(const node::CaseMaybe<E>& c) {
  return c.scrutinee.is_nothing() ? c.on_nothing() : c.on_just(c.scrutinee.from_just());
}

}  // namespace

std::string to_string(const EitherOutcome& o) {
  return (o.right ? "Right " : "Left ") + to_sexpr(o.value);
}

std::string to_string(const RwsOutcome& o) {
  std::ostringstream os;
  os << '(' << to_sexpr(o.value) << ", " << to_sexpr(o.state) << ", [";
  for (std::size_t i = 0; i < o.outputs.size(); ++i) {
    if (i) os << ", ";
    os << to_sexpr(o.outputs[i]);
  }
  os << "])";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EitherOutcome& o) { return os << to_string(o); }
std::ostream& operator<<(std::ostream& os, const RwsOutcome& o) { return os << to_string(o); }

EitherOutcome run_either(const EitherProg& m) {
  using E = EitherEffect;
  EitherProg cur = m;
  for (;;) {
    // Binds recurse on the left and loop on the right so long right-nested
    // chains run in constant stack.
    std::optional<EitherOutcome> done;
    EitherProg next;
    std::visit(overloaded{
                   [&](const node::Return<E>& n) { done = EitherOutcome::right_of(n.value); },
                   [&](const node::Bail& n) { done = EitherOutcome::left_of(n.error); },
                   [&](const node::Bind<E>& n) {
                     EitherOutcome r = run_either(n.inner);
                     if (r.is_left()) {
                       done = std::move(r);
                     } else {
                       next = n.cont(r.value);
                     }
                   },
                   [&](const node::IfGuards<E>& n) { next = choose(n); },
                   [&](const node::CaseEither<E>& n) { next = choose(n); },
                   [&](const node::CaseMaybe<E>& n) { next = choose(n); },
               },
               cur.node());
    if (done) return *std::move(done);
    cur = std::move(next);
  }
}

RwsOutcome run_rws(const RwsProg& m, const Value& env, const Value& state) {
  using E = RwsEffect;
  RwsProg cur = m;
  Value st = state;
  std::vector<Value> written;
  for (;;) {
    std::optional<RwsOutcome> done;
    RwsProg next;
    std::visit(overloaded{
                   [&](const node::Return<E>& n) { done = RwsOutcome{n.value, st, {}}; },
                   [&](const node::Gets& n) { done = RwsOutcome{n.projection(st), st, {}}; },
                   [&](const node::Put& n) { done = RwsOutcome{Value::unit(), n.state, {}}; },
                   [&](const node::Ask&) { done = RwsOutcome{env, st, {}}; },
                   [&](const node::Tell& n) { done = RwsOutcome{Value::unit(), st, n.outputs}; },
                   [&](const node::Bind<E>& n) {
                     RwsOutcome r = run_rws(n.inner, env, st);
                     written.insert(written.end(), r.outputs.begin(), r.outputs.end());
                     st = std::move(r.state);
                     next = n.cont(r.value);
                   },
                   [&](const node::IfGuards<E>& n) { next = choose(n); },
                   [&](const node::CaseEither<E>& n) { next = choose(n); },
                   [&](const node::CaseMaybe<E>& n) { next = choose(n); },
               },
               cur.node());
    if (done) {
      written.insert(written.end(), done->outputs.begin(), done->outputs.end());
      done->outputs = std::move(written);
      return *std::move(done);
    }
    cur = std::move(next);
  }
}

}  // namespace wpfx
