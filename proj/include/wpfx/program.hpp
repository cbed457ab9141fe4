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

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wpfx/value.hpp"

namespace wpfx {

/// A malformed AST node was requested (missing `otherwise`, a `tell` whose
/// payload is not a sequence, a case split over the wrong shape, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Effect signatures. EitherEffect adds `bail`; RwsEffect adds the
/// reader/writer/state primitives.
struct EitherEffect {};
struct RwsEffect {};

template <class E>
class Prog;

template <class E>
using Cont = std::function<Prog<E>(const Value&)>;

template <class E>
using Thunk = std::function<Prog<E>()>;

/// Branch condition. Either a concrete boolean or a deferred test, which is
/// only evaluated by the interpreter or the predicate transformer.
class Condition {
 public:
  Condition(bool value);  // NOLINT(google-explicit-constructor)
  Condition(bool value, std::string label);
  Condition(std::function<bool()> test, std::string label);

  bool holds() const;
  const std::string& label() const { return label_; }

 private:
  std::variant<bool, std::function<bool()>> test_;
  std::string label_;
};

namespace node {

template <class E>
struct Return {
  Value value;
};

template <class E>
struct Bind {
  Prog<E> inner;
  Cont<E> cont;
  std::string binder;
};

template <class E>
struct Guard {
  Condition condition;
  Thunk<E> body;
};

template <class E>
struct IfGuards {
  std::vector<Guard<E>> branches;
  Thunk<E> otherwise;
};

template <class E>
struct CaseEither {
  Value scrutinee;
  Cont<E> on_left;
  Cont<E> on_right;
};

template <class E>
struct CaseMaybe {
  Value scrutinee;
  Thunk<E> on_nothing;
  Cont<E> on_just;
};

struct Bail {
  Value error;
};

struct Gets {
  std::function<Value(const Value&)> projection;
  std::string label;
};

struct Put {
  Value state;
};

struct Ask {};

struct Tell {
  std::vector<Value> outputs;
};

}  // namespace node

template <class E>
struct EffectNodes;

template <>
struct EffectNodes<EitherEffect> {
  using E = EitherEffect;
  using type = std::variant<node::Return<E>, node::Bind<E>, node::IfGuards<E>,
                            node::CaseEither<E>, node::CaseMaybe<E>, node::Bail>;
};

template <>
struct EffectNodes<RwsEffect> {
  using E = RwsEffect;
  using type = std::variant<node::Return<E>, node::Bind<E>, node::IfGuards<E>,
                            node::CaseEither<E>, node::CaseMaybe<E>, node::Gets,
                            node::Put, node::Ask, node::Tell>;
};

/// Immutable, shareable free-monad program. A default-constructed Prog is
/// empty and is rejected by every constructor that takes a sub-program.
template <class E>
class Prog {
 public:
  using Node = typename EffectNodes<E>::type;

  Prog() = default;
  explicit Prog(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  bool empty() const { return !node_; }

  const Node& node() const {
    if (!node_) throw ConstructionError("empty program");
    return *node_;
  }

 private:
  std::shared_ptr<const Node> node_;
};

using EitherProg = Prog<EitherEffect>;
using RwsProg = Prog<RwsEffect>;

template <class E>
using Guard = node::Guard<E>;

/// Guard branch with an already-built body.
template <class E>
Guard<E> when(Condition c, Prog<E> body) {
  if (body.empty()) throw ConstructionError("guard branch without a body");
  return Guard<E>{std::move(c), [b = std::move(body)] { return b; }};
}

/// Guard branch whose body is built only when it is needed.
template <class E>
Guard<E> when_lazy(Condition c, Thunk<E> body) {
  if (!body) throw ConstructionError("guard branch without a body");
  return Guard<E>{std::move(c), std::move(body)};
}

// Constructors shared by both effects.

template <class E>
Prog<E> pure(Value v) {
  return Prog<E>(node::Return<E>{std::move(v)});
}

template <class E>
Prog<E> bind(Prog<E> m, Cont<E> f, std::string binder = "c") {
  if (m.empty()) throw ConstructionError("bind of an empty program");
  if (!f) throw ConstructionError("bind without a continuation");
  return Prog<E>(node::Bind<E>{std::move(m), std::move(f), std::move(binder)});
}

/// `m >> k`: sequence, discarding m's result.
template <class E>
Prog<E> then(Prog<E> m, Prog<E> k) {
  if (k.empty()) throw ConstructionError("then with an empty continuation");
  return wpfx::bind<E>(std::move(m), [k = std::move(k)](const Value&) { return k; }, "_");
}

template <class E>
Prog<E> if_guards_lazy(std::vector<Guard<E>> branches, Thunk<E> otherwise) {
  if (!otherwise) throw ConstructionError("if-guards requires an otherwise branch");
  return Prog<E>(node::IfGuards<E>{std::move(branches), std::move(otherwise)});
}

template <class E>
Prog<E> if_guards(std::vector<Guard<E>> branches, Prog<E> otherwise) {
  if (otherwise.empty()) throw ConstructionError("if-guards requires an otherwise branch");
  return if_guards_lazy<E>(std::move(branches), [o = std::move(otherwise)] { return o; });
}

template <class E>
Prog<E> case_either(Value scrutinee, Cont<E> on_left, Cont<E> on_right) {
  if (!scrutinee.is_either()) {
    throw ConstructionError("case-either scrutinee is not an Either: " + to_sexpr(scrutinee));
  }
  if (!on_left || !on_right) throw ConstructionError("case-either requires both branches");
  return Prog<E>(node::CaseEither<E>{std::move(scrutinee), std::move(on_left),
                                     std::move(on_right)});
}

template <class E>
Prog<E> case_maybe_lazy(Value scrutinee, Thunk<E> on_nothing, Cont<E> on_just) {
  if (!scrutinee.is_maybe()) {
    throw ConstructionError("case-maybe scrutinee is not a Maybe: " + to_sexpr(scrutinee));
  }
  if (!on_nothing || !on_just) throw ConstructionError("case-maybe requires both branches");
  return Prog<E>(node::CaseMaybe<E>{std::move(scrutinee), std::move(on_nothing),
                                    std::move(on_just)});
}

template <class E>
Prog<E> case_maybe(Value scrutinee, Prog<E> on_nothing, Cont<E> on_just) {
  if (on_nothing.empty()) throw ConstructionError("case-maybe requires both branches");
  return case_maybe_lazy<E>(std::move(scrutinee), [p = std::move(on_nothing)] { return p; },
                            std::move(on_just));
}

/// Functor map derived from bind and return. `binder` names the alias that
/// obligations introduce for the result of `m`.
template <class E>
Prog<E> fmap(Prog<E> m, std::function<Value(const Value&)> g, std::string binder = "c") {
  return wpfx::bind<E>(
      std::move(m), [g = std::move(g)](const Value& x) { return pure<E>(g(x)); }, std::move(binder));
}

/// Applicative apply derived from bind and return; mf's effects come first.
/// The result of mf must be a function value (Value::function).
template <class E>
Prog<E> ap(Prog<E> mf, Prog<E> mx, std::string f_binder = "f", std::string x_binder = "x") {
  return wpfx::bind<E>(
      std::move(mf),
      [mx = std::move(mx), x_binder = std::move(x_binder)](const Value& f) {
        return wpfx::bind<E>(mx, [f](const Value& x) { return pure<E>(f.apply(x)); }, x_binder);
      },
      std::move(f_binder));
}

// Exception effect.

EitherProg bail(Value error);

// Reader-Writer-State effect.

RwsProg gets(std::function<Value(const Value&)> projection, std::string label = "gets");
RwsProg get();
RwsProg put(Value state);
RwsProg ask();
RwsProg tell(std::vector<Value> outputs);
/// Throws ConstructionError unless `outputs` is a sequence value.
RwsProg tell(const Value& outputs);
RwsProg modify(std::function<Value(const Value&)> f);

}  // namespace wpfx
