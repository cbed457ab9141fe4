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

#include "wpfx/program.hpp"

namespace wpfx {

Condition::Condition(bool value) : test_(value), label_(value ? "true" : "false") {}

Condition::Condition(bool value, std::string label)
    : test_(value), label_(std::move(label)) {}

Condition::Condition(std::function<bool()> test, std::string label)
    : test_(std::move(test)), label_(std::move(label)) {
  if (!std::get<std::function<bool()>>(test_)) {
    throw ConstructionError("deferred condition without a test");
  }
}

bool Condition::holds() const {
  if (const bool* b = std::get_if<bool>(&test_)) return *b;
  return std::get<std::function<bool()>>(test_)();
}

EitherProg bail(Value error) { return EitherProg(node::Bail{std::move(error)}); }

RwsProg gets(std::function<Value(const Value&)> projection, std::string label) {
  if (!projection) throw ConstructionError("gets without a projection");
  return RwsProg(node::Gets{std::move(projection), std::move(label)});
}

RwsProg get() {
  return gets([](const Value& s) { return s; }, "get");
}

RwsProg put(Value state) { return RwsProg(node::Put{std::move(state)}); }

RwsProg ask() { return RwsProg(node::Ask{}); }

RwsProg tell(std::vector<Value> outputs) { return RwsProg(node::Tell{std::move(outputs)}); }

RwsProg tell(const Value& outputs) {
  if (!outputs.is_seq()) {
    throw ConstructionError("tell payload must be a sequence, got " + to_sexpr(outputs));
  }
  return tell(outputs.items());
}

RwsProg modify(std::function<Value(const Value&)> f) {
  return bind<RwsEffect>(get(), [f = std::move(f)](const Value& s) { return put(f(s)); }, "s");
}

}  // namespace wpfx
