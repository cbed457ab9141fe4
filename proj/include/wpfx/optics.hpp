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
#include <string>
#include <string_view>
#include <vector>

#include "wpfx/program.hpp"
#include "wpfx/value.hpp"

namespace wpfx {

/// Getter/setter pair focusing on one part of a record-shaped value.
///
/// Lawful lenses satisfy
///   GetSet: set(s, get(s)) == s
///   SetGet: get(set(s, v)) == v
///   SetSet: set(set(s, v1), v2) == set(s, v2)
/// Construction does not check the laws; tests do.
class Lens {
 public:
  using Getter = std::function<Value(const Value&)>;
  using Setter = std::function<Value(const Value&, const Value&)>;

  Lens(Getter get, Setter set, std::string name);

  Value get(const Value& whole) const { return get_(whole); }
  Value set(const Value& whole, const Value& part) const { return set_(whole, part); }
  Value over(const Value& whole, const std::function<Value(const Value&)>& f) const {
    return set_(whole, f(get_(whole)));
  }
  const std::string& name() const { return name_; }

 private:
  Getter get_;
  Setter set_;
  std::string name_;
};

Lens mk_lens(Lens::Getter get, Lens::Setter set, std::string name = "lens");
Lens identity_lens();
/// Focus on the named field of a record.
Lens field_lens(std::string field);
/// get = inner.get ∘ outer.get; set updates the inner part in place.
Lens compose(const Lens& outer, const Lens& inner);
/// Field path such as {"roundState", "voteSent"}; empty path is identity.
Lens path_lens(const std::vector<std::string>& fields);
/// Dotted form of path_lens: "roundState.voteSent".
Lens path_lens(std::string_view dotted);

/// Reads the focused part of the state.
RwsProg use(const Lens& l);
/// Writes the focused part of the state (get followed by put).
RwsProg assign(const Lens& l, Value v);
/// Updates the focused part of the state in place.
RwsProg modifying(const Lens& l, std::function<Value(const Value&)> f);

}  // namespace wpfx
