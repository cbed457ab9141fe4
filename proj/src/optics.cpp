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

#include "wpfx/optics.hpp"

#include <utility>

namespace wpfx {

Lens::Lens(Getter get, Setter set, std::string name)
    : get_(std::move(get)), set_(std::move(set)), name_(std::move(name)) {
  if (!get_ || !set_) throw Error("lens " + name_ + " needs both a getter and a setter");
}

Lens mk_lens(Lens::Getter get, Lens::Setter set, std::string name) {
  return Lens(std::move(get), std::move(set), std::move(name));
}

Lens identity_lens() {
  return Lens([](const Value& s) { return s; }, [](const Value&, const Value& v) { return v; },
              "id");
}

Lens field_lens(std::string field) {
  return Lens([field](const Value& s) { return s.field(field); },
              [field](const Value& s, const Value& v) { return s.with_field(field, v); }, field);
}

Lens compose(const Lens& outer, const Lens& inner) {
  return Lens([outer, inner](const Value& s) { return inner.get(outer.get(s)); },
              [outer, inner](const Value& s, const Value& v) {
                return outer.set(s, inner.set(outer.get(s), v));
              },
              outer.name() + "." + inner.name());
}

Lens path_lens(const std::vector<std::string>& fields) {
  if (fields.empty()) return identity_lens();
  Lens l = field_lens(fields.front());
  for (std::size_t i = 1; i < fields.size(); ++i) l = compose(l, field_lens(fields[i]));
  return l;
}

Lens path_lens(std::string_view dotted) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (start <= dotted.size() && !dotted.empty()) {
    std::size_t dot = dotted.find('.', start);
    std::string_view part = dotted.substr(start, dot == std::string_view::npos ? dotted.npos : dot - start);
    if (part.empty()) throw Error("malformed lens path '" + std::string(dotted) + "'");
    fields.emplace_back(part);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return path_lens(fields);
}

RwsProg use(const Lens& l) {
  return gets([l](const Value& s) { return l.get(s); }, "use " + l.name());
}

RwsProg assign(const Lens& l, Value v) {
  return bind<RwsEffect>(get(), [l, v = std::move(v)](const Value& s) { return put(l.set(s, v)); },
                         "s");
}

RwsProg modifying(const Lens& l, std::function<Value(const Value&)> f) {
  return bind<RwsEffect>(get(), [l, f = std::move(f)](const Value& s) {
    return put(l.set(s, f(l.get(s))));
  }, "s");
}

}  // namespace wpfx
