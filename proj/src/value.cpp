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

#include "wpfx/value.hpp"

#include <limits>
#include <sstream>

namespace wpfx {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Unit: return "Unit";
    case Kind::Bool: return "Bool";
    case Kind::Int: return "Int";
    case Kind::Str: return "Str";
    case Kind::Tag: return "Tag";
    case Kind::Maybe: return "Maybe";
    case Kind::Either: return "Either";
    case Kind::Record: return "Record";
    case Kind::Seq: return "Seq";
    case Kind::Fn: return "Fn";
  }
  return "?";
}

namespace {

[[noreturn]] void shape_fail(std::string_view want, const Value& got) {
  std::ostringstream os;
  os << "expected " << want << ", got " << kind_name(got.kind()) << " "
     << to_sexpr(got);
  throw ShapeError(os.str());
}

void escape_into(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << c;
    }
  }
  os << '"';
}

void print(std::ostream& os, const Value& v) {
  switch (v.kind()) {
    case Kind::Unit: os << "unit"; break;
    case Kind::Bool: os << (v.as_bool() ? "true" : "false"); break;
    case Kind::Int: os << v.as_int(); break;
    case Kind::Str: escape_into(os, v.as_str()); break;
    case Kind::Tag: os << '\'' << v.tag_name(); break;
    case Kind::Maybe:
      if (v.is_nothing()) {
        os << "nothing";
      } else {
        os << "(just ";
        print(os, v.from_just());
        os << ')';
      }
      break;
    case Kind::Either:
      os << (v.is_right() ? "(right " : "(left ");
      print(os, v.either_payload());
      os << ')';
      break;
    case Kind::Record: {
      const auto& r = v.as_record();
      os << "(record";
      for (std::size_t i = 0; i < r.names.size(); ++i) {
        os << " (" << r.names[i] << ' ';
        print(os, r.values[i]);
        os << ')';
      }
      os << ')';
      break;
    }
    case Kind::Seq:
      os << "(seq";
      for (const auto& item : v.items()) {
        os << ' ';
        print(os, item);
      }
      os << ')';
      break;
    case Kind::Fn:
      os << "#<" << std::get<FnV>(v.repr()).name << '>';
      break;
  }
}

}  // namespace

Value Value::integer(std::int64_t i) {
  if (i < std::numeric_limits<Int>::min() || i > std::numeric_limits<Int>::max()) {
    throw OverflowError("integer " + std::to_string(i) + " outside 32-bit range");
  }
  return Value(Repr(static_cast<Int>(i)));
}

Value Value::just(Value v) {
  return Value(Repr(MaybeV{std::make_shared<const Value>(std::move(v))}));
}

Value Value::left(Value v) {
  return Value(Repr(EitherV{false, std::make_shared<const Value>(std::move(v))}));
}

Value Value::right(Value v) {
  return Value(Repr(EitherV{true, std::make_shared<const Value>(std::move(v))}));
}

Value Value::record(std::vector<std::pair<std::string, Value>> fields) {
  RecordV r;
  for (auto& [name, value] : fields) {
    for (const auto& existing : r.names) {
      if (existing == name) throw ShapeError("duplicate record field " + name);
    }
    r.names.push_back(std::move(name));
    r.values.push_back(std::move(value));
  }
  return Value(Repr(std::move(r)));
}

Value Value::seq(std::vector<Value> items) {
  return Value(Repr(SeqV{std::move(items)}));
}

Value Value::function(std::function<Value(const Value&)> fn, std::string name) {
  return Value(Repr(FnV{
      std::make_shared<const std::function<Value(const Value&)>>(std::move(fn)),
      std::move(name)}));
}

bool Value::as_bool() const {
  if (!is_bool()) shape_fail("Bool", *this);
  return std::get<bool>(repr_);
}

Value::Int Value::as_int() const {
  if (!is_int()) shape_fail("Int", *this);
  return std::get<Int>(repr_);
}

const std::string& Value::as_str() const {
  if (!is_str()) shape_fail("Str", *this);
  return std::get<std::string>(repr_);
}

const std::string& Value::tag_name() const {
  if (!is_tag()) shape_fail("Tag", *this);
  return std::get<TagV>(repr_).name;
}

bool Value::is_nothing() const {
  if (!is_maybe()) shape_fail("Maybe", *this);
  return std::get<MaybeV>(repr_).just == nullptr;
}

bool Value::is_just() const { return !is_nothing(); }

const Value& Value::from_just() const {
  if (is_nothing()) throw ShapeError("from_just applied to nothing");
  return *std::get<MaybeV>(repr_).just;
}

bool Value::is_left() const {
  if (!is_either()) shape_fail("Either", *this);
  return !std::get<EitherV>(repr_).right;
}

bool Value::is_right() const { return !is_left(); }

const Value& Value::either_payload() const {
  if (!is_either()) shape_fail("Either", *this);
  return *std::get<EitherV>(repr_).payload;
}

const RecordV& Value::as_record() const {
  if (!is_record()) shape_fail("Record", *this);
  return std::get<RecordV>(repr_);
}

bool Value::has_field(std::string_view name) const {
  const auto& r = as_record();
  for (const auto& n : r.names) {
    if (n == name) return true;
  }
  return false;
}

const Value& Value::field(std::string_view name) const {
  const auto& r = as_record();
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return r.values[i];
  }
  throw ShapeError("unknown field " + std::string(name));
}

Value Value::with_field(std::string_view name, Value v) const {
  RecordV r = as_record();
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) {
      r.values[i] = std::move(v);
      return Value(Repr(std::move(r)));
    }
  }
  throw ShapeError("unknown field " + std::string(name));
}

const std::vector<Value>& Value::items() const {
  if (!is_seq()) shape_fail("Seq", *this);
  return std::get<SeqV>(repr_).items;
}

Value Value::apply(const Value& arg) const {
  if (!is_fn()) shape_fail("Fn", *this);
  return (*std::get<FnV>(repr_).fn)(arg);
}

bool operator==(const RecordV& a, const RecordV& b) {
  return a.names == b.names && a.values == b.values;
}

bool operator==(const SeqV& a, const SeqV& b) { return a.items == b.items; }

bool operator==(const MaybeV& a, const MaybeV& b) {
  if (!a.just || !b.just) return !a.just && !b.just;
  return *a.just == *b.just;
}

bool operator==(const EitherV& a, const EitherV& b) {
  return a.right == b.right && *a.payload == *b.payload;
}

bool operator==(const FnV& a, const FnV& b) { return a.fn == b.fn; }

bool operator==(const Value& a, const Value& b) { return a.repr_ == b.repr_; }

std::string to_sexpr(const Value& v) {
  std::ostringstream os;
  print(os, v);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  print(os, v);
  return os;
}

Value::Int checked_add(Value::Int a, Value::Int b) {
  Value::Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return r;
}

Value::Int checked_sub(Value::Int a, Value::Int b) {
  Value::Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " +
                        std::to_string(b));
  }
  return r;
}

Value::Int checked_neg(Value::Int a) { return checked_sub(0, a); }

}  // namespace wpfx
