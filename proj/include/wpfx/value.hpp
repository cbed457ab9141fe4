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

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wpfx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value had the wrong shape for the operation applied to it.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic left the 32-bit signed range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class Value;

struct UnitV {
  bool operator==(const UnitV&) const = default;
};

struct TagV {
  std::string name;
  bool operator==(const TagV&) const = default;
};

struct MaybeV {
  std::shared_ptr<const Value> just;  // null means Nothing
};

struct EitherV {
  bool right = false;
  std::shared_ptr<const Value> payload;
};

struct RecordV {
  std::vector<std::string> names;
  std::vector<Value> values;
};

struct SeqV {
  std::vector<Value> items;
};

/// Host function value. Only produced by library code (applicative `ap`),
/// never by the textual language. Compared by identity.
struct FnV {
  std::shared_ptr<const std::function<Value(const Value&)>> fn;
  std::string name;
};

enum class Kind { Unit, Bool, Int, Str, Tag, Maybe, Either, Record, Seq, Fn };

std::string_view kind_name(Kind k);

/// Dynamic value universe shared by the program ASTs, the interpreter, the
/// predicate transformer and the textual front end.
class Value {
 public:
  using Int = std::int32_t;
  using Repr = std::variant<UnitV, bool, Int, std::string, TagV, MaybeV,
                            EitherV, RecordV, SeqV, FnV>;

  Value() : repr_(UnitV{}) {}

  static Value unit() { return Value(); }
  static Value boolean(bool b) { return Value(Repr(b)); }
  static Value integer(std::int64_t i);
  static Value str(std::string s) { return Value(Repr(std::move(s))); }
  static Value tag(std::string name) { return Value(Repr(TagV{std::move(name)})); }
  static Value nothing() { return Value(Repr(MaybeV{})); }
  static Value just(Value v);
  static Value left(Value v);
  static Value right(Value v);
  static Value record(std::vector<std::pair<std::string, Value>> fields);
  static Value seq(std::vector<Value> items);
  static Value function(std::function<Value(const Value&)> fn,
                        std::string name = "<fn>");

  Kind kind() const { return static_cast<Kind>(repr_.index()); }
  const Repr& repr() const { return repr_; }

  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_bool() const { return kind() == Kind::Bool; }
  bool is_int() const { return kind() == Kind::Int; }
  bool is_str() const { return kind() == Kind::Str; }
  bool is_tag() const { return kind() == Kind::Tag; }
  bool is_maybe() const { return kind() == Kind::Maybe; }
  bool is_either() const { return kind() == Kind::Either; }
  bool is_record() const { return kind() == Kind::Record; }
  bool is_seq() const { return kind() == Kind::Seq; }
  bool is_fn() const { return kind() == Kind::Fn; }

  bool as_bool() const;
  Int as_int() const;
  const std::string& as_str() const;
  const std::string& tag_name() const;

  bool is_nothing() const;
  bool is_just() const;
  const Value& from_just() const;

  bool is_left() const;
  bool is_right() const;
  const Value& either_payload() const;

  const RecordV& as_record() const;
  bool has_field(std::string_view name) const;
  const Value& field(std::string_view name) const;
  /// Copy of this record with `name` replaced; throws if the field is absent.
  Value with_field(std::string_view name, Value v) const;

  const std::vector<Value>& items() const;

  Value apply(const Value& arg) const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  explicit Value(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

bool operator==(const RecordV& a, const RecordV& b);
bool operator==(const SeqV& a, const SeqV& b);
bool operator==(const MaybeV& a, const MaybeV& b);
bool operator==(const EitherV& a, const EitherV& b);
bool operator==(const FnV& a, const FnV& b);

/// Literal form accepted by the textual front end: `5`, `"e"`, `true`,
/// `unit`, `'Tag`, `nothing`, `(just 5)`, `(left "e")`,
/// `(record (k 0))`, `(seq 'a 'b)`.
std::string to_sexpr(const Value& v);
std::ostream& operator<<(std::ostream& os, const Value& v);

Value::Int checked_add(Value::Int a, Value::Int b);
Value::Int checked_sub(Value::Int a, Value::Int b);
Value::Int checked_neg(Value::Int a);

}  // namespace wpfx
