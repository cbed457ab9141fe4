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

#include "wpfx/prelude.hpp"

#include <sstream>

namespace wpfx {

std::string render_path(const ValuePath& path) {
  if (path.empty()) return "<root>";
  std::ostringstream os;
  bool first = true;
  for (const auto& step : path) {
    switch (step.kind) {
      case PathStep::Kind::Field:
        if (!first) os << '.';
        os << step.field;
        break;
      case PathStep::Kind::Index: os << '[' << step.index << ']'; break;
      case PathStep::Kind::Just: os << (first ? "" : ".") << "just"; break;
      case PathStep::Kind::Left: os << (first ? "" : ".") << "left"; break;
      case PathStep::Kind::Right: os << (first ? "" : ".") << "right"; break;
    }
    first = false;
  }
  return os.str();
}

std::optional<Value> project(const ValuePath& path, const Value& v) {
  Value cur = v;
  for (const auto& step : path) {
    switch (step.kind) {
      case PathStep::Kind::Field:
        if (!cur.is_record() || !cur.has_field(step.field)) return std::nullopt;
        cur = Value(cur.field(step.field));
        break;
      case PathStep::Kind::Index:
        if (!cur.is_seq() || step.index >= cur.items().size()) return std::nullopt;
        cur = Value(cur.items()[step.index]);
        break;
      case PathStep::Kind::Just:
        if (!cur.is_maybe() || cur.is_nothing()) return std::nullopt;
        cur = Value(cur.from_just());
        break;
      case PathStep::Kind::Left:
        if (!cur.is_either() || !cur.is_left()) return std::nullopt;
        cur = Value(cur.either_payload());
        break;
      case PathStep::Kind::Right:
        if (!cur.is_either() || !cur.is_right()) return std::nullopt;
        cur = Value(cur.either_payload());
        break;
    }
  }
  return cur;
}

namespace {

std::string describe(const Value& v) { return to_sexpr(v); }

// Returns true when equal; otherwise fills path/reason.
bool diff(const Value& a, const Value& b, ValuePath& path, std::string& reason) {
  if (a.kind() != b.kind()) {
    reason = std::string(kind_name(a.kind())) + " vs " + std::string(kind_name(b.kind()));
    return false;
  }
  switch (a.kind()) {
    case Kind::Unit: return true;
    case Kind::Bool:
    case Kind::Int:
    case Kind::Str:
    case Kind::Tag:
    case Kind::Fn:
      if (a == b) return true;
      reason = describe(a) + " ≠ " + describe(b);
      return false;
    case Kind::Maybe:
      if (a.is_nothing() || b.is_nothing()) {
        if (a.is_nothing() && b.is_nothing()) return true;
        reason = describe(a) + " ≠ " + describe(b);
        return false;
      }
      path.push_back({PathStep::Kind::Just, {}, 0});
      if (!diff(a.from_just(), b.from_just(), path, reason)) return false;
      path.pop_back();
      return true;
    case Kind::Either:
      if (a.is_left() != b.is_left()) {
        reason = std::string(a.is_left() ? "left" : "right") + " vs " +
                 (b.is_left() ? "left" : "right");
        return false;
      }
      path.push_back({a.is_left() ? PathStep::Kind::Left : PathStep::Kind::Right, {}, 0});
      if (!diff(a.either_payload(), b.either_payload(), path, reason)) return false;
      path.pop_back();
      return true;
    case Kind::Record: {
      const auto& ra = a.as_record();
      const auto& rb = b.as_record();
      if (ra.names != rb.names) {
        reason = "record fields differ";
        return false;
      }
      for (std::size_t i = 0; i < ra.names.size(); ++i) {
        path.push_back({PathStep::Kind::Field, ra.names[i], 0});
        if (!diff(ra.values[i], rb.values[i], path, reason)) return false;
        path.pop_back();
      }
      return true;
    }
    case Kind::Seq: {
      const auto& xa = a.items();
      const auto& xb = b.items();
      std::size_t n = std::min(xa.size(), xb.size());
      for (std::size_t i = 0; i < n; ++i) {
        path.push_back({PathStep::Kind::Index, {}, i});
        if (!diff(xa[i], xb[i], path, reason)) return false;
        path.pop_back();
      }
      if (xa.size() != xb.size()) {
        reason = "length " + std::to_string(xa.size()) + " ≠ " +
                 std::to_string(xb.size());
        return false;
      }
      return true;
    }
  }
  return false;
}

int cmp(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) {
    throw ShapeError("cannot compare " + std::string(kind_name(a.kind())) +
                     " with " + std::string(kind_name(b.kind())));
  }
  switch (a.kind()) {
    case Kind::Int: return a.as_int() < b.as_int() ? -1 : (a.as_int() > b.as_int() ? 1 : 0);
    case Kind::Str: {
      int c = a.as_str().compare(b.as_str());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Seq: {
      const auto& xa = a.items();
      const auto& xb = b.items();
      for (std::size_t i = 0; i < xa.size() && i < xb.size(); ++i) {
        if (int c = cmp(xa[i], xb[i]); c != 0) return c;
      }
      return xa.size() < xb.size() ? -1 : (xa.size() > xb.size() ? 1 : 0);
    }
    case Kind::Record: {
      const auto& ra = a.as_record();
      const auto& rb = b.as_record();
      if (ra.names != rb.names) throw ShapeError("cannot compare records with different fields");
      for (std::size_t i = 0; i < ra.values.size(); ++i) {
        if (int c = cmp(ra.values[i], rb.values[i]); c != 0) return c;
      }
      return 0;
    }
    default:
      throw ShapeError(std::string(kind_name(a.kind())) + " is not an ordered shape");
  }
}

}  // namespace

DecEqResult dec_eq(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) {
    throw ShapeError("dec_eq on different shapes: " + std::string(kind_name(a.kind())) +
                     " and " + std::string(kind_name(b.kind())));
  }
  DecEqResult r;
  std::string reason;
  if (diff(a, b, r.where, reason)) {
    r.equal = true;
    r.witness = a;
    r.where.clear();
    return r;
  }
  r.reason = r.where.empty() ? reason : render_path(r.where) + ": " + reason;
  return r;
}

bool eq(const Value& a, const Value& b) { return dec_eq(a, b).equal; }
bool neq(const Value& a, const Value& b) { return !eq(a, b); }

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
  }
  return "?";
}

bool is_ordered_shape(const Value& v) {
  switch (v.kind()) {
    case Kind::Int:
    case Kind::Str: return true;
    case Kind::Seq:
      for (const auto& x : v.items()) {
        if (!is_ordered_shape(x)) return false;
      }
      return true;
    case Kind::Record:
      for (const auto& x : v.as_record().values) {
        if (!is_ordered_shape(x)) return false;
      }
      return true;
    default: return false;
  }
}

CompareEvidence compare_ev(const Value& a, const Value& b) {
  int c = cmp(a, b);
  Ordering o = c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
  return CompareEvidence{o, a, b};
}

bool is_nothing(const Value& m) { return m.is_nothing(); }

Value from_maybe(const Value& fallback, const Value& m) {
  return m.is_nothing() ? fallback : m.from_just();
}

}  // namespace wpfx
