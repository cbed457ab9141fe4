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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpfx/dsl/sexpr.hpp"
#include "wpfx/value.hpp"

namespace wpfx::dsl {

enum class EffectKind { Either, Rws };

std::string_view effect_name(EffectKind k);

/// Declared shape of a value.
struct Shape {
  enum class Kind { Unit, Bool, Int, Str, Tag, Named, Maybe, Either, Seq, Record };
  Kind kind = Kind::Unit;
  std::string name;                 // Named
  std::vector<Shape> args;          // Maybe/Seq: 1, Either: 2, Record: one per field
  std::vector<std::string> fields;  // Record
  Pos pos;

  bool operator==(const Shape& o) const;
};

/// Syntax tree shared by programs and expressions. The meaning of `text`,
/// `binders` and `kids` depends on `op`; see the parser for the layout of
/// each form.
struct Syntax {
  enum class Op {
    // expressions
    Lit,       // literal
    Var,       // text: identifier, possibly a dotted field path (x.a.b)
    Prim,      // text: primitive name, kids: arguments
    Record,    // binders: field names, kids: field values
    Guard,     // kids: Branch..., Otherwise (optional)
    Set,       // text: dotted path rooted at a variable, kids: [value]
    Quant,     // text: any|all, binders: [x], kids: [body, seq]
    // programs
    Return,      // kids: [expr]
    Bail,        // kids: [expr]
    Bind,        // binders: [x], kids: [first, rest]
    Do,          // kids: steps, last is the result program
    DoBind,      // text: binder, kids: [prog]   (do-step `(<- x prog)`)
    IfGuards,    // kids: Branch..., Otherwise (optional)
    Branch,      // kids: [condition, body]
    Otherwise,   // kids: [body]
    CaseEither,  // binders: [l, r], kids: [scrutinee, on_left, on_right]
    CaseMaybe,   // binders: [j], kids: [scrutinee, on_nothing, on_just]
    Gets,        // binders: [s], kids: [expr]
    Get,
    Put,         // kids: [expr]
    Ask,
    Tell,        // kids: [expr]
    Modify,      // binders: [s], kids: [expr]
    Use,         // text: lens path
    Assign,      // text: lens path, kids: [expr]
    Modifying,   // text: lens path, binders: [x], kids: [expr]
    Fmap,        // binders: [x], kids: [expr, prog]
    Ap,          // binders: [x, y], kids: [expr, prog, prog]
    Call,        // text: definition name, kids: argument expressions
  };

  Op op = Op::Lit;
  std::string text;
  Value literal;
  std::vector<std::string> binders;
  std::vector<Syntax> kids;
  Pos pos;

  /// Structural equality; positions are ignored.
  bool operator==(const Syntax& o) const;
};

struct Param {
  std::string name;
  Shape shape;
  bool operator==(const Param& o) const { return name == o.name && shape == o.shape; }
};

struct Decl {
  enum class Kind { Type, State, Env, Output, Error, Result, Define, Entry, Post };
  Kind kind = Kind::Entry;
  std::string name;  // Type, Define, Post
  Shape shape;       // Type, State, Env, Output, Error, Result
  std::vector<Param> params;  // Define
  Syntax body;       // Define, Entry (program), Post (expression)
  Pos pos;

  bool operator==(const Decl& o) const;
};

struct ProgramFile {
  EffectKind kind = EffectKind::Either;
  std::vector<Decl> decls;

  const Decl* find(Decl::Kind k) const;
  const Decl* find(Decl::Kind k, std::string_view name) const;
  std::vector<const Decl*> all(Decl::Kind k) const;

  bool operator==(const ProgramFile& o) const { return kind == o.kind && decls == o.decls; }
};

/// Parses a whole program file. Throws ParseError on malformed input,
/// duplicate definition or postcondition names, and unknown forms.
ProgramFile parse(std::string_view text);

/// Parses a standalone expression (used for --env / --state literals).
Syntax parse_expr_text(std::string_view text);

/// Canonical text of a file; parse(print(f)) == f.
std::string print(const ProgramFile& f);
std::string print(const Syntax& s);
std::string print(const Shape& s);

/// Names of the primitive operators accepted inside expressions.
bool is_primitive(std::string_view name);

}  // namespace wpfx::dsl
