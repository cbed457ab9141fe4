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

#include <algorithm>
#include <array>
#include <set>

#include "wpfx/dsl/syntax.hpp"

namespace wpfx::dsl {

std::string_view effect_name(EffectKind k) { return k == EffectKind::Either ? "either" : "rws"; }

bool Shape::operator==(const Shape& o) const {
  return kind == o.kind && name == o.name && args == o.args && fields == o.fields;
}

bool Syntax::operator==(const Syntax& o) const {
  return op == o.op && text == o.text && literal == o.literal && binders == o.binders &&
         kids == o.kids;
}

bool Decl::operator==(const Decl& o) const {
  return kind == o.kind && name == o.name && shape == o.shape && params == o.params &&
         body == o.body;
}

const Decl* ProgramFile::find(Decl::Kind k) const {
  for (const auto& d : decls) {
    if (d.kind == k) return &d;
  }
  return nullptr;
}

const Decl* ProgramFile::find(Decl::Kind k, std::string_view name) const {
  for (const auto& d : decls) {
    if (d.kind == k && d.name == name) return &d;
  }
  return nullptr;
}

std::vector<const Decl*> ProgramFile::all(Decl::Kind k) const {
  std::vector<const Decl*> out;
  for (const auto& d : decls) {
    if (d.kind == k) out.push_back(&d);
  }
  return out;
}

namespace {

struct PrimInfo {
  std::string_view name;
  int arity;  // -1: any number
};

constexpr std::array<PrimInfo, 27> kPrims{{
    {"+", 2},        {"-", 2},          {"==", 2},        {"/=", 2},       {"<", 2},
    {"<=", 2},       {">", 2},          {">=", 2},        {"and", -1},     {"or", -1},
    {"not", 1},      {"is-nothing", 1}, {"is-just", 1},   {"is-left", 1},  {"is-right", 1},
    {"length", 1},   {"index", 2},      {"append", 2},    {"concat", 2},   {"from-maybe", 2},
    {"show", 1},     {"compare", 2},    {"just", 1},      {"left", 1},     {"right", 1},
    {"seq", -1},     {"if", 3},
}};

const PrimInfo* find_prim(std::string_view name) {
  for (const auto& p : kPrims) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const std::set<std::string_view> kProgKeywords{
    "return", "bail",  "bind", "do",     "if-guards", "case-either", "case-maybe",
    "gets",   "get",   "put",  "ask",    "tell",      "modify",      "use",
    "assign", "modifying", "fmap", "ap"};

bool valid_ident(std::string_view s) {
  if (s.empty()) return false;
  char c = s.front();
  if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '\'';
  });
}

bool valid_path(std::string_view s) {
  std::size_t start = 0;
  for (;;) {
    std::size_t dot = s.find('.', start);
    if (!valid_ident(s.substr(start, dot == s.npos ? s.npos : dot - start))) return false;
    if (dot == s.npos) return true;
    start = dot + 1;
  }
}

class Parser {
 public:
  ProgramFile file(const std::vector<SExpr>& top) {
    if (top.empty()) throw ParseError({1, 1}, "empty input: expected (program ...)");
    if (top.size() > 1) throw ParseError(top[1].pos, "unexpected datum after program form");
    const SExpr& root = top.front();
    if (!root.is_form("program")) throw ParseError(root.pos, "expected (program either|rws ...)");
    if (root.items.size() < 2 || !root.items[1].is_symbol()) {
      throw ParseError(root.pos, "program form needs an effect kind (either or rws)");
    }
    ProgramFile pf;
    const auto& kind = root.items[1];
    if (kind.text == "either") {
      pf.kind = EffectKind::Either;
    } else if (kind.text == "rws") {
      pf.kind = EffectKind::Rws;
    } else {
      throw ParseError(kind.pos, "unknown effect kind '" + kind.text + "' (expected either or rws)");
    }
    for (std::size_t i = 2; i < root.items.size(); ++i) pf.decls.push_back(decl(root.items[i], pf));
    return pf;
  }

  Syntax expr(const SExpr& e) {
    Syntax s;
    s.pos = e.pos;
    switch (e.kind) {
      case SExpr::Kind::Int:
        try {
          s.literal = Value::integer(e.number);
        } catch (const OverflowError&) {
          throw ParseError(e.pos, "integer literal " + e.text + " outside 32-bit range");
        }
        return s;
      case SExpr::Kind::Str: s.literal = Value::str(e.text); return s;
      case SExpr::Kind::Symbol: return symbol_expr(e);
      case SExpr::Kind::List: break;
    }
    if (e.items.empty()) throw ParseError(e.pos, "empty form in expression");
    const SExpr& head = e.items.front();
    if (!head.is_symbol()) throw ParseError(head.pos, "expression form must start with an operator name");
    const std::string& h = head.text;
    if (h == "record") {
      s.op = Syntax::Op::Record;
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        const auto& f = e.items[i];
        if (!f.is_list() || f.items.size() != 2 || !f.items[0].is_symbol() || !valid_ident(f.items[0].text)) {
          throw ParseError(f.pos, "record field must look like (name value)");
        }
        if (std::find(s.binders.begin(), s.binders.end(), f.items[0].text) != s.binders.end()) {
          throw ParseError(f.pos, "duplicate record field " + f.items[0].text);
        }
        s.binders.push_back(f.items[0].text);
        s.kids.push_back(expr(f.items[1]));
      }
      return s;
    }
    if (h == "guard") {
      s.op = Syntax::Op::Guard;
      branches(e, 1, s, [this](const SExpr& x) { return expr(x); });
      return s;
    }
    if (h == "set") {
      need(e, 3, "(set path value)");
      if (!e.items[1].is_symbol() || !valid_path(e.items[1].text) ||
          e.items[1].text.find('.') == std::string::npos) {
        throw ParseError(e.items[1].pos, "set needs a dotted path such as s.field");
      }
      s.op = Syntax::Op::Set;
      s.text = e.items[1].text;
      s.kids.push_back(expr(e.items[2]));
      return s;
    }
    if (h == "any" || h == "all") {
      need(e, 3, "(" + h + " (x body) sequence)");
      s.op = Syntax::Op::Quant;
      s.text = h;
      auto [x, body] = lambda(e.items[1], 1);
      s.binders = x;
      s.kids.push_back(expr(body));
      s.kids.push_back(expr(e.items[2]));
      return s;
    }
    const PrimInfo* prim = find_prim(h);
    if (!prim) throw ParseError(head.pos, "unknown expression form '" + h + "'");
    int n = static_cast<int>(e.items.size()) - 1;
    if (prim->arity >= 0 && n != prim->arity) {
      throw ParseError(e.pos, "'" + h + "' takes " + std::to_string(prim->arity) + " argument(s), got " +
                                  std::to_string(n));
    }
    s.op = Syntax::Op::Prim;
    s.text = h;
    for (std::size_t i = 1; i < e.items.size(); ++i) s.kids.push_back(expr(e.items[i]));
    return s;
  }

  Syntax prog(const SExpr& e) {
    Syntax s;
    s.pos = e.pos;
    if (!e.is_list() || e.items.empty() || !e.items.front().is_symbol()) {
      throw ParseError(e.pos, "expected a program form such as (return ...)");
    }
    const std::string& h = e.items.front().text;
    using Op = Syntax::Op;
    if (h == "return" || h == "bail" || h == "put" || h == "tell") {
      need(e, 2, "(" + h + " expr)");
      s.op = h == "return" ? Op::Return : h == "bail" ? Op::Bail : h == "put" ? Op::Put : Op::Tell;
      s.kids.push_back(expr(e.items[1]));
    } else if (h == "bind") {
      need(e, 3, "(bind program (x program))");
      s.op = Op::Bind;
      s.kids.push_back(prog(e.items[1]));
      auto [x, body] = lambda(e.items[2], 1);
      s.binders = x;
      s.kids.push_back(prog(body));
    } else if (h == "do") {
      if (e.items.size() < 2) throw ParseError(e.pos, "do needs at least one program");
      s.op = Op::Do;
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        const auto& step = e.items[i];
        if (step.is_form("<-")) {
          if (i + 1 == e.items.size()) throw ParseError(step.pos, "do block cannot end with a binding step");
          need(step, 3, "(<- x program)");
          Syntax b;
          b.op = Op::DoBind;
          b.pos = step.pos;
          b.text = ident(step.items[1]);
          b.kids.push_back(prog(step.items[2]));
          s.kids.push_back(std::move(b));
        } else {
          s.kids.push_back(prog(step));
        }
      }
    } else if (h == "if-guards") {
      s.op = Op::IfGuards;
      branches(e, 1, s, [this](const SExpr& x) { return prog(x); });
    } else if (h == "case-either") {
      need(e, 4, "(case-either expr (left l program) (right r program))");
      s.op = Op::CaseEither;
      s.kids.push_back(expr(e.items[1]));
      auto [l, lp] = arm(e.items[2], "left", true);
      auto [r, rp] = arm(e.items[3], "right", true);
      s.binders = {l, r};
      s.kids.push_back(std::move(lp));
      s.kids.push_back(std::move(rp));
    } else if (h == "case-maybe") {
      need(e, 4, "(case-maybe expr (nothing program) (just x program))");
      s.op = Op::CaseMaybe;
      s.kids.push_back(expr(e.items[1]));
      auto [unused, np] = arm(e.items[2], "nothing", false);
      auto [j, jp] = arm(e.items[3], "just", true);
      s.binders = {j};
      s.kids.push_back(std::move(np));
      s.kids.push_back(std::move(jp));
    } else if (h == "gets" || h == "modify") {
      need(e, 2, "(" + h + " (s expr))");
      s.op = h == "gets" ? Op::Gets : Op::Modify;
      auto [x, body] = lambda(e.items[1], 1);
      s.binders = x;
      s.kids.push_back(expr(body));
    } else if (h == "get" || h == "ask") {
      need(e, 1, "(" + h + ")");
      s.op = h == "get" ? Op::Get : Op::Ask;
    } else if (h == "use") {
      need(e, 2, "(use path)");
      s.op = Op::Use;
      s.text = path(e.items[1]);
    } else if (h == "assign") {
      need(e, 3, "(assign path expr)");
      s.op = Op::Assign;
      s.text = path(e.items[1]);
      s.kids.push_back(expr(e.items[2]));
    } else if (h == "modifying") {
      need(e, 3, "(modifying path (x expr))");
      s.op = Op::Modifying;
      s.text = path(e.items[1]);
      auto [x, body] = lambda(e.items[2], 1);
      s.binders = x;
      s.kids.push_back(expr(body));
    } else if (h == "fmap") {
      need(e, 3, "(fmap (x expr) program)");
      s.op = Op::Fmap;
      auto [x, body] = lambda(e.items[1], 1);
      s.binders = x;
      s.kids.push_back(expr(body));
      s.kids.push_back(prog(e.items[2]));
    } else if (h == "ap") {
      need(e, 4, "(ap (x y expr) program program)");
      s.op = Op::Ap;
      auto [xy, body] = lambda(e.items[1], 2);
      s.binders = xy;
      s.kids.push_back(expr(body));
      s.kids.push_back(prog(e.items[2]));
      s.kids.push_back(prog(e.items[3]));
    } else {
      if (!valid_ident(h) || find_prim(h)) {
        throw ParseError(e.pos, "unknown program form '" + h + "'");
      }
      s.op = Op::Call;
      s.text = h;
      for (std::size_t i = 1; i < e.items.size(); ++i) s.kids.push_back(expr(e.items[i]));
    }
    return s;
  }

  Shape shape(const SExpr& e) {
    Shape s;
    s.pos = e.pos;
    if (e.is_symbol()) {
      static const std::pair<std::string_view, Shape::Kind> base[] = {
          {"Unit", Shape::Kind::Unit}, {"Bool", Shape::Kind::Bool}, {"Int", Shape::Kind::Int},
          {"Str", Shape::Kind::Str},   {"Tag", Shape::Kind::Tag}};
      for (const auto& [n, k] : base) {
        if (e.text == n) {
          s.kind = k;
          return s;
        }
      }
      if (!valid_ident(e.text)) throw ParseError(e.pos, "malformed shape name '" + e.text + "'");
      s.kind = Shape::Kind::Named;
      s.name = e.text;
      return s;
    }
    if (!e.is_list() || e.items.empty() || !e.items[0].is_symbol()) {
      throw ParseError(e.pos, "expected a shape");
    }
    const std::string& h = e.items[0].text;
    if (h == "Maybe" || h == "Seq") {
      need(e, 2, "(" + h + " shape)");
      s.kind = h == "Maybe" ? Shape::Kind::Maybe : Shape::Kind::Seq;
      s.args.push_back(shape(e.items[1]));
    } else if (h == "Either") {
      need(e, 3, "(Either shape shape)");
      s.kind = Shape::Kind::Either;
      s.args.push_back(shape(e.items[1]));
      s.args.push_back(shape(e.items[2]));
    } else if (h == "Record") {
      s.kind = Shape::Kind::Record;
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        const auto& f = e.items[i];
        if (!f.is_list() || f.items.size() != 2) throw ParseError(f.pos, "record field must look like (name shape)");
        std::string name = ident(f.items[0]);
        if (std::find(s.fields.begin(), s.fields.end(), name) != s.fields.end()) {
          throw ParseError(f.pos, "duplicate record field " + name);
        }
        s.fields.push_back(name);
        s.args.push_back(shape(f.items[1]));
      }
    } else {
      throw ParseError(e.pos, "unknown shape form '" + h + "'");
    }
    return s;
  }

 private:
  Decl decl(const SExpr& e, const ProgramFile& pf) {
    if (!e.is_list() || e.items.empty() || !e.items[0].is_symbol()) {
      throw ParseError(e.pos, "expected a declaration such as (entry ...)");
    }
    Decl d;
    d.pos = e.pos;
    const std::string& h = e.items[0].text;
    static const std::pair<std::string_view, Decl::Kind> roles[] = {
        {"state", Decl::Kind::State},   {"env", Decl::Kind::Env},
        {"output", Decl::Kind::Output}, {"error", Decl::Kind::Error},
        {"result", Decl::Kind::Result}};
    for (const auto& [n, k] : roles) {
      if (h == n) {
        need(e, 2, "(" + h + " shape)");
        if (pf.find(k)) throw ParseError(e.pos, "duplicate " + h + " declaration");
        d.kind = k;
        d.shape = shape(e.items[1]);
        return d;
      }
    }
    if (h == "type") {
      need(e, 3, "(type Name shape)");
      d.kind = Decl::Kind::Type;
      d.name = ident(e.items[1]);
      if (pf.find(Decl::Kind::Type, d.name)) throw ParseError(e.pos, "duplicate type " + d.name);
      d.shape = shape(e.items[2]);
    } else if (h == "define") {
      need(e, 3, "(define (name (param shape)...) program)");
      const auto& sig = e.items[1];
      if (!sig.is_list() || sig.items.empty()) throw ParseError(sig.pos, "define needs (name params...)");
      d.kind = Decl::Kind::Define;
      d.name = ident(sig.items[0]);
      if (kProgKeywords.count(d.name) || find_prim(d.name)) {
        throw ParseError(sig.pos, "'" + d.name + "' is a reserved form name");
      }
      if (pf.find(Decl::Kind::Define, d.name)) throw ParseError(e.pos, "duplicate definition " + d.name);
      for (std::size_t i = 1; i < sig.items.size(); ++i) {
        const auto& p = sig.items[i];
        if (!p.is_list() || p.items.size() != 2) throw ParseError(p.pos, "parameter must look like (name shape)");
        Param param{ident(p.items[0]), shape(p.items[1])};
        for (const auto& q : d.params) {
          if (q.name == param.name) throw ParseError(p.pos, "duplicate parameter " + param.name);
        }
        d.params.push_back(std::move(param));
      }
      d.body = prog(e.items[2]);
    } else if (h == "entry") {
      need(e, 2, "(entry program)");
      if (pf.find(Decl::Kind::Entry)) throw ParseError(e.pos, "duplicate entry declaration");
      d.kind = Decl::Kind::Entry;
      d.body = prog(e.items[1]);
    } else if (h == "post") {
      need(e, 3, "(post name expr)");
      d.kind = Decl::Kind::Post;
      d.name = ident(e.items[1]);
      if (pf.find(Decl::Kind::Post, d.name)) throw ParseError(e.pos, "duplicate postcondition " + d.name);
      d.body = expr(e.items[2]);
    } else {
      throw ParseError(e.pos, "unknown declaration '" + h + "'");
    }
    return d;
  }

  Syntax symbol_expr(const SExpr& e) {
    Syntax s;
    s.pos = e.pos;
    const std::string& t = e.text;
    if (t == "true" || t == "false") {
      s.literal = Value::boolean(t == "true");
    } else if (t == "unit") {
      s.literal = Value::unit();
    } else if (t == "nothing") {
      s.literal = Value::nothing();
    } else if (t.size() > 1 && t[0] == '\'') {
      if (!valid_ident(std::string_view(t).substr(1))) throw ParseError(e.pos, "malformed tag " + t);
      s.literal = Value::tag(t.substr(1));
    } else if (valid_path(t)) {
      s.op = Syntax::Op::Var;
      s.text = t;
    } else {
      throw ParseError(e.pos, "unexpected symbol '" + t + "'");
    }
    return s;
  }

  template <class Sub>
  void branches(const SExpr& e, std::size_t from, Syntax& s, Sub&& sub) {
    for (std::size_t i = from; i < e.items.size(); ++i) {
      const auto& b = e.items[i];
      if (b.is_form("otherwise")) {
        if (i + 1 != e.items.size()) throw ParseError(b.pos, "otherwise must be the last branch");
        need(b, 2, "(otherwise body)");
        Syntax o;
        o.op = Syntax::Op::Otherwise;
        o.pos = b.pos;
        o.kids.push_back(sub(b.items[1]));
        s.kids.push_back(std::move(o));
        return;
      }
      if (!b.is_list() || b.items.size() != 2) throw ParseError(b.pos, "guard branch must look like (condition body)");
      Syntax br;
      br.op = Syntax::Op::Branch;
      br.pos = b.pos;
      br.kids.push_back(expr(b.items[0]));
      br.kids.push_back(sub(b.items[1]));
      s.kids.push_back(std::move(br));
    }
  }

  std::pair<std::vector<std::string>, SExpr> lambda(const SExpr& e, std::size_t nbinders) {
    if (!e.is_list() || e.items.size() != nbinders + 1) {
      throw ParseError(e.pos, nbinders == 1 ? "expected (x body)" : "expected (x y body)");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nbinders; ++i) names.push_back(ident(e.items[i]));
    return {names, e.items[nbinders]};
  }

  std::pair<std::string, Syntax> arm(const SExpr& e, std::string_view tag, bool binds) {
    std::size_t want = binds ? 3 : 2;
    if (!e.is_form(tag) || e.items.size() != want) {
      throw ParseError(e.pos, "expected (" + std::string(tag) + (binds ? " x" : "") + " program)");
    }
    std::string x = binds ? ident(e.items[1]) : std::string();
    return {x, prog(e.items[want - 1])};
  }

  std::string ident(const SExpr& e) {
    if (!e.is_symbol() || !valid_ident(e.text)) throw ParseError(e.pos, "expected an identifier");
    return e.text;
  }

  std::string path(const SExpr& e) {
    if (!e.is_symbol() || !valid_path(e.text)) throw ParseError(e.pos, "expected a lens path such as state.field");
    return e.text;
  }

  static void need(const SExpr& e, std::size_t n, const std::string& shape) {
    if (e.items.size() != n) throw ParseError(e.pos, "malformed form, expected " + shape);
  }
};

}  // namespace

bool is_primitive(std::string_view name) { return find_prim(name) != nullptr; }

ProgramFile parse(std::string_view text) { return Parser().file(read_all(text)); }

Syntax parse_expr_text(std::string_view text) {
  auto top = read_all(text);
  if (top.size() != 1) throw ParseError({1, 1}, "expected exactly one expression");
  return Parser().expr(top.front());
}

}  // namespace wpfx::dsl
