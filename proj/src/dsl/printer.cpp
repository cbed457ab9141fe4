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

#include <set>
#include <string_view>

#include "wpfx/dsl/syntax.hpp"

namespace wpfx::dsl {

namespace {

// Printing goes through an intermediate s-expression tree so that layout is
// decided in one place.
SExpr atom(std::string text) {
  SExpr e;
  e.kind = SExpr::Kind::Symbol;
  e.text = std::move(text);
  return e;
}

SExpr list(std::vector<SExpr> items) {
  SExpr e;
  e.kind = SExpr::Kind::List;
  e.items = std::move(items);
  return e;
}

SExpr unparse_shape(const Shape& s) {
  switch (s.kind) {
    case Shape::Kind::Unit: return atom("Unit");
    case Shape::Kind::Bool: return atom("Bool");
    case Shape::Kind::Int: return atom("Int");
    case Shape::Kind::Str: return atom("Str");
    case Shape::Kind::Tag: return atom("Tag");
    case Shape::Kind::Named: return atom(s.name);
    case Shape::Kind::Maybe: return list({atom("Maybe"), unparse_shape(s.args.at(0))});
    case Shape::Kind::Seq: return list({atom("Seq"), unparse_shape(s.args.at(0))});
    case Shape::Kind::Either:
      return list({atom("Either"), unparse_shape(s.args.at(0)), unparse_shape(s.args.at(1))});
    case Shape::Kind::Record: {
      std::vector<SExpr> items{atom("Record")};
      for (std::size_t i = 0; i < s.fields.size(); ++i) {
        items.push_back(list({atom(s.fields[i]), unparse_shape(s.args[i])}));
      }
      return list(std::move(items));
    }
  }
  return atom("?");
}

SExpr unparse(const Syntax& s);

std::vector<SExpr> with_head(std::string head, const std::vector<Syntax>& kids, std::size_t from = 0) {
  std::vector<SExpr> items{atom(std::move(head))};
  for (std::size_t i = from; i < kids.size(); ++i) items.push_back(unparse(kids[i]));
  return items;
}

SExpr lambda(const std::vector<std::string>& binders, const Syntax& body) {
  std::vector<SExpr> items;
  for (const auto& b : binders) items.push_back(atom(b));
  items.push_back(unparse(body));
  return list(std::move(items));
}

SExpr unparse(const Syntax& s) {
  using Op = Syntax::Op;
  switch (s.op) {
    case Op::Lit: return atom(to_sexpr(s.literal));
    case Op::Var: return atom(s.text);
    case Op::Prim: return list(with_head(s.text, s.kids));
    case Op::Record: {
      std::vector<SExpr> items{atom("record")};
      for (std::size_t i = 0; i < s.binders.size(); ++i) {
        items.push_back(list({atom(s.binders[i]), unparse(s.kids[i])}));
      }
      return list(std::move(items));
    }
    case Op::Guard: return list(with_head("guard", s.kids));
    case Op::IfGuards: return list(with_head("if-guards", s.kids));
    case Op::Branch: return list({unparse(s.kids.at(0)), unparse(s.kids.at(1))});
    case Op::Otherwise: return list({atom("otherwise"), unparse(s.kids.at(0))});
    case Op::Set: return list({atom("set"), atom(s.text), unparse(s.kids.at(0))});
    case Op::Quant:
      return list({atom(s.text), lambda(s.binders, s.kids.at(0)), unparse(s.kids.at(1))});
    case Op::Return: return list(with_head("return", s.kids));
    case Op::Bail: return list(with_head("bail", s.kids));
    case Op::Put: return list(with_head("put", s.kids));
    case Op::Tell: return list(with_head("tell", s.kids));
    case Op::Bind: return list({atom("bind"), unparse(s.kids.at(0)), lambda(s.binders, s.kids.at(1))});
    case Op::Do: return list(with_head("do", s.kids));
    case Op::DoBind: return list({atom("<-"), atom(s.text), unparse(s.kids.at(0))});
    case Op::CaseEither:
      return list({atom("case-either"), unparse(s.kids.at(0)),
                   list({atom("left"), atom(s.binders.at(0)), unparse(s.kids.at(1))}),
                   list({atom("right"), atom(s.binders.at(1)), unparse(s.kids.at(2))})});
    case Op::CaseMaybe:
      return list({atom("case-maybe"), unparse(s.kids.at(0)),
                   list({atom("nothing"), unparse(s.kids.at(1))}),
                   list({atom("just"), atom(s.binders.at(0)), unparse(s.kids.at(2))})});
    case Op::Gets: return list({atom("gets"), lambda(s.binders, s.kids.at(0))});
    case Op::Modify: return list({atom("modify"), lambda(s.binders, s.kids.at(0))});
    case Op::Get: return list({atom("get")});
    case Op::Ask: return list({atom("ask")});
    case Op::Use: return list({atom("use"), atom(s.text)});
    case Op::Assign: return list({atom("assign"), atom(s.text), unparse(s.kids.at(0))});
    case Op::Modifying:
      return list({atom("modifying"), atom(s.text), lambda(s.binders, s.kids.at(0))});
    case Op::Fmap:
      return list({atom("fmap"), lambda(s.binders, s.kids.at(0)), unparse(s.kids.at(1))});
    case Op::Ap:
      return list({atom("ap"), lambda(s.binders, s.kids.at(0)), unparse(s.kids.at(1)),
                   unparse(s.kids.at(2))});
    case Op::Call: return list(with_head(s.text, s.kids));
  }
  return atom("?");
}

SExpr unparse(const Decl& d) {
  switch (d.kind) {
    case Decl::Kind::Type: return list({atom("type"), atom(d.name), unparse_shape(d.shape)});
    case Decl::Kind::State: return list({atom("state"), unparse_shape(d.shape)});
    case Decl::Kind::Env: return list({atom("env"), unparse_shape(d.shape)});
    case Decl::Kind::Output: return list({atom("output"), unparse_shape(d.shape)});
    case Decl::Kind::Error: return list({atom("error"), unparse_shape(d.shape)});
    case Decl::Kind::Result: return list({atom("result"), unparse_shape(d.shape)});
    case Decl::Kind::Define: {
      std::vector<SExpr> sig{atom(d.name)};
      for (const auto& p : d.params) sig.push_back(list({atom(p.name), unparse_shape(p.shape)}));
      return list({atom("define"), list(std::move(sig)), unparse(d.body)});
    }
    case Decl::Kind::Entry: return list({atom("entry"), unparse(d.body)});
    case Decl::Kind::Post: return list({atom("post"), atom(d.name), unparse(d.body)});
  }
  return atom("?");
}

std::string escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

void flat(const SExpr& e, std::string& out) {
  switch (e.kind) {
    case SExpr::Kind::Symbol: out += e.text; return;
    case SExpr::Kind::Int: out += std::to_string(e.number); return;
    case SExpr::Kind::Str: out += escape(e.text); return;
    case SExpr::Kind::List:
      out += '(';
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        flat(e.items[i], out);
      }
      out += ')';
  }
}

constexpr std::size_t kWidth = 88;

// Lists that do not fit on the rest of the line keep their head (and a
// leading argument that names the form, as in `(post name` or
// `(define (f ...)`) on the first line and put every remaining item on its
// own line, indented two columns past the opening parenthesis. `column` is
// where `e` starts and `closers` counts the parentheses printed right after it.
void layout(const SExpr& e, std::size_t column, std::size_t closers, std::string& out) {
  std::string one;
  flat(e, one);
  if (!e.is_list() || column + one.size() + closers <= kWidth || e.items.size() < 2) {
    out += one;
    return;
  }
  static const std::set<std::string_view> kKeepFirst{
      "define", "type", "post", "case-either", "case-maybe", "assign", "modifying",
      "bind", "fmap", "ap", "any", "all", "set", "<-"};
  out += '(';
  std::size_t i = 0;
  std::string head;
  flat(e.items[i++], head);
  out += head;
  bool keep = !e.items[1].is_list() ||
              (e.items[0].is_symbol() && kKeepFirst.count(e.items[0].text) > 0);
  auto closers_after = [&](std::size_t k) { return k + 1 == e.items.size() ? closers + 1 : 0; };
  if (keep) {
    out += ' ';
    layout(e.items[i], column + 2 + head.size(), closers_after(i), out);
    ++i;
  }
  for (; i < e.items.size(); ++i) {
    out += '\n';
    out.append(column + 2, ' ');
    layout(e.items[i], column + 2, closers_after(i), out);
  }
  out += ')';
}

}  // namespace

std::string print(const ProgramFile& f) {
  std::string out = "(program ";
  out += effect_name(f.kind);
  for (const auto& d : f.decls) {
    out += "\n  ";
    layout(unparse(d), 2, &d == &f.decls.back() ? 1 : 0, out);
  }
  out += ")\n";
  return out;
}

std::string print(const Syntax& s) {
  std::string out;
  flat(unparse(s), out);
  return out;
}

std::string print(const Shape& s) {
  std::string out;
  flat(unparse_shape(s), out);
  return out;
}

}  // namespace wpfx::dsl
