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

#include "wpfx/dsl/compile.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "wpfx/optics.hpp"
#include "wpfx/prelude.hpp"

namespace wpfx::dsl {

namespace {

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(path)};
  for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);
  return parts;
}

Value set_path(const Value& whole, const std::vector<std::string>& path, std::size_t i,
               const Value& v) {
  if (i == path.size()) return v;
  return whole.with_field(path[i], set_path(whole.field(path[i]), path, i + 1, v));
}

class Evaluator {
 public:
  explicit Evaluator(const CheckedFile& cf) : cf_(cf) {}

  Value eval(const Syntax& s, const Bindings& vars) const {
    try {
      return eval_node(s, vars);
    } catch (const SourceError&) {
      throw;
    } catch (const Error& e) {
      throw RuntimeError(s.pos, e.what());
    }
  }

 private:
  Value lookup(const std::string& path, const Bindings& vars, Pos pos) const {
    auto parts = split_path(path);
    auto it = vars.find(parts.front());
    if (it == vars.end()) throw RuntimeError(pos, "unbound variable " + parts.front());
    Value v = it->second;
    for (std::size_t i = 1; i < parts.size(); ++i) v = Value(v.field(parts[i]));
    return v;
  }

  Value eval_node(const Syntax& s, const Bindings& vars) const {
    using Op = Syntax::Op;
    switch (s.op) {
      case Op::Lit: return s.literal;
      case Op::Var: return lookup(s.text, vars, s.pos);
      case Op::Record: {
        auto it = cf_.record_order.find(&s);
        const std::vector<std::string>& order = it != cf_.record_order.end() ? it->second : s.binders;
        std::vector<std::pair<std::string, Value>> fields;
        for (const auto& name : order) {
          auto k = std::find(s.binders.begin(), s.binders.end(), name) - s.binders.begin();
          fields.emplace_back(name, eval(s.kids[k], vars));
        }
        return Value::record(std::move(fields));
      }
      case Op::Guard:
        for (const auto& b : s.kids) {
          if (b.op == Op::Otherwise) return eval(b.kids[0], vars);
          if (eval(b.kids[0], vars).as_bool()) return eval(b.kids[1], vars);
        }
        throw RuntimeError(s.pos, "guard chain without otherwise fell through");
      case Op::Set: {
        auto parts = split_path(s.text);
        Value root = lookup(parts.front(), vars, s.pos);
        return set_path(root, parts, 1, eval(s.kids[0], vars));
      }
      case Op::Quant: {
        bool any = s.text == "any";
        Bindings inner = vars;
        const Value seq = eval(s.kids[1], vars);
        for (const auto& item : seq.items()) {
          inner[s.binders[0]] = item;
          if (eval(s.kids[0], inner).as_bool() == any) return Value::boolean(any);
        }
        return Value::boolean(!any);
      }
      case Op::Prim: return prim(s, vars);
      default: break;
    }
    throw RuntimeError(s.pos, "not an expression");
  }

  Value prim(const Syntax& s, const Bindings& vars) const {
    const std::string& op = s.text;
    auto arg = [&](std::size_t i) { return eval(s.kids[i], vars); };
    if (op == "and" || op == "or") {
      bool is_and = op == "and";
      for (std::size_t i = 0; i < s.kids.size(); ++i) {
        if (arg(i).as_bool() != is_and) return Value::boolean(!is_and);
      }
      return Value::boolean(is_and);
    }
    if (op == "if") return arg(0).as_bool() ? arg(1) : arg(2);
    if (op == "seq") {
      std::vector<Value> items;
      for (std::size_t i = 0; i < s.kids.size(); ++i) items.push_back(arg(i));
      return Value::seq(std::move(items));
    }
    Value a = arg(0);
    if (op == "not") return Value::boolean(!a.as_bool());
    if (op == "is-nothing") return Value::boolean(a.is_nothing());
    if (op == "is-just") return Value::boolean(a.is_just());
    if (op == "is-left") return Value::boolean(a.is_left());
    if (op == "is-right") return Value::boolean(a.is_right());
    if (op == "length") return Value::integer(static_cast<std::int64_t>(a.items().size()));
    if (op == "show") return Value::str(to_sexpr(a));
    if (op == "just") return Value::just(a);
    if (op == "left") return Value::left(a);
    if (op == "right") return Value::right(a);
    Value b = arg(1);
    if (op == "+") return Value::integer(checked_add(a.as_int(), b.as_int()));
    if (op == "-") return Value::integer(checked_sub(a.as_int(), b.as_int()));
    if (op == "==") return Value::boolean(eq(a, b));
    if (op == "/=") return Value::boolean(neq(a, b));
    if (op == "compare") return Value::tag(std::string(ordering_name(compare_ev(a, b).ordering)));
    if (op == "<" || op == "<=" || op == ">" || op == ">=") {
      Ordering o = compare_ev(a, b).ordering;
      bool r = op == "<"    ? o == Ordering::LT
               : op == "<=" ? o != Ordering::GT
               : op == ">"  ? o == Ordering::GT
                            : o != Ordering::LT;
      return Value::boolean(r);
    }
    if (op == "index") {
      const auto& items = a.items();
      auto i = b.as_int();
      if (i < 0 || static_cast<std::size_t>(i) >= items.size()) return Value::nothing();
      return Value::just(items[static_cast<std::size_t>(i)]);
    }
    if (op == "append") {
      auto items = a.items();
      items.push_back(b);
      return Value::seq(std::move(items));
    }
    if (op == "concat") {
      auto items = a.items();
      items.insert(items.end(), b.items().begin(), b.items().end());
      return Value::seq(std::move(items));
    }
    if (op == "from-maybe") return from_maybe(a, b);
    throw RuntimeError(s.pos, "unknown primitive " + op);
  }

  const CheckedFile& cf_;
};

Lens state_lens(const std::string& path) {
  auto parts = split_path(path);
  parts.erase(parts.begin());  // "state"
  return path_lens(parts);
}

// Builds programs for effect E. Holds the checked file through a shared
// pointer because the continuations it creates outlive the call.
template <class E>
class Compiler : public std::enable_shared_from_this<Compiler<E>> {
 public:
  explicit Compiler(CheckedFile cf) : cf_(std::move(cf)), ev_(cf_) {}

  Prog<E> prog(const Syntax& s, const Bindings& vars) {
    try {
      return build(s, vars);
    } catch (const SourceError&) {
      throw;
    } catch (const Error& e) {
      throw RuntimeError(s.pos, e.what());
    }
  }

 private:
  Cont<E> cont(const Syntax& body, const Bindings& vars, const std::string& x) {
    auto self = this->shared_from_this();
    return [self, &body, vars, x](const Value& v) {
      Bindings inner = vars;
      inner[x] = v;
      return self->prog(body, inner);
    };
  }

  Thunk<E> thunk(const Syntax& body, const Bindings& vars) {
    auto self = this->shared_from_this();
    return [self, &body, vars] { return self->prog(body, vars); };
  }

  std::function<Value(const Value&)> fn(const Syntax& body, const Bindings& vars, const std::string& x) {
    auto self = this->shared_from_this();
    return [self, &body, vars, x](const Value& v) {
      Bindings inner = vars;
      inner[x] = v;
      return self->ev_.eval(body, inner);
    };
  }

  Prog<E> do_from(const Syntax& s, std::size_t i, const Bindings& vars) {
    const Syntax& step = s.kids[i];
    if (i + 1 == s.kids.size()) return prog(step, vars);
    auto self = this->shared_from_this();
    if (step.op == Syntax::Op::DoBind) {
      return wpfx::bind<E>(prog(step.kids[0], vars),
                     [self, &s, i, vars, x = step.text](const Value& v) {
                       Bindings inner = vars;
                       inner[x] = v;
                       return self->do_from(s, i + 1, inner);
                     },
                     step.text);
    }
    return wpfx::bind<E>(prog(step, vars),
                   [self, &s, i, vars](const Value&) { return self->do_from(s, i + 1, vars); }, "_");
  }

  Prog<E> build(const Syntax& s, const Bindings& vars) {
    using Op = Syntax::Op;
    auto self = this->shared_from_this();
    switch (s.op) {
      case Op::Return: return pure<E>(ev_.eval(s.kids[0], vars));
      case Op::Bind: return wpfx::bind<E>(prog(s.kids[0], vars), cont(s.kids[1], vars, s.binders[0]), s.binders[0]);
      case Op::Do: return do_from(s, 0, vars);
      case Op::IfGuards: {
        std::vector<Guard<E>> branches;
        Thunk<E> otherwise;
        for (const auto& b : s.kids) {
          if (b.op == Op::Otherwise) {
            otherwise = thunk(b.kids[0], vars);
            continue;
          }
          const Syntax& c = b.kids[0];
          Condition cond([self, &c, vars] { return self->ev_.eval(c, vars).as_bool(); }, print(c));
          branches.push_back(when_lazy<E>(std::move(cond), thunk(b.kids[1], vars)));
        }
        return if_guards_lazy<E>(std::move(branches), std::move(otherwise));
      }
      case Op::CaseEither:
        return case_either<E>(ev_.eval(s.kids[0], vars), cont(s.kids[1], vars, s.binders[0]),
                              cont(s.kids[2], vars, s.binders[1]));
      case Op::CaseMaybe:
        return case_maybe_lazy<E>(ev_.eval(s.kids[0], vars), thunk(s.kids[1], vars),
                                  cont(s.kids[2], vars, s.binders[0]));
      case Op::Fmap:
        return fmap<E>(prog(s.kids[1], vars), fn(s.kids[0], vars, s.binders[0]), s.binders[0]);
      case Op::Ap: {
        const Syntax& body = s.kids[0];
        std::string x = s.binders[0], y = s.binders[1];
        auto curried = [self, &body, vars, x, y](const Value& a) {
          return Value::function(
              [self, &body, vars, x, y, a](const Value& b) {
                Bindings inner = vars;
                inner[x] = a;
                inner[y] = b;
                return self->ev_.eval(body, inner);
              },
              "ap");
        };
        return ap<E>(fmap<E>(prog(s.kids[1], vars), curried, x), prog(s.kids[2], vars), "f", y);
      }
      case Op::Call: {
        const Decl* d = cf_.file->find(Decl::Kind::Define, s.text);
        Bindings params;
        for (std::size_t i = 0; i < s.kids.size(); ++i) params[d->params[i].name] = ev_.eval(s.kids[i], vars);
        return prog(d->body, params);
      }
      default: break;
    }
    if constexpr (std::is_same_v<E, EitherEffect>) {
      if (s.op == Op::Bail) return bail(ev_.eval(s.kids[0], vars));
    } else {
      switch (s.op) {
        case Op::Gets: return gets(fn(s.kids[0], vars, s.binders[0]), "gets " + print(s.kids[0]));
        case Op::Get: return get();
        case Op::Put: return put(ev_.eval(s.kids[0], vars));
        case Op::Ask: return ask();
        case Op::Tell: return tell(ev_.eval(s.kids[0], vars));
        case Op::Modify: return modify(fn(s.kids[0], vars, s.binders[0]));
        case Op::Use: {
          const std::string label = "use " + s.text;
          Lens l = state_lens(s.text);
          return gets([l](const Value& st) { return l.get(st); }, label);
        }
        case Op::Assign: return assign(state_lens(s.text), ev_.eval(s.kids[0], vars));
        case Op::Modifying:
          return modifying(state_lens(s.text), fn(s.kids[0], vars, s.binders[0]));
        default: break;
      }
    }
    throw RuntimeError(s.pos, "form not available for this effect");
  }

  CheckedFile cf_;
  Evaluator ev_;
};

// Constant literals for --env / --state: atoms, records and the value
// constructors, nothing else.
Value const_eval(const Syntax& s) {
  using Op = Syntax::Op;
  switch (s.op) {
    case Op::Lit: return s.literal;
    case Op::Record: {
      std::vector<std::pair<std::string, Value>> fields;
      for (std::size_t i = 0; i < s.kids.size(); ++i) fields.emplace_back(s.binders[i], const_eval(s.kids[i]));
      return Value::record(std::move(fields));
    }
    case Op::Prim: {
      std::vector<Value> args;
      for (const auto& k : s.kids) args.push_back(const_eval(k));
      if (s.text == "just") return Value::just(args.at(0));
      if (s.text == "left") return Value::left(args.at(0));
      if (s.text == "right") return Value::right(args.at(0));
      if (s.text == "seq") return Value::seq(std::move(args));
      break;
    }
    default: break;
  }
  throw LiteralError("literal may only contain constants, record, seq, just, left and right; found " +
                     print(s));
}

std::string at(const std::string& where) { return where.empty() ? "" : where + ": "; }

std::string nested(const std::string& where, const std::string& field) {
  return where.empty() ? field : where + "." + field;
}

[[noreturn]] void mismatch(const Shape& shape, const Value& v, const std::string& where) {
  throw LiteralError(at(where) + "expected " + print(shape) + ", got " + to_sexpr(v));
}

}  // namespace

Value eval_expr(const CheckedFile& cf, const Syntax& expr, const Bindings& vars) {
  return Evaluator(cf).eval(expr, vars);
}

EitherProg compile_either(const CheckedFile& cf) {
  if (cf.kind != EffectKind::Either) throw Error("program is declared rws, not either");
  auto c = std::make_shared<Compiler<EitherEffect>>(cf);
  return c->prog(cf.entry().body, {});
}

RwsProg compile_rws(const CheckedFile& cf) {
  if (cf.kind != EffectKind::Rws) throw Error("program is declared either, not rws");
  auto c = std::make_shared<Compiler<RwsEffect>>(cf);
  return c->prog(cf.entry().body, {});
}

namespace {

const Decl& post_decl(const CheckedFile& cf, std::string_view name) {
  const Decl* d = cf.post(name);
  if (!d) {
    std::string known;
    for (const auto& n : cf.post_names()) known += (known.empty() ? "" : ", ") + n;
    throw UnknownPostError("unknown postcondition " + std::string(name) +
                (known.empty() ? " (the file declares none)" : " (declared: " + known + ")"));
  }
  return *d;
}

}  // namespace

EitherPost either_post(const CheckedFile& cf, std::string_view name) {
  const Decl& d = post_decl(cf, name);
  auto keep = std::make_shared<const CheckedFile>(cf);
  const Syntax* body = &keep->post(name)->body;
  (void)d;
  return {std::string(name), [keep, body](const EitherOutcome& o) {
            return eval_expr(*keep, *body, {{"result", o.as_value()}}).as_bool();
          }};
}

RwsPost rws_post(const CheckedFile& cf, std::string_view name) {
  post_decl(cf, name);
  auto keep = std::make_shared<const CheckedFile>(cf);
  const Syntax* body = &keep->post(name)->body;
  return {std::string(name), [keep, body](const RwsOutcome& o) {
            return eval_expr(*keep, *body,
                             {{"result", o.value}, {"post-state", o.state}, {"outputs", Value::seq(o.outputs)}})
                .as_bool();
          }};
}

Value conform(const Value& v, const Shape& shape, const std::string& where) {
  using SK = Shape::Kind;
  switch (shape.kind) {
    case SK::Named: return v;  // unconstrained
    case SK::Unit: if (!v.is_unit()) mismatch(shape, v, where); return v;
    case SK::Bool: if (!v.is_bool()) mismatch(shape, v, where); return v;
    case SK::Int: if (!v.is_int()) mismatch(shape, v, where); return v;
    case SK::Str: if (!v.is_str()) mismatch(shape, v, where); return v;
    case SK::Tag: if (!v.is_tag()) mismatch(shape, v, where); return v;
    case SK::Maybe:
      if (!v.is_maybe()) mismatch(shape, v, where);
      return v.is_nothing() ? v : Value::just(conform(v.from_just(), shape.args[0], where));
    case SK::Either:
      if (!v.is_either()) mismatch(shape, v, where);
      return v.is_left() ? Value::left(conform(v.either_payload(), shape.args[0], where))
                         : Value::right(conform(v.either_payload(), shape.args[1], where));
    case SK::Seq: {
      if (!v.is_seq()) mismatch(shape, v, where);
      std::vector<Value> items;
      for (const auto& it : v.items()) items.push_back(conform(it, shape.args[0], where));
      return Value::seq(std::move(items));
    }
    case SK::Record: {
      if (!v.is_record()) mismatch(shape, v, where);
      for (const auto& name : v.as_record().names) {
        if (std::find(shape.fields.begin(), shape.fields.end(), name) == shape.fields.end()) {
          throw LiteralError(at(where) + "unexpected field " + name);
        }
      }
      std::vector<std::pair<std::string, Value>> fields;
      for (std::size_t i = 0; i < shape.fields.size(); ++i) {
        const auto& name = shape.fields[i];
        if (!v.has_field(name)) throw LiteralError(at(where) + "missing field " + name);
        fields.emplace_back(name, conform(v.field(name), shape.args[i], nested(where, name)));
      }
      return Value::record(std::move(fields));
    }
  }
  mismatch(shape, v, where);
}

Value parse_literal(std::string_view text, const std::optional<Shape>& shape) {
  Syntax s;
  try {
    s = parse_expr_text(text);
  } catch (const ParseError& e) {
    throw LiteralError(std::string("malformed literal: ") + e.what());
  }
  Value v;
  try {
    v = const_eval(s);
  } catch (const LiteralError&) {
    throw;
  } catch (const Error& e) {
    throw LiteralError(std::string("malformed literal: ") + e.what());
  }
  return shape ? conform(v, *shape) : v;
}

}  // namespace wpfx::dsl
