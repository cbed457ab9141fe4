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

#include "wpfx/dsl/check.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace wpfx::dsl {

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += '\n';
    out += to_string(d.pos) + ": " + d.message;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Types with unification variables.

struct TNode;
using T = std::shared_ptr<TNode>;

struct TNode {
  enum class K { Var, Unit, Bool, Int, Str, Tag, Maybe, Either, Seq, Record };
  K k = K::Var;
  int id = 0;
  T link;  // bound variable
  std::vector<T> args;
  std::vector<std::string> fields;
};

T find(T t) {
  while (t->k == TNode::K::Var && t->link) t = t->link;
  return t;
}

T mk(TNode::K k, std::vector<T> args = {}, std::vector<std::string> fields = {}) {
  auto t = std::make_shared<TNode>();
  t->k = k;
  t->args = std::move(args);
  t->fields = std::move(fields);
  return t;
}

std::string show(const T& t0) {
  T t = find(t0);
  using K = TNode::K;
  switch (t->k) {
    case K::Var: return "?" + std::to_string(t->id);
    case K::Unit: return "Unit";
    case K::Bool: return "Bool";
    case K::Int: return "Int";
    case K::Str: return "Str";
    case K::Tag: return "Tag";
    case K::Maybe: return "(Maybe " + show(t->args[0]) + ")";
    case K::Seq: return "(Seq " + show(t->args[0]) + ")";
    case K::Either: return "(Either " + show(t->args[0]) + " " + show(t->args[1]) + ")";
    case K::Record: {
      std::string s = "(Record";
      for (std::size_t i = 0; i < t->fields.size(); ++i) {
        s += " (" + t->fields[i] + " " + show(t->args[i]) + ")";
      }
      return s + ")";
    }
  }
  return "?";
}

struct Failure {
  Pos pos;
  std::string message;
};

[[noreturn]] void fail(Pos pos, std::string message) { throw Failure{pos, std::move(message)}; }

bool occurs(const T& var, const T& t0) {
  T t = find(t0);
  if (t == var) return true;
  return std::any_of(t->args.begin(), t->args.end(), [&](const T& a) { return occurs(var, a); });
}

void unify(const T& expected0, const T& actual0, Pos pos, const std::string& what) {
  T a = find(expected0);
  T b = find(actual0);
  if (a == b) return;
  using K = TNode::K;
  auto mismatch = [&] {
    fail(pos, what + ": expected " + show(expected0) + ", got " + show(actual0));
  };
  if (a->k == K::Var || b->k == K::Var) {
    T var = a->k == K::Var ? a : b;
    T other = a->k == K::Var ? b : a;
    if (occurs(var, other)) mismatch();
    var->link = other;
    return;
  }
  if (a->k != b->k) mismatch();
  if (a->k == K::Record) {
    auto fa = a->fields, fb = b->fields;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) mismatch();
    for (std::size_t i = 0; i < a->fields.size(); ++i) {
      auto j = std::find(b->fields.begin(), b->fields.end(), a->fields[i]) - b->fields.begin();
      unify(a->args[i], b->args[j], pos, what + " (field " + a->fields[i] + ")");
    }
    // Share one representative so every value of this shape is built with the
    // same field order.
    b->k = K::Var;
    b->link = a;
    b->args.clear();
    b->fields.clear();
    return;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i) unify(a->args[i], b->args[i], pos, what);
}

Shape to_shape(const T& t0) {
  T t = find(t0);
  Shape s;
  using K = TNode::K;
  switch (t->k) {
    case K::Var: s.kind = Shape::Kind::Named; s.name = "?" + std::to_string(t->id); break;
    case K::Unit: s.kind = Shape::Kind::Unit; break;
    case K::Bool: s.kind = Shape::Kind::Bool; break;
    case K::Int: s.kind = Shape::Kind::Int; break;
    case K::Str: s.kind = Shape::Kind::Str; break;
    case K::Tag: s.kind = Shape::Kind::Tag; break;
    case K::Maybe: s.kind = Shape::Kind::Maybe; break;
    case K::Seq: s.kind = Shape::Kind::Seq; break;
    case K::Either: s.kind = Shape::Kind::Either; break;
    case K::Record: s.kind = Shape::Kind::Record; s.fields = t->fields; break;
  }
  for (const auto& a : t->args) s.args.push_back(to_shape(a));
  return s;
}

// ---------------------------------------------------------------------------

using Scope = std::map<std::string, T>;

class Checker {
 public:
  explicit Checker(const ProgramFile& pf) : pf_(pf) {}

  CheckedFile run() {
    CheckedFile out;
    out.kind = pf_.kind;
    guarded([&] { declared_shapes(out); });
    if (!diags_.empty()) throw CheckError(diags_);

    std::vector<std::string> order;
    guarded([&] { order = definition_order(); });
    for (const auto& name : order) {
      const Decl* d = pf_.find(Decl::Kind::Define, name);
      guarded([&] {
        Scope scope;
        for (const auto& p : d->params) scope[p.name] = shape_type(p.shape);
        def_result_[name] = prog(d->body, scope);
      });
    }
    const Decl* entry = pf_.find(Decl::Kind::Entry);
    if (!entry) {
      diags_.push_back({{1, 1}, "program has no (entry ...) declaration"});
    } else {
      guarded([&] { unify(result_, prog(entry->body, {}), entry->pos, "entry result"); });
    }
    for (const Decl* p : pf_.all(Decl::Kind::Post)) {
      guarded([&] {
        Scope scope;
        if (pf_.kind == EffectKind::Either) {
          scope["result"] = mk(TNode::K::Either, {error_, result_});
        } else {
          scope["result"] = result_;
          scope["post-state"] = state_;
          scope["outputs"] = mk(TNode::K::Seq, {output_});
        }
        unify(mk(TNode::K::Bool), expr(p->body, scope), p->pos,
              "postcondition " + p->name + " must be a Bool over result, post-state and outputs");
      });
    }
    for (const auto& [t, pos, op] : ordered_) {
      guarded([&, &t = t, &pos = pos, &op = op] { require_ordered(t, pos, op); });
    }
    if (!diags_.empty()) {
      std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.pos.line, a.pos.column) < std::tie(b.pos.line, b.pos.column);
      });
      throw CheckError(diags_);
    }
    for (const auto& [node, t] : records_) out.record_order[node] = find(t)->fields;
    out.inferred_state = to_shape(state_);
    out.inferred_output = to_shape(output_);
    out.inferred_error = to_shape(error_);
    out.inferred_result = to_shape(result_);
    return out;
  }

 private:
  template <class F>
  void guarded(F&& f) {
    try {
      f();
    } catch (const Failure& e) {
      diags_.push_back({e.pos, e.message});
    }
  }

  T fresh() {
    auto t = mk(TNode::K::Var);
    t->id = ++next_var_;
    return t;
  }

  // --- declarations --------------------------------------------------------

  Shape expand(const Shape& s, std::set<std::string>& visiting) {
    if (s.kind == Shape::Kind::Named) {
      const Decl* d = pf_.find(Decl::Kind::Type, s.name);
      if (!d) fail(s.pos, "unknown type " + s.name);
      if (visiting.count(s.name)) fail(s.pos, "recursive type " + s.name);
      visiting.insert(s.name);
      Shape r = expand(d->shape, visiting);
      visiting.erase(s.name);
      return r;
    }
    Shape r = s;
    for (auto& a : r.args) a = expand(a, visiting);
    return r;
  }

  Shape expand(const Shape& s) {
    std::set<std::string> visiting;
    return expand(s, visiting);
  }

  T shape_type(const Shape& s0) {
    Shape s = expand(s0);
    using K = TNode::K;
    std::vector<T> args;
    for (const auto& a : s.args) args.push_back(shape_type(a));
    switch (s.kind) {
      case Shape::Kind::Unit: return mk(K::Unit);
      case Shape::Kind::Bool: return mk(K::Bool);
      case Shape::Kind::Int: return mk(K::Int);
      case Shape::Kind::Str: return mk(K::Str);
      case Shape::Kind::Tag: return mk(K::Tag);
      case Shape::Kind::Maybe: return mk(K::Maybe, args);
      case Shape::Kind::Seq: return mk(K::Seq, args);
      case Shape::Kind::Either: return mk(K::Either, args);
      case Shape::Kind::Record: return mk(K::Record, args, s.fields);
      case Shape::Kind::Named: break;
    }
    fail(s.pos, "unresolved shape");
  }

  void declared_shapes(CheckedFile& out) {
    for (const Decl* t : pf_.all(Decl::Kind::Type)) expand(t->shape);
    auto role = [&](Decl::Kind k, std::optional<Shape>& slot, T& type, const char* name,
                    bool allowed) {
      const Decl* d = pf_.find(k);
      if (d && !allowed) {
        fail(d->pos, std::string(name) + " declarations are only allowed in " +
                         (pf_.kind == EffectKind::Either ? "rws" : "either") + " programs");
      }
      if (d) {
        slot = expand(d->shape);
        type = shape_type(*slot);
      } else {
        type = fresh();
      }
    };
    bool rws = pf_.kind == EffectKind::Rws;
    role(Decl::Kind::State, out.state, state_, "state", rws);
    role(Decl::Kind::Env, out.env, env_, "env", rws);
    role(Decl::Kind::Output, out.output, output_, "output", rws);
    role(Decl::Kind::Error, out.error, error_, "error", !rws);
    role(Decl::Kind::Result, out.result, result_, "result", true);
    if (rws) {
      // Undeclared state and environment default to Unit.
      if (!out.state) unify(state_, mk(TNode::K::Unit), {1, 1}, "state");
      if (!out.env) unify(env_, mk(TNode::K::Unit), {1, 1}, "env");
    }
  }

  std::vector<std::string> definition_order() {
    std::map<std::string, std::vector<std::pair<std::string, Pos>>> calls;
    for (const Decl* d : pf_.all(Decl::Kind::Define)) collect_calls(d->body, calls[d->name]);
    std::vector<std::string> order;
    std::map<std::string, int> state;  // 1 visiting, 2 done
    std::vector<std::string> stack;
    std::function<void(const std::string&)> visit = [&](const std::string& n) {
      if (state[n] == 2) return;
      if (state[n] == 1) {
        auto it = std::find(stack.begin(), stack.end(), n);
        std::string cycle;
        for (; it != stack.end(); ++it) cycle += *it + " -> ";
        fail(pf_.find(Decl::Kind::Define, n)->pos,
             "recursive definition " + n + ": " + cycle + n + " (definitions must not call themselves)");
      }
      state[n] = 1;
      stack.push_back(n);
      for (const auto& [callee, pos] : calls[n]) {
        if (!pf_.find(Decl::Kind::Define, callee)) fail(pos, "unknown definition " + callee);
        visit(callee);
      }
      stack.pop_back();
      state[n] = 2;
      order.push_back(n);
    };
    for (const Decl* d : pf_.all(Decl::Kind::Define)) visit(d->name);
    return order;
  }

  static void collect_calls(const Syntax& s, std::vector<std::pair<std::string, Pos>>& out) {
    if (s.op == Syntax::Op::Call) out.emplace_back(s.text, s.pos);
    for (const auto& k : s.kids) collect_calls(k, out);
  }

  // --- programs ------------------------------------------------------------

  void require_effect(const Syntax& s, EffectKind k, const char* name) {
    if (pf_.kind != k) {
      fail(s.pos, std::string(name) + " is only available in " + std::string(effect_name(k)) +
                      " programs");
    }
  }

  T lens_path(const std::string& path, Pos pos) {
    std::vector<std::string> parts;
    std::stringstream ss(path);
    for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);
    if (parts.front() != "state") fail(pos, "lens path must start at state, got " + path);
    T t = state_;
    for (std::size_t i = 1; i < parts.size(); ++i) t = field_of(t, parts[i], pos);
    return t;
  }

  T field_of(const T& t0, const std::string& field, Pos pos) {
    T t = find(t0);
    if (t->k != TNode::K::Record) {
      fail(pos, "unknown field " + field + ": value of shape " + show(t) + " is not a record");
    }
    auto it = std::find(t->fields.begin(), t->fields.end(), field);
    if (it == t->fields.end()) fail(pos, "unknown field " + field + " in " + show(t));
    return t->args[it - t->fields.begin()];
  }

  T guards(const Syntax& s, const Scope& scope, bool program) {
    T out = fresh();
    bool has_otherwise = false;
    for (const auto& b : s.kids) {
      if (b.op == Syntax::Op::Otherwise) {
        has_otherwise = true;
        T body = program ? prog(b.kids[0], scope) : expr(b.kids[0], scope);
        unify(out, body, b.pos, "guard branch result");
      } else {
        unify(mk(TNode::K::Bool), expr(b.kids[0], scope), b.kids[0].pos, "guard condition");
        T body = program ? prog(b.kids[1], scope) : expr(b.kids[1], scope);
        unify(out, body, b.pos, "guard branch result");
      }
    }
    if (!has_otherwise) {
      fail(s.pos, "guard chain has no otherwise branch; every guard chain must end in "
                  "(otherwise ...) so that exactly one branch is always selected");
    }
    return out;
  }

  T prog(const Syntax& s, const Scope& scope) {
    using Op = Syntax::Op;
    using K = TNode::K;
    switch (s.op) {
      case Op::Return: return expr(s.kids[0], scope);
      case Op::Bail:
        require_effect(s, EffectKind::Either, "bail");
        unify(error_, expr(s.kids[0], scope), s.kids[0].pos, "bail payload");
        return fresh();
      case Op::Bind: {
        Scope inner = scope;
        inner[s.binders[0]] = prog(s.kids[0], scope);
        return prog(s.kids[1], inner);
      }
      case Op::Do: {
        Scope inner = scope;
        T last;
        for (const auto& step : s.kids) {
          if (step.op == Op::DoBind) {
            inner[step.text] = prog(step.kids[0], inner);
          } else {
            last = prog(step, inner);
          }
        }
        return last;
      }
      case Op::IfGuards: return guards(s, scope, true);
      case Op::CaseEither: {
        T l = fresh(), r = fresh();
        unify(mk(K::Either, {l, r}), expr(s.kids[0], scope), s.kids[0].pos, "case-either scrutinee");
        Scope ls = scope, rs = scope;
        ls[s.binders[0]] = l;
        rs[s.binders[1]] = r;
        T out = prog(s.kids[1], ls);
        unify(out, prog(s.kids[2], rs), s.kids[2].pos, "case-either branches");
        return out;
      }
      case Op::CaseMaybe: {
        T j = fresh();
        unify(mk(K::Maybe, {j}), expr(s.kids[0], scope), s.kids[0].pos, "case-maybe scrutinee");
        Scope js = scope;
        js[s.binders[0]] = j;
        T out = prog(s.kids[1], scope);
        unify(out, prog(s.kids[2], js), s.kids[2].pos, "case-maybe branches");
        return out;
      }
      case Op::Gets: {
        require_effect(s, EffectKind::Rws, "gets");
        Scope inner = scope;
        inner[s.binders[0]] = state_;
        return expr(s.kids[0], inner);
      }
      case Op::Get: require_effect(s, EffectKind::Rws, "get"); return state_;
      case Op::Put:
        require_effect(s, EffectKind::Rws, "put");
        unify(state_, expr(s.kids[0], scope), s.kids[0].pos, "put payload");
        return mk(K::Unit);
      case Op::Ask: require_effect(s, EffectKind::Rws, "ask"); return env_;
      case Op::Tell:
        require_effect(s, EffectKind::Rws, "tell");
        unify(mk(K::Seq, {output_}), expr(s.kids[0], scope), s.kids[0].pos,
              "tell payload must be a sequence of outputs");
        return mk(K::Unit);
      case Op::Modify: {
        require_effect(s, EffectKind::Rws, "modify");
        Scope inner = scope;
        inner[s.binders[0]] = state_;
        unify(state_, expr(s.kids[0], inner), s.kids[0].pos, "modify result");
        return mk(K::Unit);
      }
      case Op::Use: require_effect(s, EffectKind::Rws, "use"); return lens_path(s.text, s.pos);
      case Op::Assign: {
        require_effect(s, EffectKind::Rws, "assign");
        T focus = lens_path(s.text, s.pos);
        unify(focus, expr(s.kids[0], scope), s.kids[0].pos, "assigned value for " + s.text);
        return mk(K::Unit);
      }
      case Op::Modifying: {
        require_effect(s, EffectKind::Rws, "modifying");
        T focus = lens_path(s.text, s.pos);
        Scope inner = scope;
        inner[s.binders[0]] = focus;
        unify(focus, expr(s.kids[0], inner), s.kids[0].pos, "updated value for " + s.text);
        return mk(K::Unit);
      }
      case Op::Fmap: {
        Scope inner = scope;
        inner[s.binders[0]] = prog(s.kids[1], scope);
        return expr(s.kids[0], inner);
      }
      case Op::Ap: {
        Scope inner = scope;
        inner[s.binders[0]] = prog(s.kids[1], scope);
        inner[s.binders[1]] = prog(s.kids[2], scope);
        return expr(s.kids[0], inner);
      }
      case Op::Call: {
        const Decl* d = pf_.find(Decl::Kind::Define, s.text);
        if (!d) fail(s.pos, "unknown definition " + s.text);
        if (d->params.size() != s.kids.size()) {
          fail(s.pos, s.text + " takes " + std::to_string(d->params.size()) + " argument(s), got " +
                          std::to_string(s.kids.size()));
        }
        for (std::size_t i = 0; i < s.kids.size(); ++i) {
          unify(shape_type(d->params[i].shape), expr(s.kids[i], scope), s.kids[i].pos,
                "argument " + d->params[i].name + " of " + s.text);
        }
        auto it = def_result_.find(s.text);
        // A callee that failed has already been reported; stay quiet here.
        if (it == def_result_.end()) return fresh();
        std::map<TNode*, T> copies;
        return instantiate(it->second, copies);
      }
      default: break;
    }
    fail(s.pos, "expected a program, found an expression form");
  }

  T instantiate(const T& t0, std::map<TNode*, T>& copies) {
    T t = find(t0);
    if (t->k == TNode::K::Var) {
      auto& c = copies[t.get()];
      if (!c) c = fresh();
      return c;
    }
    if (t->args.empty()) return t;
    std::vector<T> args;
    for (const auto& a : t->args) args.push_back(instantiate(a, copies));
    return mk(t->k, std::move(args), t->fields);
  }

  // --- expressions ---------------------------------------------------------

  T literal_type(const Value& v) {
    using K = TNode::K;
    switch (v.kind()) {
      case Kind::Unit: return mk(K::Unit);
      case Kind::Bool: return mk(K::Bool);
      case Kind::Int: return mk(K::Int);
      case Kind::Str: return mk(K::Str);
      case Kind::Tag: return mk(K::Tag);
      case Kind::Maybe: return mk(K::Maybe, {fresh()});
      default: break;
    }
    return fresh();
  }

  T var_path(const std::string& path, const Scope& scope, Pos pos) {
    std::vector<std::string> parts;
    std::stringstream ss(path);
    for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);
    auto it = scope.find(parts.front());
    if (it == scope.end()) fail(pos, "unknown variable " + parts.front());
    T t = it->second;
    for (std::size_t i = 1; i < parts.size(); ++i) t = field_of(t, parts[i], pos);
    return t;
  }

  T expr(const Syntax& s, const Scope& scope) {
    using Op = Syntax::Op;
    using K = TNode::K;
    switch (s.op) {
      case Op::Lit: return literal_type(s.literal);
      case Op::Var: return var_path(s.text, scope, s.pos);
      case Op::Record: {
        std::vector<T> args;
        for (const auto& k : s.kids) args.push_back(expr(k, scope));
        T t = mk(K::Record, args, s.binders);
        records_.emplace_back(&s, t);
        return t;
      }
      case Op::Guard: return guards(s, scope, false);
      case Op::Set: {
        auto dot = s.text.find('.');
        T root = var_path(s.text.substr(0, dot), scope, s.pos);
        T t = root;
        std::stringstream ss(s.text.substr(dot + 1));
        for (std::string part; std::getline(ss, part, '.');) t = field_of(t, part, s.pos);
        unify(t, expr(s.kids[0], scope), s.kids[0].pos, "value for " + s.text);
        return root;
      }
      case Op::Quant: {
        T elem = fresh();
        unify(mk(K::Seq, {elem}), expr(s.kids[1], scope), s.kids[1].pos, s.text + " range");
        Scope inner = scope;
        inner[s.binders[0]] = elem;
        unify(mk(K::Bool), expr(s.kids[0], inner), s.kids[0].pos, s.text + " body");
        return mk(K::Bool);
      }
      case Op::Prim: return prim(s, scope);
      default: break;
    }
    fail(s.pos, "expected an expression, found a program form");
  }

  T prim(const Syntax& s, const Scope& scope) {
    using K = TNode::K;
    const std::string& op = s.text;
    std::vector<T> a;
    for (const auto& k : s.kids) a.push_back(expr(k, scope));
    auto arg = [&](std::size_t i, const T& want) {
      unify(want, a[i], s.kids[i].pos, "argument " + std::to_string(i + 1) + " of " + op);
    };
    if (op == "+" || op == "-") {
      arg(0, mk(K::Int));
      arg(1, mk(K::Int));
      return mk(K::Int);
    }
    if (op == "==" || op == "/=") {
      arg(1, a[0]);
      return mk(K::Bool);
    }
    if (op == "<" || op == "<=" || op == ">" || op == ">=" || op == "compare") {
      arg(1, a[0]);
      ordered_.emplace_back(a[0], s.pos, op);
      return op == "compare" ? mk(K::Tag) : mk(K::Bool);
    }
    if (op == "and" || op == "or" || op == "not") {
      for (std::size_t i = 0; i < a.size(); ++i) arg(i, mk(K::Bool));
      return mk(K::Bool);
    }
    if (op == "is-nothing" || op == "is-just") {
      arg(0, mk(K::Maybe, {fresh()}));
      return mk(K::Bool);
    }
    if (op == "is-left" || op == "is-right") {
      arg(0, mk(K::Either, {fresh(), fresh()}));
      return mk(K::Bool);
    }
    if (op == "length") {
      arg(0, mk(K::Seq, {fresh()}));
      return mk(K::Int);
    }
    if (op == "index") {
      T e = fresh();
      arg(0, mk(K::Seq, {e}));
      arg(1, mk(K::Int));
      return mk(K::Maybe, {e});
    }
    if (op == "append") {
      T e = fresh();
      arg(0, mk(K::Seq, {e}));
      arg(1, e);
      return mk(K::Seq, {e});
    }
    if (op == "concat") {
      T e = fresh();
      arg(0, mk(K::Seq, {e}));
      arg(1, mk(K::Seq, {e}));
      return mk(K::Seq, {e});
    }
    if (op == "from-maybe") {
      arg(1, mk(K::Maybe, {a[0]}));
      return a[0];
    }
    if (op == "show") return mk(K::Str);
    if (op == "just") return mk(K::Maybe, {a[0]});
    if (op == "left") return mk(K::Either, {a[0], fresh()});
    if (op == "right") return mk(K::Either, {fresh(), a[0]});
    if (op == "seq") {
      T e = fresh();
      for (std::size_t i = 0; i < a.size(); ++i) arg(i, e);
      return mk(K::Seq, {e});
    }
    if (op == "if") {
      arg(0, mk(K::Bool));
      arg(2, a[1]);
      return a[1];
    }
    fail(s.pos, "unknown primitive " + op);
  }

  void require_ordered(const T& t0, Pos pos, const std::string& op) {
    T t = find(t0);
    using K = TNode::K;
    switch (t->k) {
      case K::Int:
      case K::Str: return;
      case K::Seq: require_ordered(t->args[0], pos, op); return;
      case K::Record:
        for (const auto& a : t->args) require_ordered(a, pos, op);
        return;
      case K::Var: fail(pos, op + " needs operands of a known ordered shape (Int, Str, Seq, Record)");
      default:
        fail(pos, op + " is only defined on ordered shapes (Int, Str, Seq, Record), got " + show(t));
    }
  }

  const ProgramFile& pf_;
  std::vector<Diagnostic> diags_;
  int next_var_ = 0;
  T state_, env_, output_, error_, result_;
  std::map<std::string, T> def_result_;
  std::vector<std::tuple<T, Pos, std::string>> ordered_;
  std::vector<std::pair<const Syntax*, T>> records_;
};

}  // namespace

CheckError::CheckError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

const Decl& CheckedFile::entry() const { return *file->find(Decl::Kind::Entry); }

const Decl* CheckedFile::post(std::string_view name) const {
  return file->find(Decl::Kind::Post, name);
}

std::vector<std::string> CheckedFile::post_names() const {
  std::vector<std::string> out;
  for (const Decl* d : file->all(Decl::Kind::Post)) out.push_back(d->name);
  return out;
}

CheckedFile check(const ProgramFile& file) {
  auto owned = std::make_shared<const ProgramFile>(file);
  CheckedFile out = Checker(*owned).run();
  out.file = std::move(owned);
  return out;
}

CheckedFile load(std::string_view text) { return check(parse(text)); }

bool mentions(const Syntax& s, std::string_view var) {
  if (s.op == Syntax::Op::Var) {
    std::string_view root = std::string_view(s.text).substr(0, s.text.find('.'));
    return root == var;
  }
  if (s.op == Syntax::Op::Set) {
    std::string_view root = std::string_view(s.text).substr(0, s.text.find('.'));
    if (root == var) return true;
  }
  if (s.op == Syntax::Op::Quant && !s.binders.empty() && s.binders[0] == var) {
    return mentions(s.kids[1], var);
  }
  return std::any_of(s.kids.begin(), s.kids.end(), [&](const Syntax& k) { return mentions(k, var); });
}

}  // namespace wpfx::dsl
