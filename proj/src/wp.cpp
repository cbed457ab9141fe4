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

#include "wpfx/wp.hpp"

#include <optional>

#include "overloaded.hpp"

namespace wpfx {

using detail::overloaded;

std::string to_string(const Outcome& o) {
  return std::visit([](const auto& x) { return to_string(x); }, o);
}

Obligation::Obligation(const Node& n) : node_(std::make_shared<const Node>(n)) {}

bool Obligation::empty() const { return node_ == nullptr; }

const Obligation::Node& Obligation::node() const {
  if (!node_) throw Error("empty obligation");
  return *node_;
}

bool Obligation::is_atom() const { return std::holds_alternative<ob::Atom>(node()); }
bool Obligation::is_conj() const { return std::holds_alternative<ob::Conj>(node()); }
bool Obligation::is_implies() const { return std::holds_alternative<ob::Implies>(node()); }
bool Obligation::is_forall() const { return std::holds_alternative<ob::ForallAlias>(node()); }
const ob::Atom& Obligation::atom() const { return std::get<ob::Atom>(node()); }
const ob::Conj& Obligation::conj() const { return std::get<ob::Conj>(node()); }
const ob::Implies& Obligation::implies() const { return std::get<ob::Implies>(node()); }
const ob::ForallAlias& Obligation::forall() const { return std::get<ob::ForallAlias>(node()); }

namespace {

// Builds the obligation for one branch. Branches whose hypothesis is false
// may fail to build (their continuation sees values it was never meant to
// see); those become unmaterialized, vacuous branches.
template <class Build>
Obligation build_branch(bool hypothesis, Build&& build) {
  if (hypothesis) return build();
  try {
    return build();
  } catch (const Error&) {
    return Obligation();
  }
}

Obligation implies(bool holds, std::string description, std::string branch, Obligation body) {
  return Obligation(ob::Implies{{holds, std::move(description)}, std::move(branch), std::move(body)});
}

// Conditionals are handled identically for both effects; `sub` computes the
// obligation of a sub-program under the current postcondition and context.
template <class E, class Sub>
Obligation wp_guards(const node::IfGuards<E>& g, const Sub& sub) {
  // Hypotheses are conjunctions evaluated left to right with short circuit:
  // once a condition holds, every later hypothesis is false and later
  // conditions are never evaluated, exactly as in the interpreter.
  std::vector<Obligation> kids;
  std::string earlier_fail;
  bool earlier_true = false;
  for (std::size_t i = 0; i < g.branches.size(); ++i) {
    const auto& label = g.branches[i].condition.label();
    std::string description = earlier_fail.empty() ? label : earlier_fail + " and " + label;
    bool holds = !earlier_true && g.branches[i].condition.holds();
    const auto& body = g.branches[i].body;
    kids.push_back(implies(holds, std::move(description), "guard[" + std::to_string(i) + "]",
                           build_branch(holds, [&] { return sub(body()); })));
    earlier_fail += (earlier_fail.empty() ? "not " : " and not ") + label;
    earlier_true = earlier_true || holds;
  }
  bool holds = !earlier_true;
  kids.push_back(implies(holds, earlier_fail.empty() ? "otherwise" : earlier_fail, "otherwise",
                         build_branch(holds, [&] { return sub(g.otherwise()); })));
  return Obligation(ob::Conj{std::move(kids)});
}

template <class E, class Sub>
Obligation wp_case(const node::CaseEither<E>& c, const Sub& sub) {
  const Value& s = c.scrutinee;
  bool left = s.is_left();
  std::string shown = to_sexpr(s);
  std::vector<Obligation> kids;
  kids.push_back(implies(left, shown + " is left", "left",
                         left ? sub(c.on_left(s.either_payload())) : Obligation()));
  kids.push_back(implies(!left, shown + " is right", "right",
                         !left ? sub(c.on_right(s.either_payload())) : Obligation()));
  return Obligation(ob::Conj{std::move(kids)});
}

template <class E, class Sub>
Obligation wp_case(const node::CaseMaybe<E>& c, const Sub& sub) {
  const Value& s = c.scrutinee;
  bool nothing = s.is_nothing();
  std::string shown = to_sexpr(s);
  std::vector<Obligation> kids;
  kids.push_back(implies(nothing, shown + " is nothing", "nothing",
                         build_branch(nothing, [&] { return sub(c.on_nothing()); })));
  kids.push_back(implies(!nothing, shown + " is just", "just",
                         !nothing ? sub(c.on_just(s.from_just())) : Obligation()));
  return Obligation(ob::Conj{std::move(kids)});
}

// Continuation postconditions: given a leaf outcome and the name of the
// primitive that produced it, yield the obligation owed for it.
using EitherK = std::function<Obligation(const EitherOutcome&, const std::string&)>;
using RwsK = std::function<Obligation(const RwsOutcome&, const std::string&)>;

Obligation wp_either_k(const EitherProg& m, const EitherK& k) {
  using E = EitherEffect;
  auto sub = [&k](const EitherProg& p) { return wp_either_k(p, k); };
  return std::visit(
      overloaded{
          [&](const node::Return<E>& n) { return k(EitherOutcome::right_of(n.value), "return"); },
          [&](const node::Bail& n) { return k(EitherOutcome::left_of(n.error), "bail"); },
          [&](const node::Bind<E>& n) {
            Cont<E> f = n.cont;
            std::string binder = n.binder;
            // bindPost: errors go straight to the outer postcondition; a
            // success value is bound to an alias constrained to equal it.
            EitherK bind_post = [f, binder, k](const EitherOutcome& o, const std::string& label) {
              if (o.is_left()) return k(o, label);
              return Obligation(ob::ForallAlias{
                  binder, o.value, [f, k](const Value& c) { return wp_either_k(f(c), k); }});
            };
            return wp_either_k(n.inner, bind_post);
          },
          [&](const node::IfGuards<E>& n) { return wp_guards(n, sub); },
          [&](const node::CaseEither<E>& n) { return wp_case(n, sub); },
          [&](const node::CaseMaybe<E>& n) { return wp_case(n, sub); },
      },
      m.node());
}

Obligation wp_rws_k(const RwsProg& m, const Value& env, const Value& st, const RwsK& k) {
  using E = RwsEffect;
  auto sub = [&](const RwsProg& p) { return wp_rws_k(p, env, st, k); };
  return std::visit(
      overloaded{
          [&](const node::Return<E>& n) { return k(RwsOutcome{n.value, st, {}}, "return"); },
          [&](const node::Gets& n) { return k(RwsOutcome{n.projection(st), st, {}}, n.label); },
          [&](const node::Put& n) { return k(RwsOutcome{Value::unit(), n.state, {}}, "put"); },
          [&](const node::Ask&) { return k(RwsOutcome{env, st, {}}, "ask"); },
          [&](const node::Tell& n) { return k(RwsOutcome{Value::unit(), st, n.outputs}, "tell"); },
          [&](const node::Bind<E>& n) {
            Cont<E> f = n.cont;
            std::string binder = n.binder;
            RwsK bind_post = [f, binder, k, env](const RwsOutcome& first, const std::string&) {
              return Obligation(ob::ForallAlias{
                  binder, first.value, [f, k, env, first](const Value& c) {
                    // The continuation's postcondition sees the outputs of the
                    // first half prepended to its own.
                    RwsK tail = [k, prefix = first.outputs](const RwsOutcome& second,
                                                            const std::string& label) {
                      RwsOutcome joined{second.value, second.state, prefix};
                      joined.outputs.insert(joined.outputs.end(), second.outputs.begin(),
                                            second.outputs.end());
                      return k(joined, label);
                    };
                    return wp_rws_k(f(c), env, first.state, tail);
                  }});
            };
            return wp_rws_k(n.inner, env, st, bind_post);
          },
          [&](const node::IfGuards<E>& n) { return wp_guards(n, sub); },
          [&](const node::CaseEither<E>& n) { return wp_case(n, sub); },
          [&](const node::CaseMaybe<E>& n) { return wp_case(n, sub); },
      },
      m.node());
}

class Evaluator {
 public:
  Verdict run(const Obligation& root) {
    Verdict v;
    v.holds = walk(root, false);
    v.leaves = std::move(leaves_);
    return v;
  }

 private:
  bool walk(const Obligation& ob, bool vacuous) {
    return std::visit(
        overloaded{
            [&](const ob::Atom& a) {
              LeafReport leaf{path_, hyps_, LeafStatus::Vacuous, a.post_name, a.label,
                              to_string(a.outcome)};
              bool ok = true;
              if (!vacuous) {
                ok = a.post(a.outcome);
                leaf.status = ok ? LeafStatus::Pass : LeafStatus::Fail;
              }
              leaves_.push_back(std::move(leaf));
              return ok;
            },
            [&](const ob::Conj& c) {
              bool ok = true;
              for (const auto& child : c.children) ok = walk(child, vacuous) && ok;
              return ok;
            },
            [&](const ob::Implies& i) {
              path_.push_back(i.branch);
              hyps_.push_back(i.hypothesis.description);
              bool inner_vacuous = vacuous || !i.hypothesis.holds;
              bool ok = true;
              if (i.body.empty()) {
                // Unbuilt branches only arise under a false hypothesis.
                leaves_.push_back(LeafReport{path_, hyps_, LeafStatus::Vacuous, {}, "not taken", {}});
              } else {
                ok = walk(i.body, inner_vacuous);
              }
              hyps_.pop_back();
              path_.pop_back();
              return i.hypothesis.holds ? ok : true;
            },
            [&](const ob::ForallAlias& f) {
              path_.push_back(f.alias + " = " + to_sexpr(f.forced));
              bool ok = true;
              if (vacuous) {
                std::size_t mark = leaves_.size();
                try {
                  walk(f.body(f.forced), true);
                } catch (const Error&) {
                  leaves_.resize(mark);
                  leaves_.push_back(LeafReport{path_, hyps_, LeafStatus::Vacuous, {}, "not taken", {}});
                }
              } else {
                ok = walk(f.body(f.forced), false);
              }
              path_.pop_back();
              return ok;
            },
        },
        ob.node());
  }

  std::vector<std::string> path_;
  std::vector<std::string> hyps_;
  std::vector<LeafReport> leaves_;
};

}  // namespace

Obligation wp_either(const EitherProg& m, const EitherPost& post) {
  EitherK top = [post](const EitherOutcome& o, const std::string& label) {
    auto test = [t = post.test](const Outcome& out) { return t(std::get<EitherOutcome>(out)); };
    return Obligation(ob::Atom{post.name, test, o, label});
  };
  return wp_either_k(m, top);
}

Obligation wp_rws(const RwsProg& m, const Value& env, const Value& state, const RwsPost& post) {
  RwsK top = [post](const RwsOutcome& o, const std::string& label) {
    auto test = [t = post.test](const Outcome& out) { return t(std::get<RwsOutcome>(out)); };
    return Obligation(ob::Atom{post.name, test, o, label});
  };
  return wp_rws_k(m, env, state, top);
}

std::string_view status_name(LeafStatus s) {
  switch (s) {
    case LeafStatus::Pass: return "pass";
    case LeafStatus::Fail: return "fail";
    case LeafStatus::Vacuous: return "vacuous";
  }
  return "?";
}

std::size_t Verdict::count(LeafStatus s) const {
  std::size_t n = 0;
  for (const auto& l : leaves) n += l.status == s ? 1 : 0;
  return n;
}

Verdict eval_obligation(const Obligation& ob) { return Evaluator().run(ob); }

ContractReport check_contract(const EitherProg& m, const EitherPost& post) {
  ContractReport r;
  r.verdict = eval_obligation(wp_either(m, post));
  r.precondition = r.verdict.holds;
  EitherOutcome out = run_either(m);
  r.postcondition = post(out);
  r.outcome = std::move(out);
  return r;
}

ContractReport check_contract(const RwsProg& m, const Value& env, const Value& state,
                              const RwsPost& post) {
  ContractReport r;
  r.verdict = eval_obligation(wp_rws(m, env, state, post));
  r.precondition = r.verdict.holds;
  RwsOutcome out = run_rws(m, env, state);
  r.postcondition = post(out);
  r.outcome = std::move(out);
  return r;
}

}  // namespace wpfx
