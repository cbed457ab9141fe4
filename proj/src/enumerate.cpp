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

#include "wpfx/enumerate.hpp"

#include <functional>
#include <utility>

namespace wpfx {

namespace {

template <class P>
struct Kont {
  std::function<P(const Value&)> fn;
  std::string text;
};

// Accumulates terms up to the cap.
template <class P>
class Sink {
 public:
  explicit Sink(std::size_t cap) : cap_(cap) {}

  bool full() const { return count_ >= cap_; }

  bool add(std::vector<Generated<P>>& out, P p, std::string text) {
    if (full()) {
      truncated_ = true;
      return false;
    }
    out.push_back({std::move(p), std::move(text)});
    ++count_;
    return true;
  }

  void reserve_existing(std::size_t n) { count_ += n; }
  bool truncated() const { return truncated_; }

 private:
  std::size_t cap_;
  std::size_t count_ = 0;
  bool truncated_ = false;
};

bool is_int_eq(const Value& x, Value::Int k) { return x.is_int() && x.as_int() == k; }

// Builds the layered term space shared by both effects. `atoms` are the
// height 1 terms, `pool` the fixed continuations, `scrutinees` the concrete
// Either values for case-either, `fail` the program run on the Left arm.
template <class E>
Generation<Prog<E>> layered(const std::vector<Generated<Prog<E>>>& atoms,
                            const std::vector<Kont<Prog<E>>>& pool,
                            const std::vector<Value>& either_scrutinees,
                            const std::vector<Value>& maybe_scrutinees,
                            const std::function<Prog<E>(const Value&)>& on_left,
                            const std::string& on_left_text, int depth, std::size_t cap) {
  using P = Prog<E>;
  Sink<P> sink(cap);
  Generation<P> gen;
  std::vector<Generated<P>> all;  // height <= d-1
  for (const auto& a : atoms) {
    if (!sink.add(all, a.program, a.text)) break;
  }
  std::size_t prev_begin = 0;  // start of terms with height exactly d-1
  for (int d = 2; d <= depth && !sink.full(); ++d) {
    std::vector<Generated<P>> layer;
    std::size_t below = all.size();
    auto emit = [&](P p, std::string text) { return sink.add(layer, std::move(p), std::move(text)); };

    // Terms of height exactly d need at least one child of height d-1.
    for (std::size_t i = prev_begin; i < below && !sink.full(); ++i) {
      const auto& m = all[i];
      for (const auto& k : pool) {
        if (!emit(bind<E>(m.program, k.fn), "(bind " + m.text + " " + k.text + ")")) break;
      }
    }
    for (const auto& a : atoms) {
      for (std::size_t i = std::max<std::size_t>(prev_begin, atoms.size()); i < below; ++i) {
        const auto& p = all[i];
        if (!emit(then<E>(a.program, p.program), "(bind " + a.text + " (_ " + p.text + "))")) break;
      }
    }
    for (bool b : {true, false}) {
      for (std::size_t i = prev_begin; i < below; ++i) {
        const auto& p = all[i];
        for (const auto& a : atoms) {
          P prog = if_guards<E>({when<E>(Condition(b), p.program)}, a.program);
          if (!emit(prog, std::string("(if-guards (") + (b ? "true " : "false ") + p.text +
                              ") (otherwise " + a.text + "))")) {
            break;
          }
        }
      }
    }
    for (const auto& s : either_scrutinees) {
      for (std::size_t i = prev_begin; i < below; ++i) {
        const auto& p = all[i];
        P prog = case_either<E>(s, on_left, [q = p.program](const Value&) { return q; });
        if (!emit(prog, "(case-either " + to_sexpr(s) + " (left l " + on_left_text +
                            ") (right _ " + p.text + "))")) {
          break;
        }
      }
    }
    if (d == 2) {
      for (const auto& s : maybe_scrutinees) {
        for (const auto& a : atoms) {
          P prog = case_maybe<E>(s, a.program, [](const Value& y) { return pure<E>(y); });
          if (!emit(prog, "(case-maybe " + to_sexpr(s) + " (nothing " + a.text +
                              ") (just y (return y)))")) {
            break;
          }
        }
      }
    }
    prev_begin = all.size();
    for (auto& g : layer) all.push_back(std::move(g));
  }
  gen.programs = std::move(all);
  gen.truncated = sink.truncated();
  return gen;
}

}  // namespace

std::vector<Value> RwsSpace::states() const {
  std::vector<Value> out;
  for (auto k : field_values) out.push_back(Value::record({{"k", Value::integer(k)}}));
  return out;
}

Generation<EitherProg> generate_either(const EitherSpace& space, std::size_t cap) {
  using E = EitherEffect;
  if (space.errors.empty() || space.values.empty()) throw Error("empty generator domain");
  std::vector<Generated<EitherProg>> atoms;
  for (auto v : space.values) {
    atoms.push_back({pure<E>(Value::integer(v)), "(return " + std::to_string(v) + ")"});
  }
  for (const auto& e : space.errors) {
    atoms.push_back({bail(Value::str(e)), "(bail " + to_sexpr(Value::str(e)) + ")"});
  }
  const Value e0 = Value::str(space.errors.front());
  const std::string e0_text = to_sexpr(e0);

  std::vector<Kont<EitherProg>> pool;
  pool.push_back({[](const Value& x) { return pure<E>(x); }, "(x (return x))"});
  pool.push_back({[](const Value& x) {
                    return pure<E>(x.is_int() ? Value::integer(-static_cast<std::int64_t>(x.as_int())) : x);
                  },
                  "(x (return (- 0 x)))"});
  pool.push_back({[e0](const Value& x) {
                    return if_guards<E>(
                        {when<E>(Condition([x] { return x.is_int() && x.as_int() > 0; }, "(> x 0)"),
                                 pure<E>(x))},
                        bail(e0));
                  },
                  "(x (if-guards ((> x 0) (return x)) (otherwise (bail " + e0_text + "))))"});
  pool.push_back({[e0](const Value& x) {
                    Value s = is_int_eq(x, 0) ? Value::nothing() : Value::just(x);
                    return case_maybe<E>(s, bail(e0), [](const Value& y) { return pure<E>(y); });
                  },
                  "(x (case-maybe (if (== x 0) nothing (just x)) (nothing (bail " + e0_text +
                      ")) (just y (return y))))"});
  pool.push_back({[e0](const Value& x) {
                    Value s = x.is_int() && x.as_int() < 0 ? Value::left(e0) : Value::right(x);
                    return case_either<E>(s, [](const Value& l) { return bail(l); },
                                          [](const Value& y) { return pure<E>(y); });
                  },
                  "(x (case-either (if (< x 0) (left " + e0_text +
                      ") (right x)) (left l (bail l)) (right y (return y))))"});
  for (const auto& a : atoms) {
    pool.push_back({[p = a.program](const Value&) { return p; }, "(_ " + a.text + ")"});
  }

  std::vector<Value> either_scrutinees{Value::left(e0)};
  for (auto v : space.values) either_scrutinees.push_back(Value::right(Value::integer(v)));
  std::vector<Value> maybe_scrutinees{Value::nothing()};
  for (auto v : space.values) maybe_scrutinees.push_back(Value::just(Value::integer(v)));

  return layered<E>(atoms, pool, either_scrutinees, maybe_scrutinees,
                    [](const Value& l) { return bail(l); }, "(bail l)", space.depth, cap);
}

Generation<RwsProg> generate_rws(const RwsSpace& space, std::size_t cap) {
  using E = RwsEffect;
  if (space.values.empty() || space.field_values.empty() || space.alphabet.empty()) {
    throw Error("empty generator domain");
  }
  std::vector<Generated<RwsProg>> atoms;
  for (auto v : space.values) {
    atoms.push_back({pure<E>(Value::integer(v)), "(return " + std::to_string(v) + ")"});
  }
  atoms.push_back({get(), "(get)"});
  atoms.push_back({gets([](const Value& s) { return s.field("k"); }, "gets k"), "(gets (s s.k))"});
  for (const auto& st : space.states()) {
    atoms.push_back({put(st), "(put " + to_sexpr(st) + ")"});
  }
  atoms.push_back({ask(), "(ask)"});
  atoms.push_back({tell(std::vector<Value>{}), "(tell (seq))"});
  std::vector<Value> all_tags;
  std::string all_text = "(tell (seq";
  for (const auto& t : space.alphabet) {
    atoms.push_back({tell(std::vector<Value>{Value::tag(t)}), "(tell (seq '" + t + "))"});
    all_tags.push_back(Value::tag(t));
    all_text += " '" + t;
  }
  if (all_tags.size() > 1) atoms.push_back({tell(all_tags), all_text + "))"});

  const Value::Int f0 = space.field_values.front();
  const Value::Int f1 = space.field_values.back();
  const Value::Int v_last = space.values.back();
  const Value first_tag = Value::tag(space.alphabet.front());
  const Value last_tag = Value::tag(space.alphabet.back());
  const std::vector<Value::Int> fields = space.field_values;

  std::vector<Kont<RwsProg>> pool;
  pool.push_back({[](const Value& x) { return pure<E>(x); }, "(x (return x))"});
  pool.push_back({[fields, f0](const Value& x) {
                    Value::Int k = f0;
                    for (auto f : fields) {
                      if (is_int_eq(x, f)) k = f;
                    }
                    return put(Value::record({{"k", Value::integer(k)}}));
                  },
                  "(x (put (record (k x))))"});
  pool.push_back({[f0, f1](const Value&) {
                    return modify([f0, f1](const Value& s) {
                      return s.with_field("k", Value::integer(is_int_eq(s.field("k"), f0) ? f1 : f0));
                    });
                  },
                  "(_ (modify (s (set s.k (if (== s.k " + std::to_string(f0) + ") " +
                      std::to_string(f1) + " " + std::to_string(f0) + ")))))"});
  pool.push_back({[v_last, first_tag, last_tag](const Value& x) {
                    return if_guards<E>(
                        {when<E>(Condition([x, v_last] { return is_int_eq(x, v_last); },
                                           "(== x " + std::to_string(v_last) + ")"),
                                 tell(std::vector<Value>{first_tag}))},
                        tell(std::vector<Value>{last_tag}));
                  },
                  "(x (if-guards ((== x " + std::to_string(v_last) + ") (tell (seq " +
                      to_sexpr(first_tag) + "))) (otherwise (tell (seq " + to_sexpr(last_tag) +
                      ")))))"});
  pool.push_back({[](const Value& x) {
                    Value s = x.is_int() && x.as_int() != 0 ? Value::just(x) : Value::nothing();
                    return case_maybe<E>(s, tell(std::vector<Value>{}),
                                         [](const Value& y) { return pure<E>(y); });
                  },
                  "(x (case-maybe (if (/= x 0) (just x) nothing) (nothing (tell (seq))) "
                  "(just y (return y))))"});
  for (const auto& a : atoms) {
    pool.push_back({[p = a.program](const Value&) { return p; }, "(_ " + a.text + ")"});
  }

  std::vector<Value> either_scrutinees{Value::left(Value::unit()),
                                       Value::right(Value::integer(space.values.front()))};
  std::vector<Value> maybe_scrutinees{Value::nothing(),
                                      Value::just(Value::integer(space.values.back()))};
  return layered<E>(atoms, pool, either_scrutinees, maybe_scrutinees,
                    [first_tag](const Value&) { return tell(std::vector<Value>{first_tag}); },
                    "(tell (seq " + to_sexpr(first_tag) + "))", space.depth, cap);
}

std::vector<EitherPost> either_predicate_pool(const std::vector<Value::Int>& values) {
  std::vector<EitherPost> pool;
  pool.push_back({"is-left", [](const EitherOutcome& o) { return o.is_left(); }});
  pool.push_back({"is-right", [](const EitherOutcome& o) { return o.is_right(); }});
  for (auto k : values) {
    Value kv = Value::integer(k);
    pool.push_back({"value-equals-" + std::to_string(k),
                    [kv](const EitherOutcome& o) { return o.is_right() && o.value == kv; }});
  }
  return pool;
}

std::vector<RwsPost> rws_predicate_pool(const std::vector<Value::Int>& values,
                                        const std::vector<Value::Int>& field_values,
                                        const std::string& field, std::size_t max_outputs) {
  std::vector<RwsPost> pool;
  for (auto k : values) {
    Value kv = Value::integer(k);
    pool.push_back({"value-equals-" + std::to_string(k),
                    [kv](const RwsOutcome& o) { return o.value == kv; }});
  }
  for (auto k : field_values) {
    Value kv = Value::integer(k);
    pool.push_back({"state-" + field + "-equals-" + std::to_string(k),
                    [kv, field](const RwsOutcome& o) {
                      return o.state.is_record() && o.state.has_field(field) &&
                             o.state.field(field) == kv;
                    }});
  }
  for (std::size_t n = 0; n <= max_outputs; ++n) {
    pool.push_back({"outputs-length-equals-" + std::to_string(n),
                    [n](const RwsOutcome& o) { return o.outputs.size() == n; }});
  }
  return pool;
}

}  // namespace wpfx
