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

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "wpfx/enumerate.hpp"
#include "wpfx/program.hpp"
#include "wpfx/semantics.hpp"

using namespace wpfx;

namespace {

Value rec_k(int k) { return Value::record({{"k", Value::integer(k)}}); }
Value str(const char* s) { return Value::str(s); }
std::vector<Value> tags(std::initializer_list<const char*> names) {
  std::vector<Value> out;
  for (const char* n : names) out.push_back(Value::tag(n));
  return out;
}

// Pure continuations used by the law checks. Each inspects its argument so
// that the laws are exercised on more than constant functions.
std::vector<std::function<EitherProg(const Value&)>> either_conts() {
  return {
      [](const Value& v) { return pure<EitherEffect>(v); },
      [](const Value& v) {
        return v.is_int() && v.as_int() > 0 ? pure<EitherEffect>(Value::integer(v.as_int() - 1))
                                            : bail(Value::str("f"));
      },
      [](const Value& v) { return pure<EitherEffect>(Value::just(v)); },
  };
}

std::vector<std::function<RwsProg(const Value&)>> rws_conts() {
  return {
      [](const Value& v) { return pure<RwsEffect>(v); },
      [](const Value& v) { return then<RwsEffect>(tell(std::vector<Value>{Value::tag("f")}), pure<RwsEffect>(v)); },
      [](const Value& v) {
        return wpfx::bind<RwsEffect>(get(), [v](const Value& s) {
          return then<RwsEffect>(put(s.with_field("k", Value::integer(7))), pure<RwsEffect>(Value::just(v)));
        });
      },
  };
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("run equations for the exception effect") {
  CHECK(run_either(pure<EitherEffect>(Value::integer(5))) == EitherOutcome::right_of(Value::integer(5)));
  CHECK(run_either(wpfx::bind<EitherEffect>(bail(str("e")), [](const Value& v) { return pure<EitherEffect>(v); })) ==
        EitherOutcome::left_of(str("e")));
  CHECK(run_either(wpfx::bind<EitherEffect>(pure<EitherEffect>(Value::integer(2)), [](const Value& y) {
          return pure<EitherEffect>(Value::integer(y.as_int() + 1));
        })) == EitherOutcome::right_of(Value::integer(3)));
  CHECK(run_either(if_guards<EitherEffect>({when<EitherEffect>(false, pure<EitherEffect>(Value::integer(1)))},
                                           bail(str("z")))) == EitherOutcome::left_of(str("z")));
}

TEST_CASE("bail also short-circuits when it is the result of a continuation") {
  auto m = wpfx::bind<EitherEffect>(pure<EitherEffect>(Value::integer(1)), [](const Value&) { return bail(str("mid")); });
  auto outer = wpfx::bind<EitherEffect>(m, [](const Value&) { return pure<EitherEffect>(Value::integer(9)); });
  CHECK(run_either(outer) == EitherOutcome::left_of(str("mid")));
}

TEST_CASE("constructor rules for reader-writer-state") {
  Value env = Value::record({{"id", Value::integer(11)}});
  Value s = rec_k(2);
  CHECK(run_rws(pure<RwsEffect>(Value::integer(4)), env, s) == RwsOutcome{Value::integer(4), s, {}});
  CHECK(run_rws(gets([](const Value& st) { return st.field("k"); }), env, s) ==
        RwsOutcome{Value::integer(2), s, {}});
  CHECK(run_rws(put(rec_k(9)), env, s) == RwsOutcome{Value::unit(), rec_k(9), {}});
  CHECK(run_rws(ask(), env, s) == RwsOutcome{env, s, {}});
  CHECK(run_rws(tell(tags({"w"})), env, s) == RwsOutcome{Value::unit(), s, tags({"w"})});
}

TEST_CASE("bind threads state and concatenates outputs") {
  Value s0 = rec_k(0), s1 = rec_k(1);
  auto ab = wpfx::bind<RwsEffect>(tell(tags({"a"})), [](const Value&) { return tell(tags({"b"})); });
  CHECK(run_rws(ab, Value::unit(), s0) == RwsOutcome{Value::unit(), s0, tags({"a", "b"})});

  auto put_get = wpfx::bind<RwsEffect>(put(s1), [](const Value&) { return get(); });
  CHECK(run_rws(put_get, Value::unit(), s0) == RwsOutcome{s1, s1, {}});
}

TEST_CASE("conditionals dispatch on their scrutinee") {
  auto k = [](const Value& v) { return pure<EitherEffect>(v); };
  auto b = [](const Value& v) { return bail(v); };
  CHECK(run_either(case_either<EitherEffect>(Value::left(str("l")), b, k)) == EitherOutcome::left_of(str("l")));
  CHECK(run_either(case_either<EitherEffect>(Value::right(Value::integer(3)), b, k)) ==
        EitherOutcome::right_of(Value::integer(3)));
  CHECK(run_either(case_maybe<EitherEffect>(Value::nothing(), bail(str("none")), k)) ==
        EitherOutcome::left_of(str("none")));
  CHECK(run_either(case_maybe<EitherEffect>(Value::just(Value::integer(8)), bail(str("none")), k)) ==
        EitherOutcome::right_of(Value::integer(8)));
  auto first_true = if_guards<EitherEffect>({when<EitherEffect>(false, bail(str("0"))),
                                             when<EitherEffect>(true, bail(str("1"))),
                                             when<EitherEffect>(true, bail(str("2")))},
                                            bail(str("o")));
  CHECK(run_either(first_true) == EitherOutcome::left_of(str("1")));
}

TEST_CASE("the continuation of a failed computation is never invoked") {
  int calls = 0;
  auto f = [&calls](const Value& v) {
    ++calls;
    return pure<EitherEffect>(v);
  };
  for (const char* e : {"e", "x", ""}) {
    CHECK(run_either(wpfx::bind<EitherEffect>(bail(str(e)), f)) == EitherOutcome::left_of(str(e)));
  }
  CHECK(calls == 0);
}

TEST_CASE("interpreters agree with the reference equations on the generated spaces") {
  EitherSpace es;
  es.depth = 4;
  auto eg = generate_either(es);
  REQUIRE(eg.programs.size() > 10000);
  for (const auto& g : eg.programs) {
    auto a = run_either(g.program);
    CHECK_MESSAGE(a == oracle::run_either(g.program), g.text);
    CHECK_MESSAGE(a == run_either(g.program), g.text);  // determinism
  }

  RwsSpace rs;
  rs.depth = 3;
  auto rg = generate_rws(rs);
  for (const auto& g : rg.programs) {
    for (const auto& s : rs.states()) {
      auto a = run_rws(g.program, rs.env, s);
      CHECK_MESSAGE(a == oracle::run_rws(g.program, rs.env, s), g.text);
      CHECK_MESSAGE(a == run_rws(g.program, rs.env, s), g.text);
    }
  }
}

TEST_CASE("monad laws hold up to run over the generated spaces") {
  EitherSpace es;
  es.depth = 3;
  auto eg = generate_either(es);
  auto ef = either_conts();
  for (const auto& g : eg.programs) {
    const auto& m = g.program;
    // Right identity.
    CHECK_MESSAGE(run_either(wpfx::bind<EitherEffect>(m, [](const Value& v) { return pure<EitherEffect>(v); })) ==
                      run_either(m),
                  g.text);
    for (const auto& f : ef) {
      for (const auto& h : ef) {
        auto left = wpfx::bind<EitherEffect>(wpfx::bind<EitherEffect>(m, f), h);
        auto right = wpfx::bind<EitherEffect>(m, [f, h](const Value& x) { return wpfx::bind<EitherEffect>(f(x), h); });
        CHECK_MESSAGE(run_either(left) == run_either(right), g.text);
      }
    }
  }
  for (int a = -1; a <= 1; ++a) {
    for (const auto& f : ef) {
      Value v = Value::integer(a);
      CHECK(run_either(wpfx::bind<EitherEffect>(pure<EitherEffect>(v), f)) == run_either(f(v)));
    }
  }

  RwsSpace rs;
  rs.depth = 3;
  auto rg = generate_rws(rs);
  auto rf = rws_conts();
  for (const auto& g : rg.programs) {
    const auto& m = g.program;
    for (const auto& s : rs.states()) {
      CHECK_MESSAGE(run_rws(wpfx::bind<RwsEffect>(m, [](const Value& v) { return pure<RwsEffect>(v); }), rs.env, s) ==
                        run_rws(m, rs.env, s),
                    g.text);
      for (const auto& f : rf) {
        for (const auto& h : rf) {
          auto left = wpfx::bind<RwsEffect>(wpfx::bind<RwsEffect>(m, f), h);
          auto right = wpfx::bind<RwsEffect>(m, [f, h](const Value& x) { return wpfx::bind<RwsEffect>(f(x), h); });
          CHECK_MESSAGE(run_rws(left, rs.env, s) == run_rws(right, rs.env, s), g.text);
        }
      }
    }
  }
  for (const auto& s : rs.states()) {
    for (const auto& f : rf) {
      Value v = Value::integer(1);
      CHECK(run_rws(wpfx::bind<RwsEffect>(pure<RwsEffect>(v), f), rs.env, s) == run_rws(f(v), rs.env, s));
    }
  }
}

TEST_CASE("bind output is the concatenation of both halves, over random samples") {
  RwsSpace rs;
  rs.depth = 3;
  auto programs = generate_rws(rs).programs;
  auto conts = rws_conts();
  // Continuations that write depend on the value passed in.
  conts.push_back([](const Value& v) { return tell(std::vector<Value>{Value::tag("got:" + to_sexpr(v))}); });
  conts.push_back([&programs](const Value& v) {
    std::size_t i = std::hash<std::string>{}(to_sexpr(v)) % programs.size();
    return programs[i].program;
  });

  oracle::Rng rng(20261016);
  std::uniform_int_distribution<std::size_t> pick_m(0, programs.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_f(0, conts.size() - 1);
  std::uniform_int_distribution<int> pick_k(-3, 3);
  for (int sample = 0; sample < 1000; ++sample) {
    const auto& g = programs[pick_m(rng)];
    const auto& f = conts[pick_f(rng)];
    Value env = Value::integer(pick_k(rng));
    Value s = rec_k(pick_k(rng));

    auto first = run_rws(g.program, env, s);
    auto second = run_rws(f(first.value), env, first.state);
    auto whole = run_rws(wpfx::bind<RwsEffect>(g.program, f), env, s);
    std::vector<Value> expected = first.outputs;
    expected.insert(expected.end(), second.outputs.begin(), second.outputs.end());
    CHECK_MESSAGE(whole.outputs == expected, g.text);
    CHECK_MESSAGE(whole.state == second.state, g.text);
    CHECK_MESSAGE(whole.value == second.value, g.text);
  }
}

TEST_CASE("outcomes print readably") {
  CHECK(to_string(EitherOutcome::right_of(Value::integer(5))) == "Right 5");
  CHECK(to_string(EitherOutcome::left_of(str("e"))) == "Left \"e\"");
  CHECK(to_string(RwsOutcome{Value::unit(), rec_k(0), tags({"a", "b"})}) == "(unit, (record (k 0)), ['a, 'b])");
}

}  // TEST_SUITE
