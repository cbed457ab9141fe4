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
#include "wpfx/optics.hpp"
#include "wpfx/program.hpp"
#include "wpfx/semantics.hpp"

using namespace wpfx;

namespace {

constexpr int kRecordsPerLens = 1000;

struct LensCase {
  Lens lens;
  // Produces a part value of the right shape for this lens.
  std::function<Value(oracle::Rng&)> part;
};

Value any_int(oracle::Rng& rng) { return Value::integer(oracle::small_int(rng)); }

// Every lens in the library, plus compositions, on the shape built by
// oracle::nested_record.
std::vector<LensCase> lenses() {
  auto b_part = [](oracle::Rng& rng) {
    return Value::record({{"c", any_int(rng)}, {"tag", Value::tag(oracle::small_int(rng) > 0 ? "x" : "y")}});
  };
  auto a_part = [b_part](oracle::Rng& rng) { return Value::record({{"b", b_part(rng)}, {"d", any_int(rng)}}); };
  auto maybe_part = [](oracle::Rng& rng) {
    return oracle::small_int(rng) > 0 ? Value::just(any_int(rng)) : Value::nothing();
  };
  auto log_part = [](oracle::Rng& rng) {
    std::vector<Value> xs;
    for (int i = oracle::small_int(rng, 0, 3); i > 0; --i) xs.push_back(any_int(rng));
    return Value::seq(std::move(xs));
  };
  auto k_by_hand = mk_lens([](const Value& s) { return s.field("k"); },
                           [](const Value& s, const Value& v) { return s.with_field("k", v); }, "k");
  return {
      {identity_lens(), [](oracle::Rng& rng) { return oracle::nested_record(rng); }},
      {k_by_hand, any_int},
      {field_lens("k"), any_int},
      {field_lens("m"), maybe_part},
      {field_lens("log"), log_part},
      {field_lens("a"), a_part},
      {path_lens("a.b"), b_part},
      {path_lens("a.b.c"), any_int},
      {path_lens(std::vector<std::string>{"a", "d"}), any_int},
      {compose(field_lens("a"), field_lens("b")), b_part},
      {compose(compose(field_lens("a"), field_lens("b")), field_lens("tag")),
       [](oracle::Rng& rng) { return Value::tag(oracle::small_int(rng) > 0 ? "y" : "z"); }},
      {compose(field_lens("a"), compose(field_lens("b"), field_lens("c"))), any_int},
      {compose(path_lens("a.b.c"), identity_lens()), any_int},
      {compose(identity_lens(), field_lens("k")), any_int},
  };
}

// a.b.c updated by rebuilding every level by hand.
Value set_abc_by_hand(const Value& s, const Value& v) {
  const auto& a = s.field("a");
  const auto& b = a.field("b");
  Value new_b = Value::record({{"c", v}, {"tag", b.field("tag")}});
  Value new_a = Value::record({{"b", new_b}, {"d", a.field("d")}});
  return Value::record({{"a", new_a}, {"k", s.field("k")}, {"log", s.field("log")}, {"m", s.field("m")}});
}

}  // namespace

TEST_SUITE("optics") {

TEST_CASE("a hand-made field lens") {
  auto k = mk_lens([](const Value& s) { return s.field("k"); },
                   [](const Value& s, const Value& v) { return s.with_field("k", v); });
  Value s = Value::record({{"k", Value::integer(0)}});
  CHECK(k.get(s) == Value::integer(0));
  CHECK(k.set(s, Value::integer(7)) == Value::record({{"k", Value::integer(7)}}));
}

TEST_CASE("composition focuses on the nested field") {
  Value s = Value::record({{"a", Value::record({{"b", Value::integer(3)}})}});
  auto ab = compose(field_lens("a"), field_lens("b"));
  CHECK(ab.get(s) == Value::integer(3));
  CHECK(ab.set(s, Value::integer(9)) == Value::record({{"a", Value::record({{"b", Value::integer(9)}})}}));
  CHECK(path_lens("a.b").set(s, Value::integer(9)) == ab.set(s, Value::integer(9)));
  CHECK(path_lens(std::vector<std::string>{}).get(s) == s);
}

TEST_CASE("lenses are lawful on generated records") {
  oracle::Rng rng(7);
  for (const auto& lc : lenses()) {
    CAPTURE(lc.lens.name());
    for (int i = 0; i < kRecordsPerLens; ++i) {
      Value s = oracle::nested_record(rng);
      Value v1 = lc.part(rng), v2 = lc.part(rng);
      CHECK(oracle::same(lc.lens.set(s, lc.lens.get(s)), s));                         // GetSet
      CHECK(oracle::same(lc.lens.get(lc.lens.set(s, v1)), v1));                       // SetGet
      CHECK(oracle::same(lc.lens.set(lc.lens.set(s, v1), v2), lc.lens.set(s, v2)));  // SetSet
    }
  }
}

TEST_CASE("composed updates agree with updates written out by hand") {
  oracle::Rng rng(11);
  auto l = path_lens("a.b.c");
  auto l2 = compose(field_lens("a"), compose(field_lens("b"), field_lens("c")));
  for (int i = 0; i < kRecordsPerLens; ++i) {
    Value s = oracle::nested_record(rng);
    Value v = any_int(rng);
    CHECK(oracle::same(l.get(s), s.field("a").field("b").field("c")));
    CHECK(oracle::same(l.set(s, v), set_abc_by_hand(s, v)));
    CHECK(oracle::same(l2.set(s, v), set_abc_by_hand(s, v)));
  }
}

TEST_CASE("composition is associative and has the identity as unit") {
  oracle::Rng rng(13);
  auto a = field_lens("a"), b = field_lens("b"), c = field_lens("c");
  auto left = compose(compose(a, b), c);
  auto right = compose(a, compose(b, c));
  auto with_id = compose(path_lens("a.d"), identity_lens());
  auto plain = path_lens("a.d");
  for (int i = 0; i < kRecordsPerLens; ++i) {
    Value s = oracle::nested_record(rng);
    Value v = any_int(rng);
    CHECK(oracle::same(left.get(s), right.get(s)));
    CHECK(oracle::same(left.set(s, v), right.set(s, v)));
    CHECK(oracle::same(with_id.get(s), plain.get(s)));
    CHECK(oracle::same(with_id.set(s, v), plain.set(s, v)));
  }
}

TEST_CASE("use, assign and modifying in the state") {
  auto vote_sent = path_lens("round-state.vote-sent");
  Value s = Value::record({{"round-state", Value::record({{"vote-sent", Value::nothing()}, {"round", Value::integer(3)}})},
                           {"epoch", Value::integer(7)}});
  Value voted = Value::record(
      {{"round-state", Value::record({{"vote-sent", Value::just(Value::integer(42))}, {"round", Value::integer(3)}})},
       {"epoch", Value::integer(7)}});
  CHECK(run_rws(assign(vote_sent, Value::just(Value::integer(42))), Value::unit(), s) ==
        RwsOutcome{Value::unit(), voted, {}});
  CHECK(run_rws(use(vote_sent), Value::unit(), voted) == RwsOutcome{Value::just(Value::integer(42)), voted, {}});

  auto round = path_lens("round-state.round");
  auto bumped = run_rws(modifying(round, [](const Value& r) { return Value::integer(r.as_int() + 1); }), Value::unit(), s);
  CHECK(round.get(bumped.state) == Value::integer(4));
  CHECK(bumped.state.field("epoch") == Value::integer(7));
  CHECK(bumped.outputs.empty());
}

TEST_CASE("assign then use returns the assigned value") {
  oracle::Rng rng(17);
  std::size_t cases = 0, round_trips = 0;
  for (const auto& lc : lenses()) {
    for (int i = 0; i < 200; ++i) {
      Value s = oracle::nested_record(rng);
      Value v = lc.part(rng);
      auto m = then<RwsEffect>(assign(lc.lens, v), use(lc.lens));
      auto out = run_rws(m, Value::unit(), s);
      ++cases;
      if (oracle::same(out.value, v) && oracle::same(lc.lens.get(out.state), v) && out.outputs.empty()) ++round_trips;
    }
  }
  CHECK(round_trips == cases);
}

}  // TEST_SUITE
