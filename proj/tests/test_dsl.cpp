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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "wpfx/dsl/check.hpp"
#include "wpfx/dsl/compile.hpp"
#include "wpfx/dsl/driver.hpp"
#include "wpfx/dsl/syntax.hpp"

using namespace wpfx;
using namespace wpfx::dsl;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = WPFX_CORPUS_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot read " << p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kCorpus)) {
    if (e.path().extension() == ".wpx") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Messages of the diagnostics raised when checking `text`.
std::vector<std::string> diagnostics(const std::string& text) {
  try {
    load(text);
  } catch (const CheckError& e) {
    std::vector<std::string> out;
    for (const auto& d : e.diagnostics()) out.push_back(d.message);
    return out;
  }
  return {};
}

bool any_contains(const std::vector<std::string>& xs, const std::string& needle) {
  for (const auto& x : xs) {
    if (x.find(needle) != std::string::npos) return true;
  }
  return false;
}

Value rec(std::vector<std::pair<std::string, Value>> fields) { return Value::record(std::move(fields)); }
Value i(int v) { return Value::integer(v); }

}  // namespace

TEST_SUITE("dsl") {

TEST_CASE("parsing the smallest programs") {
  auto f = parse("(program either (entry (return 5)))");
  CHECK(f.kind == EffectKind::Either);
  const Decl* entry = f.find(Decl::Kind::Entry);
  REQUIRE(entry);
  CHECK(entry->body.op == Syntax::Op::Return);
  REQUIRE(entry->body.kids.size() == 1);
  CHECK(entry->body.kids[0].op == Syntax::Op::Lit);
  CHECK(entry->body.kids[0].literal == i(5));

  auto g = parse("(program either (entry (bind (bail \"e\") (x (return x)))))");
  const Syntax& b = g.find(Decl::Kind::Entry)->body;
  CHECK(b.op == Syntax::Op::Bind);
  CHECK(b.binders == std::vector<std::string>{"x"});
  CHECK(b.kids[0].op == Syntax::Op::Bail);
  CHECK(b.kids[0].kids[0].literal == Value::str("e"));
  CHECK(b.kids[1].op == Syntax::Op::Return);
  CHECK(b.kids[1].kids[0].op == Syntax::Op::Var);
  CHECK(b.kids[1].kids[0].text == "x");
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("(program either\n  (entry (return");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unclosed form") != std::string::npos);
    CHECK(e.pos().line == 2);
  }
  CHECK_THROWS_AS(parse("(program either (entry (return 1)) (entry (return 2)))"), ParseError);
  CHECK_THROWS_AS(parse("(program either (define (f) (return 1)) (define (f) (return 2)) (entry (f)))"), ParseError);
  CHECK_THROWS_AS(parse("(program either (post p true) (post p false) (entry (return 1)))"), ParseError);
  CHECK_THROWS_AS(parse("(program either (widget 1) (entry (return 1)))"), ParseError);
  CHECK_THROWS_AS(parse("(program either (entry (return (frob 1))))"), ParseError);
  CHECK_THROWS_AS(parse("(program state (entry (return 1)))"), ParseError);
  CHECK_THROWS_AS(parse("(program either (entry (return 2147483648)))"), ParseError);
  CHECK_THROWS_AS(parse("(program either (entry (return \"open)))"), ParseError);
  CHECK_THROWS_AS(parse("(program either (define (return) (return 1)) (entry (return 1)))"), ParseError);
  CHECK_NOTHROW(parse("; leading comment\n(program either ; trailing\n (entry (return -2147483648)))"));
}

TEST_CASE("printing and reparsing gives back the same file") {
  auto files = corpus_files();
  REQUIRE(files.size() >= 6);
  for (const auto& p : files) {
    CAPTURE(p.filename().string());
    auto f = parse(slurp(p));
    std::string printed = print(f);
    auto again = parse(printed);
    CHECK(again == f);
    CHECK(print(again) == printed);
    std::istringstream lines(printed);
    for (std::string line; std::getline(lines, line);) CHECK(line.size() <= 88);
  }
  auto tricky = parse(
      "(program rws (state (Record (s Str))) (output Tag)"
      " (entry (do (tell (seq 'a)) (put (record (s \"q\\\"uote\\n\\\\\"))) (return -3))))");
  CHECK(parse(print(tricky)) == tricky);
}

TEST_CASE("the checker accepts the corpus") {
  for (const auto& p : corpus_files()) {
    CAPTURE(p.filename().string());
    CHECK_NOTHROW(load(slurp(p)));
  }
}

TEST_CASE("checker diagnostics") {
  CHECK(any_contains(diagnostics(slurp(kCorpus / "errors/unknown_field.wpx")), "unknown field missing"));
  CHECK(any_contains(diagnostics(slurp(kCorpus / "errors/missing_otherwise.wpx")), "exactly one branch"));
  CHECK(any_contains(diagnostics(slurp(kCorpus / "errors/recursive.wpx")), "recursive definition ping"));
  CHECK(diagnostics(slurp(kCorpus / "errors/recursive.wpx")).size() == 1);
  CHECK(any_contains(diagnostics(slurp(kCorpus / "errors/compare_bool.wpx")), "ordered shapes"));
  CHECK(any_contains(diagnostics(slurp(kCorpus / "errors/bad_tell.wpx")), "expected Tag, got Int"));
  CHECK(any_contains(diagnostics("(program either (entry (ask)))"), "only available in rws"));
  CHECK(any_contains(diagnostics("(program either (env Int) (entry (return 1)))"), "only allowed in rws"));
  CHECK(any_contains(diagnostics("(program either (result Int) (entry (return 1)) (post p (+ 1 2)))"),
                     "expected Bool, got Int"));
  CHECK(any_contains(diagnostics("(program either (result Int) (entry (return true)))"), "expected Int, got Bool"));
  CHECK(any_contains(diagnostics("(program either (entry (nope 1)))"), "unknown definition nope"));
  CHECK(any_contains(diagnostics("(program rws (state (Record (k Int))) (entry (use k)))"), "state"));
  CHECK(any_contains(diagnostics("(program either (entry (return (< (seq true) (seq false)))))"), "ordered"));
  // Each declaration reports its first error, and checking carries on.
  auto several = diagnostics(
      "(program rws (state (Record (k Int))) (output Tag)\n"
      " (entry (assign x 1))\n"
      " (post p (+ 1 2)))");
  CHECK(several.size() == 2);
}

TEST_CASE("a transcription of the vote-recording update is well typed and runs") {
  auto cf = load(slurp(kCorpus / "record_vote.wpx"));
  auto r = run_file(cf, std::nullopt, "(record (epoch 7) (round-state (record (round 3) (vote-sent nothing))))");
  auto state = rec({{"round-state", rec({{"vote-sent", Value::just(i(42))}, {"round", i(3)}})}, {"epoch", i(7)}});
  CHECK(std::get<RwsOutcome>(r.outcome) == RwsOutcome{Value::just(i(42)), state, {}});
}

TEST_CASE("running corpus programs gives the hand-traced outcomes") {
  auto verify = run_file(load(slurp(kCorpus / "verify.wpx")), std::nullopt, std::nullopt);
  CHECK(std::get<EitherOutcome>(verify.outcome) == EitherOutcome::right_of(Value::unit()));
  auto failed = run_file(load(slurp(kCorpus / "verify_failed.wpx")), std::nullopt, std::nullopt);
  CHECK(std::get<EitherOutcome>(failed.outcome) == EitherOutcome::left_of(Value::str("status is not Succeeded")));

  // count 1, step 2, three bumps: 3, 5, 7.
  auto counter = run_file(load(slurp(kCorpus / "counter.wpx")), "(record (step 2))",
                          "(record (count 1) (history (seq)))");
  auto st = rec({{"count", i(7)}, {"history", Value::seq({i(3), i(5), i(7)})}});
  CHECK(std::get<RwsOutcome>(counter.outcome) ==
        RwsOutcome{i(7), st, {Value::str("3"), Value::str("5"), Value::str("7")}});

  // Author 1 is a valid proposer; block 7 executes to vote 107, sent to
  // proposers[round + 1] = 2 with the current sync info.
  auto pp = load(slurp(kCorpus / "process_proposal.wpx"));
  std::string state = "(record (round-state (record (vote-sent nothing) (round 0))) (proposers (seq 1 2)) (sync-info 9))";
  auto vote = std::get<RwsOutcome>(run_file(pp, "(record (author (just 1)) (round 0) (id 7))", state).outcome);
  CHECK(vote.outputs ==
        std::vector<Value>{Value::right(rec({{"vote", i(107)}, {"sync", i(9)}, {"recipient", i(2)}}))});
  CHECK(vote.state.field("round-state").field("vote-sent") == Value::just(i(107)));
  auto none = std::get<RwsOutcome>(run_file(pp, "(record (author nothing) (round 0) (id 7))", state).outcome);
  CHECK(none.outputs == std::vector<Value>{Value::left(Value::str("proposal has no author"))});
  CHECK(none.state.field("round-state").field("vote-sent") == Value::nothing());
}

TEST_CASE("the error path of the proposal handler sends no vote") {
  auto pp = load(slurp(kCorpus / "process_proposal.wpx"));
  std::string state = "(record (round-state (record (vote-sent nothing) (round 0))) (proposers (seq 1 2)) (sync-info 9))";
  for (const char* env : {"(record (author nothing) (round 0) (id 7))", "(record (author (just 5)) (round 0) (id 7))",
                          "(record (author (just 2)) (round 0) (id 0))", "(record (author (just 1)) (round 0) (id 7))"}) {
    CAPTURE(env);
    CheckOptions o;
    o.post = "error-path-sends-no-vote";
    o.env = env;
    o.state = state;
    auto r = check_file(pp, o);
    CHECK(r.violations == 0);
    CHECK(r.failing == 0);
    CHECK(r.fail == 0);
    CHECK(r.pass >= 1);
  }
}

TEST_CASE("checking a bailing guard shows the failing guard") {
  auto cf = load(slurp(kCorpus / "guard_bail.wpx"));
  CheckOptions o;
  o.post = "is-right";
  auto r = check_file(cf, o);
  CHECK(r.violations == 0);
  CHECK(r.failing == 1);
  REQUIRE(r.reported.size() == 1);
  const auto& leaves = r.reported[0].contract.verdict.leaves;
  std::size_t failing = 0;
  for (const auto& l : leaves) {
    if (l.status != LeafStatus::Fail) continue;
    ++failing;
    CHECK(l.path.back() == "guard[1]");
    CHECK(l.hypotheses.back() == "not (< x 0) and (== x 0)");
  }
  CHECK(failing == 1);
  o.post = "nope";
  CHECK_THROWS_AS(check_file(cf, o), UnknownPostError);
}

TEST_CASE("unreached guard conditions are never evaluated") {
  auto cf = load(
      "(program either (result Int)\n"
      " (entry (if-guards ((== 1 1) (return 0)) ((== (+ 2147483647 1) 0) (return 1)) (otherwise (return 2))))\n"
      " (post ok (is-right result)))");
  CHECK(std::get<EitherOutcome>(run_file(cf, std::nullopt, std::nullopt).outcome) ==
        EitherOutcome::right_of(i(0)));
  CheckOptions o;
  o.post = "ok";
  CHECK(check_file(cf, o).violations == 0);
  auto overflow = load("(program either (result Int) (entry (return (+ 2147483647 1))))");
  CHECK_THROWS_AS(run_file(overflow, std::nullopt, std::nullopt), RuntimeError);
}

TEST_CASE("literals conform to declared shapes") {
  auto s = load(slurp(kCorpus / "record_vote.wpx")).state;
  REQUIRE(s.has_value());
  auto v = parse_literal("(record (epoch 7) (round-state (record (round 3) (vote-sent (just 1)))))", s);
  CHECK(v == rec({{"round-state", rec({{"vote-sent", Value::just(i(1))}, {"round", i(3)}})}, {"epoch", i(7)}}));

  auto message = [&](const std::string& text) {
    try {
      parse_literal(text, s);
    } catch (const LiteralError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("(record (epoch 7))").find("missing field round-state") != std::string::npos);
  CHECK(message("(record (epoch 7) (z 1) (round-state (record (round 3) (vote-sent nothing))))")
            .find("unexpected field z") != std::string::npos);
  CHECK(message("(record (epoch 7) (round-state (record (round 3))))").find("vote-sent") != std::string::npos);
  CHECK(message("(record (epoch true) (round-state (record (round 3) (vote-sent nothing))))").find("epoch") !=
        std::string::npos);
  CHECK(!message("(record (epoch").empty());
  CHECK(!message("(record (epoch (+ 1 2)))").empty());
  CHECK(parse_literal("(seq 'a 'b)", std::nullopt) == Value::seq({Value::tag("a"), Value::tag("b")}));
}

TEST_CASE("serialized outcomes") {
  CHECK(value_json(Value::unit()).dump() == "null");
  CHECK(value_json(Value::nothing()).dump() == "{\"nothing\":null}");
  CHECK(value_json(Value::just(i(1))).dump() == "{\"just\":1}");
  CHECK(value_json(Value::left(Value::str("e"))).dump() == "{\"left\":\"e\"}");
  CHECK(value_json(Value::tag("a")).dump() == "{\"tag\":\"a\"}");
  CHECK(value_json(rec({{"b", i(1)}, {"a", Value::boolean(true)}})).dump() == "{\"b\":1,\"a\":true}");
  RunResult r{EffectKind::Either, EitherOutcome::right_of(i(5))};
  CHECK(to_json(r).dump() == "{\"kind\":\"either\",\"result\":{\"right\":5}}");
}

TEST_CASE("library runs render exactly the golden outputs") {
  // The command-line test compares the tool's output with the same files, so
  // together they show the tool and the library agree byte for byte.
  auto manifest = nlohmann::json::parse(slurp(kCorpus / "cases.json"));
  std::size_t compared = 0;
  for (const auto& c : manifest["cases"]) {
    auto args = c["args"].get<std::vector<std::string>>();
    if (args.empty() || args[0] != "run" || !c.contains("stdout") || c["exit"] != 0) continue;
    bool text = false;
    std::optional<std::string> env, state;
    for (std::size_t k = 2; k < args.size(); ++k) {
      if (args[k] == "--env") env = args[++k];
      else if (args[k] == "--state") state = args[++k];
      else if (args[k] == "--format") text = args[++k] == "text";
    }
    CAPTURE(c["name"].get<std::string>());
    auto r = run_file(load(slurp(kCorpus / args[1])), env, state);
    std::string rendered = text ? to_text(r) : to_json(r).dump() + "\n";
    CHECK(rendered == slurp(kCorpus / c["stdout"].get<std::string>()));
    ++compared;
  }
  CHECK(compared >= 10);
}

TEST_CASE("sweeps from a file") {
  auto cf = load(slurp(kCorpus / "sweep_either.wpx"));
  CheckOptions o;
  o.post = "is-right";
  o.sweep = true;
  o.bound = 1;
  o.depth = 2;
  auto r = check_file(cf, o);
  CHECK(r.cases > 0);
  CHECK(r.violations == 0);
  CHECK(r.inexact == 0);
  CHECK(r.reported.empty());
  o.cap = 10;
  auto t = check_file(cf, o);
  CHECK(t.truncated);
  CHECK(t.cases == 10);

  auto rws = load(slurp(kCorpus / "tell_ab.wpx"));
  o.post = "state-unchanged";
  o.cap = 1000000;
  CHECK_THROWS_AS(check_file(rws, o), SweepError);
  CHECK_THROWS_AS(check_file(load(slurp(kCorpus / "verify.wpx")), [] {
    CheckOptions v;
    v.post = "accepted";
    v.sweep = true;
    return v;
  }()), SweepError);
}

TEST_CASE("free variables") {
  auto e = parse_expr_text("(and (is-right result) (any (x (== x y)) outputs))");
  CHECK(mentions(e, "result"));
  CHECK(mentions(e, "y"));
  CHECK(mentions(e, "outputs"));
  CHECK_FALSE(mentions(e, "x"));
  CHECK_FALSE(mentions(e, "post-state"));
}

}  // TEST_SUITE
