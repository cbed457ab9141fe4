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

#include "wpfx/dsl/driver.hpp"

#include <algorithm>
#include <sstream>

#include "wpfx/dsl/compile.hpp"
#include "wpfx/enumerate.hpp"
#include "wpfx/semantics.hpp"

namespace wpfx::dsl {

namespace {

bool is_unit_shape(const std::optional<Shape>& s) { return !s || s->kind == Shape::Kind::Unit; }

Value literal_or_unit(const std::optional<std::string>& text, const std::optional<Shape>& shape,
                      const char* flag) {
  if (text) {
    try {
      return parse_literal(*text, shape);
    } catch (const LiteralError& e) {
      throw LiteralError(std::string(flag) + ": " + e.what());
    }
  }
  if (is_unit_shape(shape)) return Value::unit();
  throw LiteralError(std::string(flag) + " is required: the program declares shape " + print(*shape));
}

void reject_rws_inputs(const std::optional<std::string>& env, const std::optional<std::string>& state) {
  if (env || state) throw LiteralError("--env/--state only apply to rws programs");
}

// True when `s` can hold values of shape `want`. Unconstrained positions
// (`?n`) fit anything.
bool fits(const Shape& s, const Shape& want) {
  if (s.kind == Shape::Kind::Named) return true;
  if (s.kind != want.kind || s.args.size() != want.args.size()) return false;
  if (s.kind == Shape::Kind::Record) {
    if (s.fields.size() != want.fields.size()) return false;
    for (std::size_t i = 0; i < want.fields.size(); ++i) {
      auto it = std::find(s.fields.begin(), s.fields.end(), want.fields[i]);
      if (it == s.fields.end() || !fits(s.args[it - s.fields.begin()], want.args[i])) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (!fits(s.args[i], want.args[i])) return false;
  }
  return true;
}

Shape base(Shape::Kind k) {
  Shape s;
  s.kind = k;
  return s;
}

void require_fit(const Shape& s, const Shape& want, const std::string& what) {
  if (!fits(s, want)) {
    throw SweepError("sweep programs have " + what + " shape " + print(want) + ", but the file uses " +
                     print(s));
  }
}

void tally(CheckResult& out, CaseReport c, bool keep_all) {
  ++out.cases;
  const auto& r = c.contract;
  if (r.violation()) ++out.violations;
  if (!r.exact()) ++out.inexact;
  if (!r.precondition) ++out.failing;
  out.pass += r.verdict.count(LeafStatus::Pass);
  out.fail += r.verdict.count(LeafStatus::Fail);
  out.vacuous += r.verdict.count(LeafStatus::Vacuous);
  if (keep_all || r.violation()) out.reported.push_back(std::move(c));
}

CheckResult sweep_either(const CheckedFile& cf, const CheckOptions& opts, const EitherPost& post) {
  require_fit(cf.inferred_error, base(Shape::Kind::Str), "error");
  require_fit(cf.inferred_result, base(Shape::Kind::Int), "result");
  EitherSpace space;
  space.values.clear();
  for (int v = -opts.bound; v <= opts.bound; ++v) space.values.push_back(v);
  space.depth = opts.depth;
  auto gen = generate_either(space, opts.cap);
  CheckResult out;
  out.truncated = gen.truncated;
  for (std::size_t i = 0; i < gen.programs.size(); ++i) {
    tally(out, {i, gen.programs[i].text, "", check_contract(gen.programs[i].program, post)}, false);
  }
  return out;
}

CheckResult sweep_rws(const CheckedFile& cf, const CheckOptions& opts, const RwsPost& post) {
  Shape state = base(Shape::Kind::Record);
  state.fields = {"k"};
  state.args = {base(Shape::Kind::Int)};
  require_fit(cf.inferred_state, state, "state");
  require_fit(cf.inferred_output, base(Shape::Kind::Tag), "output");
  if (!is_unit_shape(cf.env)) throw SweepError("sweep programs run with env unit; the file declares " + print(*cf.env));
  if (mentions(cf.post(opts.post)->body, "result")) {
    throw SweepError("postcondition " + opts.post +
                     " mentions result, but generated rws programs return values of several shapes;"
                     " sweep postconditions may only use post-state and outputs");
  }
  RwsSpace space;
  space.values.clear();
  space.field_values.clear();
  for (int v = 0; v <= opts.bound; ++v) {
    space.values.push_back(v);
    space.field_values.push_back(v);
  }
  space.depth = opts.depth;
  auto states = space.states();
  auto gen = generate_rws(space, std::max<std::size_t>(1, opts.cap / states.size()));
  CheckResult out;
  out.truncated = gen.truncated;
  std::size_t index = 0;
  for (const auto& g : gen.programs) {
    for (const auto& st : states) {
      tally(out, {index++, g.text, to_sexpr(st), check_contract(g.program, space.env, st, post)}, false);
    }
  }
  return out;
}

Json outcome_json(const Outcome& o) {
  if (const auto* e = std::get_if<EitherOutcome>(&o)) {
    Json j = Json::object();
    j[e->right ? "right" : "left"] = value_json(e->value);
    return j;
  }
  const auto& r = std::get<RwsOutcome>(o);
  Json outputs = Json::array();
  for (const auto& v : r.outputs) outputs.push_back(value_json(v));
  Json j = Json::object();
  j["value"] = value_json(r.value);
  j["state"] = value_json(r.state);
  j["outputs"] = outputs;
  return j;
}

Json leaf_json(const LeafReport& l) {
  Json j = Json::object();
  j["path"] = l.path;
  j["hypotheses"] = l.hypotheses;
  j["status"] = std::string(status_name(l.status));
  j["label"] = l.label;
  j["outcome"] = l.outcome;
  return j;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

void leaf_text(std::ostringstream& os, const LeafReport& l) {
  std::string status(status_name(l.status));
  os << "  " << status << std::string(8 - status.size(), ' ')
     << (l.path.empty() ? "(root)" : join(l.path, " / "));
  if (!l.hypotheses.empty()) os << "  [" << join(l.hypotheses, "; ") << "]";
  if (!l.label.empty()) os << "  " << l.label;
  if (!l.outcome.empty()) os << " -> " << l.outcome;
  os << '\n';
}

}  // namespace

RunResult run_file(const CheckedFile& cf, const std::optional<std::string>& env,
                   const std::optional<std::string>& state) {
  RunResult r;
  r.kind = cf.kind;
  if (cf.kind == EffectKind::Either) {
    reject_rws_inputs(env, state);
    r.outcome = run_either(compile_either(cf));
  } else {
    Value e = literal_or_unit(env, cf.env, "--env");
    Value s = literal_or_unit(state, cf.state, "--state");
    r.outcome = run_rws(compile_rws(cf), e, s);
  }
  return r;
}

CheckResult check_file(const CheckedFile& cf, const CheckOptions& opts) {
  CheckResult out;
  if (opts.sweep) {
    if (opts.env || opts.state) throw SweepError("--sweep enumerates its own inputs; drop --env/--state");
    if (opts.bound < 0) throw SweepError("--bound must be non-negative");
    if (opts.depth < 1) throw SweepError("--depth must be at least 1");
    if (cf.kind == EffectKind::Either) {
      out = sweep_either(cf, opts, either_post(cf, opts.post));
    } else {
      out = sweep_rws(cf, opts, rws_post(cf, opts.post));
    }
    out.sweep = true;
  } else if (cf.kind == EffectKind::Either) {
    auto post = either_post(cf, opts.post);
    reject_rws_inputs(opts.env, opts.state);
    tally(out, {0, "", "", check_contract(compile_either(cf), post)}, true);
  } else {
    auto post = rws_post(cf, opts.post);
    Value e = literal_or_unit(opts.env, cf.env, "--env");
    Value s = literal_or_unit(opts.state, cf.state, "--state");
    tally(out, {0, "", to_sexpr(s), check_contract(compile_rws(cf), e, s, post)}, true);
  }
  out.kind = cf.kind;
  out.post = opts.post;
  return out;
}

Json value_json(const Value& v) {
  switch (v.kind()) {
    case Kind::Unit: return nullptr;
    case Kind::Bool: return v.as_bool();
    case Kind::Int: return v.as_int();
    case Kind::Str: return v.as_str();
    case Kind::Tag: return Json{{"tag", v.tag_name()}};
    case Kind::Maybe:
      if (v.is_nothing()) return Json{{"nothing", nullptr}};
      return Json{{"just", value_json(v.from_just())}};
    case Kind::Either: return Json{{v.is_right() ? "right" : "left", value_json(v.either_payload())}};
    case Kind::Record: {
      Json j = Json::object();
      const auto& r = v.as_record();
      for (std::size_t i = 0; i < r.names.size(); ++i) j[r.names[i]] = value_json(r.values[i]);
      return j;
    }
    case Kind::Seq: {
      Json j = Json::array();
      for (const auto& x : v.items()) j.push_back(value_json(x));
      return j;
    }
    case Kind::Fn: return Json{{"function", to_sexpr(v)}};
  }
  return nullptr;
}

Json to_json(const RunResult& r) {
  Json j = Json::object();
  j["kind"] = std::string(effect_name(r.kind));
  j["result"] = outcome_json(r.outcome);
  return j;
}

Json to_json(const CheckResult& r) {
  Json j = Json::object();
  j["kind"] = std::string(effect_name(r.kind));
  j["post"] = r.post;
  j["mode"] = r.sweep ? "sweep" : "single";
  j["cases"] = r.cases;
  j["violations"] = r.violations;
  j["inexact"] = r.inexact;
  j["failing"] = r.failing;
  j["truncated"] = r.truncated;
  j["summary"] = Json{{"pass", r.pass}, {"fail", r.fail}, {"vacuous", r.vacuous}};
  Json leaves = Json::array();
  Json cases = Json::array();
  for (const auto& c : r.reported) {
    Json cj = Json::object();
    cj["case"] = c.index;
    if (!c.program.empty()) cj["program"] = c.program;
    if (!c.input.empty()) cj["input"] = c.input;
    cj["outcome"] = outcome_json(c.contract.outcome);
    cj["precondition"] = c.contract.precondition;
    cj["postcondition"] = c.contract.postcondition;
    cj["violation"] = c.contract.violation();
    cases.push_back(cj);
    for (const auto& l : c.contract.verdict.leaves) {
      Json lj = leaf_json(l);
      if (r.sweep) lj["case"] = c.index;
      leaves.push_back(lj);
    }
  }
  j["results"] = cases;
  j["leaves"] = leaves;
  return j;
}

std::string to_text(const RunResult& r) { return to_string(r.outcome) + "\n"; }

std::string to_text(const CheckResult& r) {
  std::ostringstream os;
  os << (r.sweep ? "sweep" : "check") << " of " << r.post << " (" << effect_name(r.kind) << "): "
     << r.cases << " case(s), " << r.violations << " violation(s), " << r.inexact
     << " inexact, " << r.failing << " with a failing precondition\n";
  if (r.truncated) os << "note: the program space exceeded the case cap and was truncated\n";
  os << "leaves: " << r.pass << " pass, " << r.fail << " fail, " << r.vacuous << " vacuous\n";
  for (const auto& c : r.reported) {
    os << "case " << c.index;
    if (!c.program.empty()) os << ": " << c.program;
    if (!c.input.empty()) os << " from " << c.input;
    os << "\n  outcome " << to_string(c.contract.outcome) << ", precondition "
       << (c.contract.precondition ? "holds" : "fails") << ", postcondition "
       << (c.contract.postcondition ? "holds" : "fails")
       << (c.contract.violation() ? "  ** contract violation **" : "") << '\n';
    for (const auto& l : c.contract.verdict.leaves) leaf_text(os, l);
  }
  return os.str();
}

}  // namespace wpfx::dsl
