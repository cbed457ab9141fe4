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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "wpfx/wpfx.h"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(WPFX_CORPUS_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot read " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { wpfx_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct File {
  wpfx_file* f = nullptr;
  ~File() { wpfx_file_free(f); }
};

struct Report {
  wpfx_report* r = nullptr;
  ~Report() { wpfx_report_free(r); }
};

}  // namespace

TEST_SUITE("c api") {

TEST_CASE("version and empty error") {
  CHECK(std::string(wpfx_version()).size() > 0);
  CHECK(wpfx_last_error() != nullptr);
}

TEST_CASE("load, run and render") {
  File f;
  REQUIRE(wpfx_file_load(slurp("return5.wpx").c_str(), &f.f) == WPFX_OK);
  CHECK(wpfx_file_kind(f.f) == 0);
  Owned json, text;
  REQUIRE(wpfx_run(f.f, nullptr, nullptr, WPFX_FORMAT_JSON, &json.p) == WPFX_OK);
  CHECK(json.str() == slurp("golden/return5.run.json"));
  REQUIRE(wpfx_run(f.f, nullptr, nullptr, WPFX_FORMAT_TEXT, &text.p) == WPFX_OK);
  CHECK(text.str() == slurp("golden/return5.run.txt"));
}

TEST_CASE("rws runs take literals") {
  File f;
  REQUIRE(wpfx_file_load(slurp("counter.wpx").c_str(), &f.f) == WPFX_OK);
  CHECK(wpfx_file_kind(f.f) == 1);
  Owned out;
  REQUIRE(wpfx_run(f.f, "(record (step 2))", "(record (count 1) (history (seq)))", WPFX_FORMAT_JSON, &out.p) ==
          WPFX_OK);
  CHECK(out.str() == slurp("golden/counter.run.json"));
  Owned bad;
  CHECK(wpfx_run(f.f, "(record (step 2))", "(record (count 1))", WPFX_FORMAT_JSON, &bad.p) == WPFX_ERR_LITERAL);
  CHECK(bad.p == nullptr);
  CHECK(std::string(wpfx_last_error()).find("missing field history") != std::string::npos);
}

TEST_CASE("errors are reported by status and message") {
  File f;
  CHECK(wpfx_file_load("(program either (entry (return", &f.f) == WPFX_ERR_PARSE);
  CHECK(f.f == nullptr);
  CHECK(std::string(wpfx_last_error()).find("unclosed form") != std::string::npos);
  CHECK(wpfx_file_load(slurp("errors/unknown_field.wpx").c_str(), &f.f) == WPFX_ERR_TYPE);
  CHECK(std::string(wpfx_last_error()).find("unknown field missing") != std::string::npos);
  CHECK(wpfx_file_load(nullptr, &f.f) == WPFX_ERR_ARGUMENT);
  CHECK(wpfx_file_kind(nullptr) == -1);
  Owned out;
  CHECK(wpfx_run(nullptr, nullptr, nullptr, WPFX_FORMAT_JSON, &out.p) == WPFX_ERR_ARGUMENT);

  File overflow;
  REQUIRE(wpfx_file_load("(program either (result Int) (entry (return (+ 2147483647 1))))", &overflow.f) == WPFX_OK);
  CHECK(wpfx_run(overflow.f, nullptr, nullptr, WPFX_FORMAT_JSON, &out.p) == WPFX_ERR_RUNTIME);
}

TEST_CASE("parsed but unchecked files print but do not run") {
  File f;
  REQUIRE(wpfx_file_parse(slurp("errors/unknown_field.wpx").c_str(), &f.f) == WPFX_OK);
  Owned printed;
  REQUIRE(wpfx_file_print(f.f, &printed.p) == WPFX_OK);
  File again;
  CHECK(wpfx_file_parse(printed.str().c_str(), &again.f) == WPFX_OK);
  Owned reprinted;
  REQUIRE(wpfx_file_print(again.f, &reprinted.p) == WPFX_OK);
  CHECK(printed.str() == reprinted.str());
  Owned out;
  CHECK(wpfx_run(f.f, nullptr, nullptr, WPFX_FORMAT_JSON, &out.p) == WPFX_ERR_ARGUMENT);
}

TEST_CASE("checks and sweeps") {
  File f;
  REQUIRE(wpfx_file_load(slurp("guard_bail.wpx").c_str(), &f.f) == WPFX_OK);
  wpfx_check_options o;
  wpfx_check_options_init(&o);
  CHECK(o.bound == 3);
  CHECK(o.depth == 4);
  CHECK(o.cap == 1000000);
  o.post = "is-right";
  Report r;
  REQUIRE(wpfx_check(f.f, &o, &r.r) == WPFX_OK);
  CHECK(wpfx_report_cases(r.r) == 1);
  CHECK(wpfx_report_violations(r.r) == 0);
  CHECK(wpfx_report_failing(r.r) == 1);
  Owned json;
  REQUIRE(wpfx_report_render(r.r, WPFX_FORMAT_JSON, &json.p) == WPFX_OK);
  CHECK(json.str() == slurp("golden/guard_bail.is-right.check.json"));

  o.post = "no-such-post";
  Report missing;
  CHECK(wpfx_check(f.f, &o, &missing.r) == WPFX_ERR_UNKNOWN_POST);

  File sweep;
  REQUIRE(wpfx_file_load(slurp("sweep_either.wpx").c_str(), &sweep.f) == WPFX_OK);
  wpfx_check_options_init(&o);
  o.post = "is-right";
  o.sweep = 1;
  o.bound = 1;
  o.depth = 2;
  Report s;
  REQUIRE(wpfx_check(sweep.f, &o, &s.r) == WPFX_OK);
  CHECK(wpfx_report_violations(s.r) == 0);
  CHECK(wpfx_report_truncated(s.r) == 0);
  Owned sj;
  REQUIRE(wpfx_report_render(s.r, WPFX_FORMAT_JSON, &sj.p) == WPFX_OK);
  CHECK(sj.str() == slurp("golden/sweep_either.is-right.b1d2.json"));

  o.cap = 5;
  Report t;
  REQUIRE(wpfx_check(sweep.f, &o, &t.r) == WPFX_OK);
  CHECK(wpfx_report_cases(t.r) == 5);
  CHECK(wpfx_report_truncated(t.r) == 1);

  File verify;
  REQUIRE(wpfx_file_load(slurp("verify.wpx").c_str(), &verify.f) == WPFX_OK);
  wpfx_check_options_init(&o);
  o.post = "accepted";
  o.sweep = 1;
  Report v;
  CHECK(wpfx_check(verify.f, &o, &v.r) == WPFX_ERR_SWEEP);
}

}  // TEST_SUITE
