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

#include "wpfx/wpfx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "wpfx/dsl/compile.hpp"
#include "wpfx/dsl/driver.hpp"

struct wpfx_file {
  wpfx::dsl::ProgramFile parsed;
  std::optional<wpfx::dsl::CheckedFile> checked;
};

struct wpfx_report {
  wpfx::dsl::CheckResult result;
};

namespace {

thread_local std::string g_last_error;

wpfx_status fail(wpfx_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::optional<std::string> opt(const char* s) {
  if (!s) return std::nullopt;
  return std::string(s);
}

// Maps library exceptions to status codes. Order matters: the most derived
// classes come first.
template <class F>
wpfx_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return WPFX_OK;
  } catch (const wpfx::dsl::ParseError& e) {
    return fail(WPFX_ERR_PARSE, e.what());
  } catch (const wpfx::dsl::CheckError& e) {
    return fail(WPFX_ERR_TYPE, e.what());
  } catch (const wpfx::dsl::LiteralError& e) {
    return fail(WPFX_ERR_LITERAL, e.what());
  } catch (const wpfx::dsl::UnknownPostError& e) {
    return fail(WPFX_ERR_UNKNOWN_POST, e.what());
  } catch (const wpfx::dsl::SweepError& e) {
    return fail(WPFX_ERR_SWEEP, e.what());
  } catch (const wpfx::Error& e) {
    return fail(WPFX_ERR_RUNTIME, e.what());
  } catch (const std::exception& e) {
    return fail(WPFX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WPFX_ERR_INTERNAL, "unknown failure");
  }
}

std::string render(const wpfx::dsl::Json& j) { return j.dump() + "\n"; }

}  // namespace

extern "C" {

const char* wpfx_version(void) { return "0.1.0"; }

const char* wpfx_last_error(void) { return g_last_error.c_str(); }

void wpfx_string_free(char* s) { std::free(s); }

wpfx_status wpfx_file_parse(const char* text, wpfx_file** out) {
  if (!text || !out) return fail(WPFX_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new wpfx_file{wpfx::dsl::parse(text), std::nullopt}; });
}

wpfx_status wpfx_file_load(const char* text, wpfx_file** out) {
  if (!text || !out) return fail(WPFX_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto parsed = wpfx::dsl::parse(text);
    auto checked = wpfx::dsl::check(parsed);
    *out = new wpfx_file{std::move(parsed), std::move(checked)};
  });
}

void wpfx_file_free(wpfx_file* f) { delete f; }

wpfx_status wpfx_file_print(const wpfx_file* f, char** out) {
  if (!f || !out) return fail(WPFX_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(wpfx::dsl::print(f->parsed)); });
}

int wpfx_file_kind(const wpfx_file* f) {
  if (!f) return -1;
  return f->parsed.kind == wpfx::dsl::EffectKind::Either ? 0 : 1;
}

wpfx_status wpfx_run(const wpfx_file* f, const char* env, const char* state, wpfx_format format,
                     char** out) {
  if (!f || !out) return fail(WPFX_ERR_ARGUMENT, "null argument");
  if (!f->checked) return fail(WPFX_ERR_ARGUMENT, "file was parsed but not type-checked");
  return guarded([&] {
    auto r = wpfx::dsl::run_file(*f->checked, opt(env), opt(state));
    *out = dup(format == WPFX_FORMAT_TEXT ? wpfx::dsl::to_text(r) : render(wpfx::dsl::to_json(r)));
  });
}

void wpfx_check_options_init(wpfx_check_options* opts) {
  if (!opts) return;
  *opts = wpfx_check_options{nullptr, 0, 3, 4, nullptr, nullptr, 1000000};
}

wpfx_status wpfx_check(const wpfx_file* f, const wpfx_check_options* opts, wpfx_report** out) {
  if (!f || !opts || !out || !opts->post) return fail(WPFX_ERR_ARGUMENT, "null argument");
  if (!f->checked) return fail(WPFX_ERR_ARGUMENT, "file was parsed but not type-checked");
  *out = nullptr;
  return guarded([&] {
    wpfx::dsl::CheckOptions o;
    o.post = opts->post;
    o.sweep = opts->sweep != 0;
    o.bound = opts->bound;
    o.depth = opts->depth;
    o.env = opt(opts->env);
    o.state = opt(opts->state);
    o.cap = opts->cap ? opts->cap : 1000000;
    *out = new wpfx_report{wpfx::dsl::check_file(*f->checked, o)};
  });
}

void wpfx_report_free(wpfx_report* r) { delete r; }

size_t wpfx_report_cases(const wpfx_report* r) { return r ? r->result.cases : 0; }
size_t wpfx_report_violations(const wpfx_report* r) { return r ? r->result.violations : 0; }
size_t wpfx_report_failing(const wpfx_report* r) { return r ? r->result.failing : 0; }
int wpfx_report_truncated(const wpfx_report* r) { return r && r->result.truncated ? 1 : 0; }

wpfx_status wpfx_report_render(const wpfx_report* r, wpfx_format format, char** out) {
  if (!r || !out) return fail(WPFX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(format == WPFX_FORMAT_TEXT ? wpfx::dsl::to_text(r->result)
                                          : render(wpfx::dsl::to_json(r->result)));
  });
}

}  // extern "C"
