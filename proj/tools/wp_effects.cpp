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

// wp-effects: run programs written in the s-expression language and check
// their postconditions through weakest preconditions.
//
// Exit codes:
//   0  success (for `check`: no contract violation)
//   1  unreadable file, parse or type error, runtime error, unknown
//      postcondition, sweep not applicable, bad usage
//   2  malformed or ill-shaped --env / --state literal
//   3  contract violation: the precondition held but the run broke the
//      postcondition
//   4  with --strict: some case has a failing precondition

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wpfx/wpfx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLiteral = 2;
constexpr int kExitViolation = 3;
constexpr int kExitFailing = 4;

struct FileDeleter {
  void operator()(wpfx_file* f) const { wpfx_file_free(f); }
};
struct ReportDeleter {
  void operator()(wpfx_report* r) const { wpfx_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { wpfx_string_free(s); }
};
using FilePtr = std::unique_ptr<wpfx_file, FileDeleter>;
using ReportPtr = std::unique_ptr<wpfx_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(wpfx_status s) {
  std::cerr << "wp-effects: error: " << wpfx_last_error() << '\n';
  return s == WPFX_ERR_LITERAL ? kExitLiteral : kExitError;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int load(const std::string& path, bool typecheck, FilePtr& file) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "wp-effects: error: cannot read " << path << '\n';
    return kExitError;
  }
  wpfx_file* raw = nullptr;
  wpfx_status s = typecheck ? wpfx_file_load(text.c_str(), &raw) : wpfx_file_parse(text.c_str(), &raw);
  if (s != WPFX_OK) {
    std::istringstream lines(wpfx_last_error());
    for (std::string line; std::getline(lines, line);) {
      std::cerr << "wp-effects: error: " << path << ":" << line << '\n';
    }
    return s == WPFX_ERR_LITERAL ? kExitLiteral : kExitError;
  }
  file.reset(raw);
  return kExitOk;
}

const char* c_str_or_null(const std::string& s, bool given) { return given ? s.c_str() : nullptr; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run effectful programs and check their postconditions via weakest preconditions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("wp-effects ") + wpfx_version());
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string file, env, state, post;
  auto* run = app.add_subcommand("run", "Run the entry program and print its outcome");
  run->add_option("FILE", file, "Program file")->required();
  auto* run_env = run->add_option("--env", env, "Environment literal (rws programs)");
  auto* run_state = run->add_option("--state", state, "Initial state literal (rws programs)");

  int bound = 3, depth = 4;
  std::size_t cap = 1000000;
  bool sweep = false, strict = false;
  auto* check = app.add_subcommand("check", "Check a named postcondition through its weakest precondition");
  check->add_option("FILE", file, "Program file")->required();
  check->add_option("--post", post, "Postcondition name")->required();
  check->add_flag("--sweep", sweep, "Check over the builtin bounded program space instead of the entry");
  check->add_option("--bound", bound, "Sweep value bound")->capture_default_str();
  check->add_option("--depth", depth, "Sweep AST height")->capture_default_str();
  check->add_option("--cap", cap, "Sweep case cap")->capture_default_str();
  check->add_flag("--strict", strict, "Exit 4 when a precondition does not hold");
  auto* check_env = check->add_option("--env", env, "Environment literal (rws programs)");
  auto* check_state = check->add_option("--state", state, "Initial state literal (rws programs)");

  auto* print = app.add_subcommand("print", "Parse a file and print its canonical form");
  print->add_option("FILE", file, "Program file")->required();
  for (auto* sub : {run, check, print}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  const wpfx_format fmt = format == "text" ? WPFX_FORMAT_TEXT : WPFX_FORMAT_JSON;

  FilePtr f;
  if (int rc = load(file, !print->parsed(), f); rc != kExitOk) return rc;

  if (print->parsed()) {
    char* out = nullptr;
    if (wpfx_status s = wpfx_file_print(f.get(), &out); s != WPFX_OK) return report_error(s);
    StringPtr text(out);
    std::cout << text.get();
    return kExitOk;
  }

  if (run->parsed()) {
    char* out = nullptr;
    wpfx_status s = wpfx_run(f.get(), c_str_or_null(env, run_env->count() > 0),
                             c_str_or_null(state, run_state->count() > 0), fmt, &out);
    if (s != WPFX_OK) return report_error(s);
    StringPtr text(out);
    std::cout << text.get();
    return kExitOk;
  }

  wpfx_check_options opts;
  wpfx_check_options_init(&opts);
  opts.post = post.c_str();
  opts.sweep = sweep ? 1 : 0;
  opts.bound = bound;
  opts.depth = depth;
  opts.cap = cap;
  opts.env = c_str_or_null(env, check_env->count() > 0);
  opts.state = c_str_or_null(state, check_state->count() > 0);
  wpfx_report* raw = nullptr;
  if (wpfx_status s = wpfx_check(f.get(), &opts, &raw); s != WPFX_OK) return report_error(s);
  ReportPtr report(raw);
  char* out = nullptr;
  if (wpfx_status s = wpfx_report_render(report.get(), fmt, &out); s != WPFX_OK) return report_error(s);
  StringPtr text(out);
  std::cout << text.get();
  if (wpfx_report_truncated(report.get())) {
    std::cerr << "wp-effects: note: the sweep reached the case cap (" << cap
              << ") and was truncated\n";
  }
  if (wpfx_report_violations(report.get()) > 0) return kExitViolation;
  if (strict && wpfx_report_failing(report.get()) > 0) return kExitFailing;
  return kExitOk;
}
