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

// Runs the command-line tool against the corpus manifest. Shared by the
// command-line tests and the acceptance binary.
#pragma once

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

struct Result {
  int exit = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs `exe args...` in `cwd`, capturing both streams through temporary files.
inline Result run(const std::string& exe, const std::vector<std::string>& args, const std::filesystem::path& cwd) {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path base = fs::temp_directory_path() /
                  ("wpfx-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::path out_path = base.string() + ".out", err_path = base.string() + ".err";

  pid_t pid = ::fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    int out = ::open(out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    int err = ::open(err_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (out < 0 || err < 0 || ::chdir(cwd.c_str()) != 0) ::_exit(127);
    ::dup2(out, STDOUT_FILENO);
    ::dup2(err, STDERR_FILENO);
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>(exe.c_str()));
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    ::execv(exe.c_str(), argv.data());
    ::_exit(127);
  }
  int status = 0;
  ::waitpid(pid, &status, 0);
  Result r;
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  fs::remove(out_path);
  fs::remove(err_path);
  return r;
}

struct Case {
  std::string name;
  std::vector<std::string> args;
  int exit = 0;
  std::string stdout_golden;  // empty: not compared
  std::string stderr_part;    // empty: not checked
};

inline std::vector<Case> manifest(const std::filesystem::path& corpus) {
  auto j = nlohmann::json::parse(slurp(corpus / "cases.json"));
  std::vector<Case> out;
  for (const auto& c : j.at("cases")) {
    Case k;
    k.name = c.at("name").get<std::string>();
    k.args = c.at("args").get<std::vector<std::string>>();
    k.exit = c.at("exit").get<int>();
    if (c.contains("stdout")) k.stdout_golden = c["stdout"].get<std::string>();
    if (c.contains("stderr")) k.stderr_part = c["stderr"].get<std::string>();
    out.push_back(std::move(k));
  }
  return out;
}

// Empty when the case behaves as recorded, else a description of the mismatch.
inline std::string check_case(const std::string& exe, const std::filesystem::path& corpus, const Case& c) {
  Result r = run(exe, c.args, corpus);
  std::ostringstream why;
  if (r.exit != c.exit) why << "exit " << r.exit << ", expected " << c.exit << "; stderr: " << r.err;
  if (!c.stdout_golden.empty() && r.out != slurp(corpus / c.stdout_golden)) {
    why << "stdout differs from " << c.stdout_golden << ":\n" << r.out;
  }
  if (!c.stderr_part.empty() && r.err.find(c.stderr_part) == std::string::npos) {
    why << "stderr lacks \"" << c.stderr_part << "\": " << r.err;
  }
  return why.str();
}

// Prints every top-level .wpx of the corpus with the tool, then prints that
// output again; empty when every file reaches a fixpoint.
inline std::string check_print_round_trips(const std::string& exe, const std::filesystem::path& corpus,
                                           std::size_t* files = nullptr) {
  namespace fs = std::filesystem;
  std::ostringstream why;
  std::size_t n = 0;
  fs::path tmp = fs::temp_directory_path() / ("wpfx-print-" + std::to_string(::getpid()) + ".wpx");
  for (const auto& e : fs::directory_iterator(corpus)) {
    if (e.path().extension() != ".wpx") continue;
    Result first = run(exe, {"print", e.path().filename().string()}, corpus);
    if (first.exit != 0) {
      why << e.path().filename().string() << ": print failed: " << first.err;
      continue;
    }
    {
      std::ofstream o(tmp, std::ios::binary);
      o << first.out;
    }
    Result second = run(exe, {"print", tmp.string()}, corpus);
    if (second.exit != 0 || second.out != first.out) {
      why << e.path().filename().string() << ": printed text does not reprint identically\n";
    }
    ++n;
  }
  fs::remove(tmp);
  if (files) *files = n;
  return why.str();
}

}  // namespace cli
