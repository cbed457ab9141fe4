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

#include <string>

#include "cli_runner.hpp"
#include "doctest.h"

namespace {

const std::string kExe = WPFX_CLI;
const std::filesystem::path kCorpus = WPFX_CORPUS_DIR;

}  // namespace

TEST_SUITE("command line") {

TEST_CASE("every manifest case behaves as recorded") {
  auto cases = cli::manifest(kCorpus);
  REQUIRE(cases.size() >= 40);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    std::string why = cli::check_case(kExe, kCorpus, c);
    CHECK_MESSAGE(why.empty(), why);
  }
}

TEST_CASE("printed programs reprint identically") {
  std::size_t files = 0;
  std::string why = cli::check_print_round_trips(kExe, kCorpus, &files);
  CHECK_MESSAGE(why.empty(), why);
  CHECK(files >= 10);
}

TEST_CASE("help and version") {
  auto help = cli::run(kExe, {"--help"}, kCorpus);
  CHECK(help.exit == 0);
  CHECK(help.out.find("check") != std::string::npos);
  auto version = cli::run(kExe, {"--version"}, kCorpus);
  CHECK(version.exit == 0);
  CHECK_FALSE(version.out.empty());
}

}  // TEST_SUITE
