// Copyright 2026 The LexSumm Authors.
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

#ifndef LEXSUMM_TESTS_PROCESS_H_
#define LEXSUMM_TESTS_PROCESS_H_

#include <sys/wait.h>

#include <cstdio>
#include <initializer_list>
#include <string>
#include <vector>

namespace lexsumm::testing {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

// POSIX single-quoting.
inline std::string ShellQuote(const std::string &arg) {
  std::string quoted = "'";
  for (char c : arg) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  return quoted + "'";
}

// Runs the CLI with `args`, capturing stdout. Stderr is discarded.
inline ProcessResult RunCliArgs(const std::vector<std::string> &args) {
  std::string command = ShellQuote(LEXSUMM_CLI_PATH);
  for (const auto &arg : args) command += " " + ShellQuote(arg);
  command += " 2>/dev/null";
  ProcessResult result;
  FILE *pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  size_t n;
  while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline ProcessResult RunCli(std::initializer_list<std::string> args) {
  return RunCliArgs(std::vector<std::string>(args));
}

}  // namespace lexsumm::testing

#endif  // LEXSUMM_TESTS_PROCESS_H_
