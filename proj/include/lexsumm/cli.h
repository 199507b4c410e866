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

#ifndef LEXSUMM_CLI_H_
#define LEXSUMM_CLI_H_

namespace lexsumm {

// Entry point of the `lexsumm` command-line tool. Returns the exit status;
// errors are reported on stderr.
int RunCli(int argc, char **argv);

}  // namespace lexsumm

#endif  // LEXSUMM_CLI_H_
