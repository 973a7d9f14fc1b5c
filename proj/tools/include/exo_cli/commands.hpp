// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXO_CLI_COMMANDS_HPP
#define EXO_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace exo::cli {

enum ExitStatus : int {
  kPass = 0,
  kToleranceFailure = 1,
  kInputError = 2,
};

/// Runs one `exo` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exo::cli

#endif  // EXO_CLI_COMMANDS_HPP
