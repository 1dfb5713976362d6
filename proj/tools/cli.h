// Copyright 2026 The Impulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPULSE_TOOLS_CLI_H_
#define IMPULSE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace impulse::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIo = 3,
  kBadImage = 4,
  kBadSpec = 5,
  kUnrestorable = 6,
  kFullyNoise = 7,
};

// Runs one invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace impulse::cli

#endif  // IMPULSE_TOOLS_CLI_H_
