// Copyright 2026 The ggt Authors
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

#ifndef GGT_TOOLS_CLI_HPP_
#define GGT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ggt::cli {

enum ExitCode : int { kPass = 0, kAuditFailure = 1, kUsageError = 2 };

// Runs one invocation; args excludes the program name. Artifacts go to the
// --out file, or to `out` when --out is absent (the summary then goes to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ggt::cli

#endif  // GGT_TOOLS_CLI_HPP_
