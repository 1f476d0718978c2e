// Copyright 2026 The bhg Authors.
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

#ifndef BHG_CLI_APP_HPP
#define BHG_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bhg::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsage = 2,
  kGuardExceeded = 3,
  kInternalBound = 4,
};

// Runs the bhg command line. args excludes the program name. Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bhg::cli

#endif  // BHG_CLI_APP_HPP
