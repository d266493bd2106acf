// Copyright 2026 The picode Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace picode::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUnexpected = 1,
  kValidationFailure = 2,
  kCheckFailure = 3,
  kIoFailure = 4,
};

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// or to the --out file; on failure the last line written to `err` is
/// "error: <Kind>: <detail>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace picode::cli
