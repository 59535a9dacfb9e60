// Copyright 2026 The Rabin OT Toolkit Authors
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

#ifndef RABIN_OT_CLI_APP_H
#define RABIN_OT_CLI_APP_H

#include <ostream>
#include <string>
#include <vector>

namespace rabin_ot::cli {

enum ExitCode { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs the command line (without the program name). Subcommands: curves,
/// tradeoff, simulate, verify, replay. Returns 0 on success, 1 when a
/// verification or PASS/FAIL check fails, 2 on usage or I/O errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rabin_ot::cli

#endif
