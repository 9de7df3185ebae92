// Copyright 2026 The wstate Authors
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

#ifndef WSTATE_CLI_HPP
#define WSTATE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wstate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Runs one command line (args excludes the program name) and returns the
/// process exit code: 0 success, 2 invalid input, 3 numerical or capacity failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wstate::cli

#endif  // WSTATE_CLI_HPP
