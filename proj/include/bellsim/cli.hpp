// Copyright 2026 The bellsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <span>
#include <string>

namespace bellsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Runs one command line. `args` excludes the program name. Nothing is
/// written to the process streams; the caller forwards out/err.
CliResult execute(std::span<const std::string> args);

} // namespace bellsim::cli
