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

namespace bellsim::tolerance {

/// Allowed |norm^2 - 1| for any state accepted or returned by the library.
inline constexpr double kNormalization = 1e-10;
/// Per-operation budget for unitarity and norm drift.
inline constexpr double kOperation = 1e-12;
/// Outcomes below this probability cannot be projected onto.
inline constexpr double kImpossibleOutcome = 1e-14;

} // namespace bellsim::tolerance
