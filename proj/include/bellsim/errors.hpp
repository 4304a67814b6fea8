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

#include <stdexcept>

namespace bellsim {

/// Bad qubit index, mismatched dimensions, malformed input values.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Requested register exceeds the simulator's qubit cap.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A projection was requested onto an outcome with (numerically) zero
/// probability.
class ImpossibleOutcomeError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace bellsim
