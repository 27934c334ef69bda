// Copyright 2026 The rydcz Authors
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

#include <stdexcept>
#include <string>

namespace rydcz {

/// Malformed or inconsistent configuration file / constants override.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad command-line usage (unknown flag, empty sweep range, ...).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Precondition and invariant violations inside the library are reported as
// std::invalid_argument.

}  // namespace rydcz
