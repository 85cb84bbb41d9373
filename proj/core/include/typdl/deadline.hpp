// Copyright 2026 The typdl Authors. All Rights Reserved.
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

#ifndef TYPDL_DEADLINE_HPP
#define TYPDL_DEADLINE_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

namespace typdl {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("timeout") {}
};

/// Process-wide deadline polled by the long-running searches (tableau,
/// model enumeration). Unset means no limit.
void set_deadline(std::optional<std::chrono::steady_clock::time_point> when);

/// Throws TimeoutError once the deadline has passed.
void check_deadline();

}  // namespace typdl

#endif  // TYPDL_DEADLINE_HPP
