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

#include "typdl/deadline.hpp"

#include <atomic>

namespace typdl {

namespace {

using Clock = std::chrono::steady_clock;

std::atomic<bool> g_armed{false};
std::atomic<Clock::rep> g_when{0};

}  // namespace

void set_deadline(std::optional<Clock::time_point> when) {
  if (when) {
    g_when.store(when->time_since_epoch().count(), std::memory_order_relaxed);
    g_armed.store(true, std::memory_order_release);
  } else {
    g_armed.store(false, std::memory_order_release);
  }
}

void check_deadline() {
  if (!g_armed.load(std::memory_order_acquire)) return;
  if (Clock::now().time_since_epoch().count() >= g_when.load(std::memory_order_relaxed)) throw TimeoutError();
}

}  // namespace typdl
