// Copyright 2026 The odr Authors
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

// Fallbacks used when the executable does not link odr_alloc_hooks.

#include "odr/bench/alloc_tracking.hpp"

namespace odr::alloc_tracking {

__attribute__((weak)) bool available() noexcept { return false; }
__attribute__((weak)) void reset_peak() noexcept {}
__attribute__((weak)) std::uint64_t live_bytes() noexcept { return 0; }
__attribute__((weak)) std::uint64_t peak_bytes() noexcept { return 0; }

}  // namespace odr::alloc_tracking
