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

#pragma once

#include <cstdint>

namespace odr {

/// Heap accounting provided when the odr_alloc_hooks object library is linked
/// into the executable; otherwise available() is false and the rest are no-ops.
namespace alloc_tracking {

bool available() noexcept;
/// Resets the high-water mark to the current live heap size.
void reset_peak() noexcept;
std::uint64_t live_bytes() noexcept;
std::uint64_t peak_bytes() noexcept;

}  // namespace alloc_tracking
}  // namespace odr
