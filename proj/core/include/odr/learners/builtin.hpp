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

#include "odr/learner/registry.hpp"

namespace odr {

/// Adds "centroid", "ewma" and "active_bearing" to `registry`.
void register_builtin_learners(LearnerRegistry& registry);

/// Process-wide registry with the built-in learners already registered.
LearnerRegistry& default_registry();

}  // namespace odr
