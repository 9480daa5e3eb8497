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

#include "odr/learner/learner.hpp"

#include <fmt/format.h>

#include "odr/error.hpp"
#include "odr/package/fetch.hpp"

namespace odr {

std::string_view to_string(LearnerState state) noexcept {
  switch (state) {
    case LearnerState::Untrained: return "untrained";
    case LearnerState::Trained: return "trained";
    case LearnerState::Optimized: return "optimized";
  }
  return "unknown";
}

void BaseLearner::require_trained(std::string_view operation) const {
  if (state_ == LearnerState::Untrained) {
    throw Error(Errc::NotTrained,
                fmt::format("{}: {} needs a fitted or loaded model", name(), operation));
  }
}

std::filesystem::path BaseLearner::download(std::string_view uri,
                                            const std::filesystem::path& cache_dir,
                                            std::optional<std::string> expected_sha256) const {
  return package_fetch(uri, cache_dir, std::move(expected_sha256));
}

}  // namespace odr
