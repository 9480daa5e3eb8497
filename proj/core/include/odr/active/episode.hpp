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

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "odr/active/sphere_env.hpp"
#include "odr/learner/learner.hpp"

namespace odr {

struct EpisodeStep {
  std::size_t step = 0;
  double theta = 0.0;  // pose after the action
  double phi = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double intensity = 0.0;      // observed after the action
  double angular_error = 0.0;  // sensor direction vs source, after the action
  double estimate_error = 0.0; // learner prediction vs source, before the action
};

struct EpisodeTrace {
  std::uint64_t seed = 0;
  Direction hidden_direction{};
  std::vector<EpisodeStep> steps;

  double final_angular_error() const;
};

/// Resets both sides, then loops observe -> infer_active -> step until the
/// environment reports done or `max_steps` actions were taken.
EpisodeTrace run_episode(SphereBearingEnv& env, LearnerActive& learner, std::size_t max_steps,
                         std::uint64_t seed);

/// One JSON object per line: step, theta, phi, a1, a2, intensity, angular_error.
void write_trace_jsonl(const EpisodeTrace& trace, std::ostream& out);
std::string trace_to_jsonl(const EpisodeTrace& trace);

}  // namespace odr
