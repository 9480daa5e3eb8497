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

#include "odr/engine/action.hpp"

namespace odr {

/// What an active agent perceives after each move: a scalar signal strength
/// and the sensor pose (azimuth theta, elevation phi, radians).
struct Observation {
  double intensity = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  bool operator==(const Observation&) const = default;
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool done = false;
};

/// Gym-style episodic environment. step() before reset() throws NotReset;
/// step() after an episode ended throws EpisodeDone until the next reset().
class Environment {
 public:
  virtual ~Environment() = default;

  virtual Observation reset(std::uint64_t seed) = 0;
  virtual StepResult step(const Action& action) = 0;
};

}  // namespace odr
