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

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>

#include "odr/active/environment.hpp"
#include "odr/rng.hpp"

namespace odr {

using Direction = std::array<double, 3>;

/// Unit vector for azimuth theta and elevation phi.
Direction direction_of(double theta, double phi) noexcept;

/// Angle between two unit vectors, robust near 0 and pi.
double angular_distance(const Direction& a, const Direction& b) noexcept;

/// Brings theta back into [-pi, pi) after a bounded move.
double wrap_azimuth(double theta) noexcept;

struct SphereBearingConfig {
  double kappa = 1.0;
  double noise_sigma = 0.0;
  double max_step = std::numbers::pi / 18.0;
  std::size_t max_steps = 200;
};

/// A sensor on the unit sphere looking for a hidden source direction. The
/// signal decays as exp(-kappa * angle) and carries optional Gaussian noise
/// drawn from the seeded generator. Actions are 2-axis: azimuth, elevation.
class SphereBearingEnv final : public Environment {
 public:
  static constexpr std::size_t kAxes = 2;
  static constexpr double kDoneIntensity = 0.999;

  explicit SphereBearingEnv(SphereBearingConfig config = {});

  Observation reset(std::uint64_t seed) override;
  StepResult step(const Action& action) override;

  const SphereBearingConfig& config() const noexcept { return config_; }
  const Direction& hidden_direction() const noexcept { return hidden_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  std::size_t step_count() const noexcept { return steps_; }
  bool done() const noexcept { return done_; }

  /// Angle between the current sensor direction and the source.
  double angular_error() const noexcept;
  double noiseless_intensity() const noexcept;

  /// Test hooks: place the source or the sensor directly.
  void set_hidden_direction(const Direction& direction);
  void set_pose(double theta, double phi);

 private:
  Observation observe();

  SphereBearingConfig config_;
  std::optional<Rng> rng_;
  Direction hidden_{1.0, 0.0, 0.0};
  double theta_ = 0.0;
  double phi_ = 0.0;
  std::size_t steps_ = 0;
  bool done_ = false;
};

}  // namespace odr
