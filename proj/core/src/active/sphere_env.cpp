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

#include "odr/active/sphere_env.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

namespace {
constexpr double kPi = std::numbers::pi;
}

Direction direction_of(double theta, double phi) noexcept {
  return {std::cos(phi) * std::cos(theta), std::cos(phi) * std::sin(theta), std::sin(phi)};
}

double angular_distance(const Direction& a, const Direction& b) noexcept {
  const double cx = a[1] * b[2] - a[2] * b[1];
  const double cy = a[2] * b[0] - a[0] * b[2];
  const double cz = a[0] * b[1] - a[1] * b[0];
  const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

double wrap_azimuth(double theta) noexcept {
  while (theta >= kPi) theta -= 2.0 * kPi;
  while (theta < -kPi) theta += 2.0 * kPi;
  return theta;
}

SphereBearingEnv::SphereBearingEnv(SphereBearingConfig config) : config_(config) {
  if (!(config_.kappa > 0.0) || !std::isfinite(config_.kappa)) {
    throw Error(Errc::InvalidArgument, "kappa must be positive");
  }
  if (!(config_.noise_sigma >= 0.0) || !std::isfinite(config_.noise_sigma)) {
    throw Error(Errc::InvalidArgument, "noise_sigma must be nonnegative");
  }
  if (!(config_.max_step > 0.0) || !std::isfinite(config_.max_step)) {
    throw Error(Errc::InvalidArgument, "max_step must be positive");
  }
  if (config_.max_steps == 0) throw Error(Errc::InvalidArgument, "max_steps must be positive");
}

double SphereBearingEnv::angular_error() const noexcept {
  return angular_distance(direction_of(theta_, phi_), hidden_);
}

double SphereBearingEnv::noiseless_intensity() const noexcept {
  return std::exp(-config_.kappa * angular_error());
}

Observation SphereBearingEnv::observe() {
  double intensity = noiseless_intensity();
  if (config_.noise_sigma > 0.0) intensity += config_.noise_sigma * rng_->normal();
  return {intensity, theta_, phi_};
}

Observation SphereBearingEnv::reset(std::uint64_t seed) {
  rng_.emplace(seed);
  // Uniform on the sphere: uniform height and uniform azimuth.
  const double z = 2.0 * rng_->uniform() - 1.0;
  const double azimuth = 2.0 * kPi * rng_->uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  hidden_ = {r * std::cos(azimuth), r * std::sin(azimuth), z};
  theta_ = 0.0;
  phi_ = 0.0;
  steps_ = 0;
  done_ = false;
  return observe();
}

StepResult SphereBearingEnv::step(const Action& action) {
  if (!rng_) throw Error(Errc::NotReset, "step() called before reset()");
  if (done_) throw Error(Errc::EpisodeDone, "episode finished; call reset()");
  if (action.axes() != kAxes) {
    throw Error(Errc::AxisCountInvalid, fmt::format("environment takes {} axes, got {}", kAxes, action.axes()));
  }
  theta_ = wrap_azimuth(theta_ + action[0] * config_.max_step);
  phi_ = std::clamp(phi_ + action[1] * config_.max_step, -kPi / 2.0, kPi / 2.0);
  ++steps_;
  const Observation obs = observe();
  done_ = steps_ >= config_.max_steps || noiseless_intensity() > kDoneIntensity;
  return {obs, obs.intensity, done_};
}

void SphereBearingEnv::set_hidden_direction(const Direction& direction) {
  const double norm = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                                direction[2] * direction[2]);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw Error(Errc::InvalidArgument, "zero direction");
  hidden_ = {direction[0] / norm, direction[1] / norm, direction[2] / norm};
}

void SphereBearingEnv::set_pose(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw Error(Errc::NonFinite, "pose");
  theta_ = wrap_azimuth(theta);
  phi_ = std::clamp(phi, -kPi / 2.0, kPi / 2.0);
}

}  // namespace odr
