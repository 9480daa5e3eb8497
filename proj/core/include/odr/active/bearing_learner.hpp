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
#include <filesystem>
#include <optional>
#include <string_view>

#include "odr/active/environment.hpp"
#include "odr/active/sphere_env.hpp"
#include "odr/learner/learner.hpp"

namespace odr {

/// Signal-seeking agent for 2-axis pose control. It alternates a four-probe
/// cycle (+theta, -theta, +phi, -phi) that estimates the local gradient with a
/// geodesic climb along it, halving its stride whenever a climb lowers the
/// signal. The prediction is the direction of the strongest pose seen so far.
///
/// Input: Vector{intensity, theta, phi} or an Observation.
/// Hyperparameters: probe_step in (0, 1] (default 0.2), max_step > 0 radians per
/// unit action (default pi/18, must match the environment).
///
/// The learner has no trainable parameters and is usable right after
/// construction.
class ActiveBearingLearner final : public LearnerActive {
 public:
  static constexpr std::string_view kName = "active_bearing";
  static constexpr std::string_view kPayload = "active_bearing.json";

  explicit ActiveBearingLearner(const Hyperparams& hp = {});

  std::string_view name() const override { return kName; }

  /// Replays a recorded stream of observations (Vector samples); stats hold
  /// the sample count.
  TrainStats fit(const DatasetIterator& train) override;
  /// Replays observations labelled with Bearing targets from a fresh state and
  /// reports the mean angle between prediction and label.
  TrainStats eval(const DatasetIterator& dataset) override;

  Result infer_active(const Data& data) override;
  Result infer_active(const Observation& obs);

  void save(const std::filesystem::path& dir) const override;
  void load(const std::filesystem::path& dir) override;
  void optimize() override;
  void reset() override;

  double probe_step() const noexcept { return probe_step_; }
  double max_step() const noexcept { return max_step_; }
  Direction estimate() const noexcept;

 private:
  enum class Phase { Probe0, Probe1, Probe2, Probe3, Probe4, Climb, Move, Reclimb };

  std::array<double, 2> toward_goal(const Observation& obs) const;
  bool at_goal(const Observation& obs) const;
  std::optional<std::array<double, 2>> plan_goal() const;
  std::array<double, 2> next_action(const Observation& obs);

  double probe_step_;
  double max_step_;

  Phase phase_ = Phase::Probe0;
  double gain_ = 1.0;
  std::size_t move_steps_ = 0;
  std::optional<Observation> best_;
  std::optional<Observation> previous_base_;
  Observation base_;
  Observation theta_probe_;
  Observation phi_probe_;
  std::array<double, 2> gradient_{0.0, 0.0};
  std::array<double, 2> goal_{0.0, 0.0};
};

}  // namespace odr
