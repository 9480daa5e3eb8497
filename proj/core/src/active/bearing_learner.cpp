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

#include "odr/active/bearing_learner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "json.hpp"
#include "odr/error.hpp"
#include "odr/package/package.hpp"

namespace odr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoalTolerance = 1e-12;
constexpr double kPoleCos = 1e-9;

double clip_unit(double v) { return std::clamp(v, -1.0, 1.0); }

Observation observation_from(const Data& data) {
  const auto* v = std::get_if<Vector>(&data);
  if (v == nullptr || v->size() != 3) {
    throw Error(Errc::InvalidArgument, "expected Vector{intensity, theta, phi}");
  }
  return {(*v)[0], (*v)[1], (*v)[2]};
}

void check_params(double probe_step, double max_step, Errc code) {
  if (!(probe_step > 0.0 && probe_step <= 1.0)) {
    throw Error(code, fmt::format("probe_step must be in (0, 1], got {}", probe_step));
  }
  if (!(max_step > 0.0) || !std::isfinite(max_step)) {
    throw Error(code, fmt::format("max_step must be positive, got {}", max_step));
  }
}

}  // namespace

ActiveBearingLearner::ActiveBearingLearner(const Hyperparams& hp) {
  hp.require_known({"probe_step", "max_step"}, kName);
  probe_step_ = hp.number("probe_step", 0.2);
  max_step_ = hp.number("max_step", kPi / 18.0);
  check_params(probe_step_, max_step_, Errc::BadHyperparam);
  set_state(LearnerState::Trained);
}

void ActiveBearingLearner::reset() {
  phase_ = Phase::Probe0;
  gain_ = 1.0;
  move_steps_ = 0;
  best_.reset();
  previous_base_.reset();
}

Direction ActiveBearingLearner::estimate() const noexcept {
  return best_ ? direction_of(best_->theta, best_->phi) : direction_of(0.0, 0.0);
}

std::array<double, 2> ActiveBearingLearner::toward_goal(const Observation& obs) const {
  return {clip_unit(wrap_azimuth(goal_[0] - obs.theta) / max_step_),
          clip_unit((goal_[1] - obs.phi) / max_step_)};
}

bool ActiveBearingLearner::at_goal(const Observation& obs) const {
  return std::abs(wrap_azimuth(goal_[0] - obs.theta)) < kGoalTolerance &&
         std::abs(goal_[1] - obs.phi) < kGoalTolerance;
}

// Moves along the great circle from the base pose in the gradient direction by
// gain * max_step radians. Returns nothing for a zero gradient.
std::optional<std::array<double, 2>> ActiveBearingLearner::plan_goal() const {
  const double theta = base_.theta;
  const double phi = base_.phi;
  const double cos_phi = std::cos(phi);
  // The azimuth derivative per radian of arc grows as 1/cos(phi).
  const double g_theta = cos_phi > kPoleCos ? gradient_[0] / cos_phi : 0.0;
  const double g_phi = gradient_[1];
  const double norm = std::hypot(g_theta, g_phi);
  if (norm == 0.0 || !std::isfinite(norm)) return std::nullopt;

  const Direction e_theta{-std::sin(theta), std::cos(theta), 0.0};
  const Direction e_phi{-std::sin(phi) * std::cos(theta), -std::sin(phi) * std::sin(theta), cos_phi};
  const Direction here = direction_of(theta, phi);
  const double arc = gain_ * max_step_;
  Direction goal{};
  for (int i = 0; i < 3; ++i) {
    const double tangent = (g_theta * e_theta[i] + g_phi * e_phi[i]) / norm;
    goal[i] = std::cos(arc) * here[i] + std::sin(arc) * tangent;
  }
  double goal_theta = std::atan2(goal[1], goal[0]);
  const double goal_phi = std::asin(std::clamp(goal[2], -1.0, 1.0));
  if (std::abs(std::abs(goal_phi) - kPi / 2.0) < kGoalTolerance) goal_theta = theta;
  return std::array<double, 2>{goal_theta, goal_phi};
}

std::array<double, 2> ActiveBearingLearner::next_action(const Observation& obs) {
  // Bound on steps any planned move can need; beyond it the move is abandoned.
  const auto move_limit = static_cast<std::size_t>(std::ceil(2.0 * kPi / max_step_)) + 4;
  for (;;) {
    switch (phase_) {
      case Phase::Move:
        if (!at_goal(obs) && ++move_steps_ <= move_limit) return toward_goal(obs);
        phase_ = Phase::Probe0;
        break;
      case Phase::Probe0:
        if (previous_base_ && obs.intensity < previous_base_->intensity) {
          // The last climb overshot: go back and retry with half the stride.
          gain_ *= 0.5;
          goal_ = {previous_base_->theta, previous_base_->phi};
          move_steps_ = 0;
          phase_ = Phase::Reclimb;
          break;
        }
        base_ = obs;
        phase_ = Phase::Probe1;
        return {probe_step_, 0.0};
      case Phase::Reclimb:
        if (!at_goal(obs) && ++move_steps_ <= move_limit) return toward_goal(obs);
        base_ = obs;
        phase_ = Phase::Climb;
        break;
      case Phase::Probe1:
        theta_probe_ = obs;
        phase_ = Phase::Probe2;
        return {-probe_step_, 0.0};
      case Phase::Probe2:
        phase_ = Phase::Probe3;
        return {0.0, probe_step_};
      case Phase::Probe3:
        phi_probe_ = obs;
        phase_ = Phase::Probe4;
        return {0.0, -probe_step_};
      case Phase::Probe4: {
        const double d_theta = wrap_azimuth(theta_probe_.theta - base_.theta);
        const double d_phi = phi_probe_.phi - base_.phi;
        gradient_[0] = d_theta != 0.0 ? (theta_probe_.intensity - base_.intensity) / d_theta : 0.0;
        gradient_[1] = d_phi != 0.0 ? (phi_probe_.intensity - base_.intensity) / d_phi : 0.0;
        phase_ = Phase::Climb;
        break;
      }
      case Phase::Climb: {
        previous_base_ = base_;
        const auto goal = plan_goal();
        if (!goal) {
          phase_ = Phase::Probe0;
          return {0.0, 0.0};
        }
        goal_ = *goal;
        move_steps_ = 0;
        phase_ = Phase::Move;
        ++move_steps_;
        return toward_goal(obs);
      }
    }
  }
}

LearnerActive::Result ActiveBearingLearner::infer_active(const Observation& obs) {
  if (!std::isfinite(obs.intensity) || !std::isfinite(obs.theta) || !std::isfinite(obs.phi)) {
    throw Error(Errc::NonFinite, "observation");
  }
  if (!best_ || obs.intensity > best_->intensity) best_ = obs;
  const auto values = next_action(obs);
  Action action = Action::validate(values);
  return {Bearing(estimate(), std::nullopt, action), std::move(action)};
}

LearnerActive::Result ActiveBearingLearner::infer_active(const Data& data) {
  return infer_active(observation_from(data));
}

TrainStats ActiveBearingLearner::fit(const DatasetIterator& train) {
  if (train.size() == 0) throw Error(Errc::EmptyDataset, "active_bearing fit");
  reset();
  for (std::size_t i = 0; i < train.size(); ++i) infer_active(train.get(i).data);
  reset();
  return {{"n", static_cast<double>(train.size())}};
}

TrainStats ActiveBearingLearner::eval(const DatasetIterator& dataset) {
  if (dataset.size() == 0) throw Error(Errc::EmptyDataset, "active_bearing eval");
  ActiveBearingLearner replay(*this);
  replay.reset();
  double total = 0.0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const Sample s = dataset.get(i);
    const Bearing* label = nullptr;
    for (const auto& t : s.targets) {
      if ((label = std::get_if<Bearing>(&t)) != nullptr) break;
    }
    if (label == nullptr) throw Error(Errc::InvalidArgument, "sample has no Bearing target");
    const auto result = replay.infer_active(s.data);
    total += angular_distance(std::get<Bearing>(result.target).direction, label->direction);
  }
  const auto n = static_cast<double>(dataset.size());
  return {{"mean_angular_error", total / n}, {"n", n}};
}

void ActiveBearingLearner::optimize() {
  set_state(LearnerState::Optimized);
}

void ActiveBearingLearner::save(const std::filesystem::path& dir) const {
  nlohmann::ordered_json payload = {{"probe_step", probe_step_}, {"max_step", max_step_}};
  const std::string text = payload.dump(2) + "\n";
  Manifest m;
  m.name = std::string(kName);
  m.model_format = ModelFormat::Native;
  m.model_paths = {std::string(kPayload)};
  m.optimized = state() == LearnerState::Optimized;
  m.inference_params = {{"probe_step", probe_step_}, {"max_step", max_step_}};
  m.metadata = {{"learner", std::string(kName)}};
  package_write(std::move(m),
                {{std::string(kPayload), std::vector<std::uint8_t>(text.begin(), text.end())}}, dir);
}

void ActiveBearingLearner::load(const std::filesystem::path& dir) {
  const ModelPackage pkg = package_open(dir);
  const Manifest& m = pkg.manifest;
  const auto learner = m.metadata.find("learner");
  if (m.model_format != ModelFormat::Native || learner == m.metadata.end() ||
      learner->second != kName ||
      std::find(m.model_paths.begin(), m.model_paths.end(), kPayload) == m.model_paths.end()) {
    throw Error(Errc::FormatMismatch, "package was not written by the active_bearing learner");
  }
  const auto bytes = pkg.read_payload(kPayload);
  double probe = 0.0;
  double step = 0.0;
  try {
    const auto j = nlohmann::json::parse(bytes.begin(), bytes.end());
    probe = j.at("probe_step").get<double>();
    step = j.at("max_step").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::FormatMismatch, fmt::format("{}: {}", kPayload, e.what()));
  }
  check_params(probe, step, Errc::FormatMismatch);
  probe_step_ = probe;
  max_step_ = step;
  reset();
  set_state(m.optimized ? LearnerState::Optimized : LearnerState::Trained);
}

}  // namespace odr
