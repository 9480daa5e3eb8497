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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odr/datasets/dataset.hpp"
#include "odr/engine/action.hpp"
#include "odr/engine/data.hpp"
#include "odr/engine/target.hpp"
#include "odr/learner/hyperparams.hpp"
#include "odr/learner/stats.hpp"

namespace odr {

enum class LearnerState { Untrained, Trained, Optimized };

std::string_view to_string(LearnerState state) noexcept;

/// The lifecycle every learner implements.
///
///   Untrained --fit/load--> Trained --optimize--> Optimized
///
/// eval, infer and save require a state other than Untrained and throw
/// NotTrained otherwise. optimize on an Optimized learner is a no-op, and
/// reset only clears inference-time state (recurrent memory and the like);
/// it never forgets trained parameters.
///
/// Learners are single-owner objects: move them between threads freely but
/// never call into one instance concurrently.
class BaseLearner {
 public:
  virtual ~BaseLearner() = default;

  virtual std::string_view name() const = 0;

  virtual TrainStats fit(const DatasetIterator& train) = 0;
  virtual TrainStats eval(const DatasetIterator& dataset) = 0;

  /// Writes a model package into `dir`, which must be empty or absent.
  virtual void save(const std::filesystem::path& dir) const = 0;
  /// Loads a model package; throws the package errors or FormatMismatch.
  virtual void load(const std::filesystem::path& dir) = 0;

  virtual void optimize() = 0;
  virtual void reset() = 0;

  /// Fetches a packaged model (file://, http://, https://) into `cache_dir`
  /// and returns the local package directory; load() it afterwards.
  std::filesystem::path download(std::string_view uri, const std::filesystem::path& cache_dir,
                                 std::optional<std::string> expected_sha256 = std::nullopt) const;

  LearnerState state() const noexcept { return state_; }

  /// Largest relative change optimize() may introduce into infer outputs.
  virtual double optimize_tolerance() const noexcept { return 0.0; }

 protected:
  void set_state(LearnerState state) noexcept { state_ = state; }
  void require_trained(std::string_view operation) const;

 private:
  LearnerState state_ = LearnerState::Untrained;
};

/// A learner with a plain inference call.
class Learner : public BaseLearner {
 public:
  virtual std::vector<AnyTarget> infer(const Data& data) = 0;
};

/// A learner whose inference also proposes the next sensing action. The
/// returned target carries that same action as its suggested_action.
class LearnerActive : public Learner {
 public:
  struct Result {
    AnyTarget target;
    Action action;
  };

  virtual Result infer_active(const Data& data) = 0;

  std::vector<AnyTarget> infer(const Data& data) override { return {infer_active(data).target}; }
};

}  // namespace odr
