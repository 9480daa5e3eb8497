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
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "odr/learner/learner.hpp"

namespace odr {

/// Streaming anomaly detector over Vector inputs. Each sample is compared
/// against an exponentially weighted running mean using the max-norm; the
/// mean is updated after the verdict.
///
/// Hyperparameters: alpha in (0, 1] (default 0.5), threshold > 0 (default 2).
/// fit() fixes the input dimension; infer() before fit() or load() throws
/// NotTrained.
class EwmaLearner final : public Learner {
 public:
  static constexpr std::string_view kName = "ewma";
  static constexpr std::string_view kPayload = "ewma.json";
  static constexpr std::int64_t kNormal = 0;
  static constexpr std::int64_t kAnomaly = 1;

  explicit EwmaLearner(const Hyperparams& hp = {});

  std::string_view name() const override { return kName; }

  TrainStats fit(const DatasetIterator& train) override;
  TrainStats eval(const DatasetIterator& dataset) override;
  std::vector<AnyTarget> infer(const Data& data) override;
  void save(const std::filesystem::path& dir) const override;
  void load(const std::filesystem::path& dir) override;
  void optimize() override;
  void reset() override { mean_.reset(); }

  double alpha() const noexcept { return alpha_; }
  double threshold() const noexcept { return threshold_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::optional<std::vector<double>>& mean() const noexcept { return mean_; }

 private:
  struct Verdict {
    Category label;
    double deviation;
  };
  Verdict step(std::optional<std::vector<double>>& mean, std::span<const double> x) const;
  std::vector<double> input(const Data& data) const;

  double alpha_;
  double threshold_;
  std::size_t dim_ = 0;
  std::optional<std::vector<double>> mean_;
};

}  // namespace odr
