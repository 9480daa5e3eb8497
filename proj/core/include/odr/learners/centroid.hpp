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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "odr/learner/learner.hpp"

namespace odr {

/// Nearest-centroid classifier over Vector or Image inputs. Images are
/// flattened to values in [0, 1] before any distance is taken.
///
/// Hyperparameters: temperature (> 0, default 1) scales the softmax used for
/// confidences.
class CentroidLearner final : public Learner {
 public:
  static constexpr std::string_view kName = "centroid";
  static constexpr std::string_view kPayload = "centroids.bin";

  explicit CentroidLearner(const Hyperparams& hp = {});

  std::string_view name() const override { return kName; }

  TrainStats fit(const DatasetIterator& train) override;
  TrainStats eval(const DatasetIterator& dataset) override;
  std::vector<AnyTarget> infer(const Data& data) override;
  void save(const std::filesystem::path& dir) const override;
  void load(const std::filesystem::path& dir) override;
  void optimize() override;
  void reset() override {}
  double optimize_tolerance() const noexcept override { return 1e-12; }

  Category classify(std::span<const double> features) const;

  std::size_t num_classes() const noexcept { return class_names_.size(); }
  std::size_t dimension() const noexcept { return dim_; }
  double temperature() const noexcept { return temperature_; }
  const std::vector<std::string>& class_names() const noexcept { return class_names_; }
  std::span<const double> centroid(std::size_t c) const;

 private:
  void squared_distances(std::span<const double> x, std::vector<double>& out) const;

  double temperature_;
  std::size_t dim_ = 0;
  std::vector<double> centroids_;  // num_classes x dim_, row-major
  std::vector<std::string> class_names_;
  std::vector<double> squared_norms_;  // filled by optimize()
};

/// Serialized centroid matrix: "ODRC", u32 rows, u32 cols, then rows*cols
/// little-endian doubles.
std::vector<std::uint8_t> encode_centroids(std::size_t rows, std::size_t cols,
                                           std::span<const double> values);
std::vector<double> decode_centroids(std::span<const std::uint8_t> bytes, std::size_t& rows,
                                     std::size_t& cols);

}  // namespace odr
