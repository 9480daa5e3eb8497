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
#include <span>
#include <variant>
#include <vector>

#include "odr/engine/image.hpp"

namespace odr {

/// One-dimensional feature vector. Finite values only.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  bool operator==(const Vector&) const = default;

 private:
  std::vector<double> values_;
};

/// Row-major matrix of doubles with a fixed width; shared by Timeseries and
/// PointCloud.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t r) const noexcept {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// T timesteps of D channels, D >= 1.
class Timeseries {
 public:
  explicit Timeseries(Matrix samples);

  const Matrix& samples() const noexcept { return samples_; }
  std::size_t timesteps() const noexcept { return samples_.rows(); }
  std::size_t channels() const noexcept { return samples_.cols(); }

  bool operator==(const Timeseries&) const = default;

 private:
  Matrix samples_;
};

/// Nonempty sequence of frames with identical dimensions.
class Video {
 public:
  explicit Video(std::vector<Image> frames);

  std::span<const Image> frames() const noexcept { return frames_; }
  std::size_t length() const noexcept { return frames_.size(); }

  bool operator==(const Video&) const = default;

 private:
  std::vector<Image> frames_;
};

/// N points of D >= 3 channels: x, y, z in meters, then optional extras.
class PointCloud {
 public:
  explicit PointCloud(Matrix points);

  const Matrix& points() const noexcept { return points_; }

  bool operator==(const PointCloud&) const = default;

 private:
  Matrix points_;
};

/// Point cloud with a 3 x 4 projection matrix (row-major).
class PointCloudWithCalibration {
 public:
  PointCloudWithCalibration(PointCloud cloud, std::array<double, 12> projection);
  PointCloudWithCalibration(PointCloud cloud, const std::vector<std::vector<double>>& projection);

  const PointCloud& cloud() const noexcept { return cloud_; }
  const std::array<double, 12>& projection() const noexcept { return projection_; }

  bool operator==(const PointCloudWithCalibration&) const = default;

 private:
  PointCloud cloud_;
  std::array<double, 12> projection_;
};

using Data = std::variant<Image, Vector, Timeseries, Video, PointCloud, PointCloudWithCalibration>;

}  // namespace odr
