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

#include "odr/engine/data.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(Errc::NonFinite, fmt::format("{} element {} is {}", what, i, values[i]));
    }
  }
}

}  // namespace

Vector::Vector(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_, "vector");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(Errc::LengthMismatch,
                fmt::format("{}x{} matrix needs {} values, got {}", rows_, cols_, rows_ * cols_,
                            data_.size()));
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(Errc::DimensionMismatch,
                  fmt::format("row {} has width {}, expected {}", r, rows[r].size(), cols));
    }
    data.insert(data.end(), rows[r].begin(), rows[r].end());
  }
  return Matrix(rows.size(), cols, std::move(data));
}

Timeseries::Timeseries(Matrix samples) : samples_(std::move(samples)) {
  if (samples_.cols() < 1) throw Error(Errc::DimensionMismatch, "timeseries needs D >= 1 channels");
  require_finite(samples_.data(), "timeseries");
}

Video::Video(std::vector<Image> frames) : frames_(std::move(frames)) {
  if (frames_.empty()) throw Error(Errc::InvalidArgument, "video needs at least one frame");
  const Image& first = frames_.front();
  for (std::size_t i = 1; i < frames_.size(); ++i) {
    const Image& f = frames_[i];
    if (f.width() != first.width() || f.height() != first.height() ||
        f.channels() != first.channels()) {
      throw Error(Errc::DimensionMismatch,
                  fmt::format("frame {} is {}x{}x{}, first frame is {}x{}x{}", i, f.channels(),
                              f.height(), f.width(), first.channels(), first.height(),
                              first.width()));
    }
  }
}

PointCloud::PointCloud(Matrix points) : points_(std::move(points)) {
  if (points_.cols() < 3) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("point cloud needs at least 3 channels, got {}", points_.cols()));
  }
  require_finite(points_.data(), "point cloud");
}

PointCloudWithCalibration::PointCloudWithCalibration(PointCloud cloud,
                                                     std::array<double, 12> projection)
    : cloud_(std::move(cloud)), projection_(projection) {
  require_finite(projection_, "projection");
}

PointCloudWithCalibration::PointCloudWithCalibration(
    PointCloud cloud, const std::vector<std::vector<double>>& projection)
    : cloud_(std::move(cloud)), projection_{} {
  if (projection.size() != 3 ||
      std::any_of(projection.begin(), projection.end(),
                  [](const auto& row) { return row.size() != 4; })) {
    throw Error(Errc::DimensionMismatch, "projection matrix must be 3x4");
  }
  for (std::size_t r = 0; r < 3; ++r) {
    std::copy(projection[r].begin(), projection[r].end(), projection_.begin() + r * 4);
  }
  require_finite(projection_, "projection");
}

}  // namespace odr
