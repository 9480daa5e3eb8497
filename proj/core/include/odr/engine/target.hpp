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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odr/engine/action.hpp"

namespace odr {

/// Root of every prediction and annotation type.
struct BaseTarget {
  bool operator==(const BaseTarget&) const = default;
};

/// A target that can also be a model output: optional confidence in [0, 1]
/// and an optional suggested next Action for active perception.
struct Target : BaseTarget {
  std::optional<double> confidence;
  std::optional<Action> suggested_action;

  Target() = default;
  explicit Target(std::optional<double> confidence, std::optional<Action> action = std::nullopt);

  bool operator==(const Target&) const = default;
};

struct Category : Target {
  std::int64_t index = 0;
  std::optional<std::string> description;

  Category() = default;
  explicit Category(std::int64_t index, std::optional<std::string> description = std::nullopt,
                    std::optional<double> confidence = std::nullopt,
                    std::optional<Action> action = std::nullopt);

  bool operator==(const Category&) const = default;
};

/// Axis-aligned box: top-left corner (x, y) and extent (w, h) in pixels.
struct BoundingBox : Target {
  Category category;
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  BoundingBox() = default;
  BoundingBox(Category category, double x, double y, double w, double h,
              std::optional<double> confidence = std::nullopt,
              std::optional<Action> action = std::nullopt);

  bool operator==(const BoundingBox&) const = default;
};

/// Oriented 3D box: center and size (l, w, h) in meters, yaw in (-pi, pi].
struct BoundingBox3D : Target {
  Category category;
  std::array<double, 3> center{};
  std::array<double, 3> size{};
  double yaw = 0.0;

  BoundingBox3D() = default;
  BoundingBox3D(Category category, std::array<double, 3> center, std::array<double, 3> size,
                double yaw, std::optional<double> confidence = std::nullopt,
                std::optional<Action> action = std::nullopt);

  bool operator==(const BoundingBox3D&) const = default;
};

struct Keypoint {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Keypoint&) const = default;
};

/// Keypoint skeleton. Absent keypoints hold the sentinel (-1, -1); every other
/// keypoint has nonnegative coordinates.
struct Pose : Target {
  static constexpr Keypoint kAbsent{-1.0, -1.0};

  std::vector<Keypoint> keypoints;

  Pose() = default;
  explicit Pose(std::vector<Keypoint> keypoints, std::optional<double> confidence = std::nullopt,
                std::optional<Action> action = std::nullopt);

  bool present(std::size_t i) const noexcept { return !(keypoints[i] == kAbsent); }

  bool operator==(const Pose&) const = default;
};

/// Dense class map, row-major, every id below num_classes.
struct Heatmap : Target {
  std::size_t height = 0;
  std::size_t width = 0;
  std::uint32_t num_classes = 0;
  std::vector<std::uint32_t> class_map;

  Heatmap() = default;
  Heatmap(std::size_t height, std::size_t width, std::uint32_t num_classes,
          std::vector<std::uint32_t> class_map, std::optional<double> confidence = std::nullopt,
          std::optional<Action> action = std::nullopt);

  std::uint32_t at(std::size_t y, std::size_t x) const noexcept { return class_map[y * width + x]; }

  bool operator==(const Heatmap&) const = default;
};

/// A recognized spoken command; the description is mandatory.
struct SpeechCommand : Target {
  Category command;

  SpeechCommand() = default;
  explicit SpeechCommand(Category command, std::optional<double> confidence = std::nullopt,
                         std::optional<Action> action = std::nullopt);

  bool operator==(const SpeechCommand&) const = default;
};

/// Estimated bearing to a source: a unit 3-vector.
struct Bearing : Target {
  std::array<double, 3> direction{1.0, 0.0, 0.0};

  Bearing() = default;
  explicit Bearing(std::array<double, 3> direction, std::optional<double> confidence = std::nullopt,
                   std::optional<Action> action = std::nullopt);

  bool operator==(const Bearing&) const = default;
};

using AnyTarget =
    std::variant<Category, BoundingBox, BoundingBox3D, Pose, Heatmap, SpeechCommand, Bearing>;

/// Access the shared Target part of any concrete target.
const Target& target_base(const AnyTarget& target) noexcept;
Target& target_base(AnyTarget& target) noexcept;

/// Intersection over union of two boxes; 0 when the union is empty.
double iou(const BoundingBox& a, const BoundingBox& b) noexcept;

/// Deterministic one-line rendering, e.g. "Category(3 'person', conf=0.900)".
std::string target_to_string(const AnyTarget& target);

/// JSON record with a "type" tag.
std::string target_to_wire(const AnyTarget& target);

/// Throws UnknownTypeTag, SchemaViolation.
AnyTarget target_from_wire(std::string_view record);

}  // namespace odr
