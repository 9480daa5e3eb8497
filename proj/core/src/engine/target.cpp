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

#include "odr/engine/target.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

namespace {

void require(bool ok, Errc code, std::string_view what) {
  if (!ok) throw Error(code, std::string(what));
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

Target::Target(std::optional<double> confidence, std::optional<Action> action)
    : confidence(confidence), suggested_action(std::move(action)) {
  if (confidence && !(*confidence >= 0.0 && *confidence <= 1.0)) {
    throw Error(Errc::ValueOutOfRange, fmt::format("confidence {} outside [0, 1]", *confidence));
  }
}

Category::Category(std::int64_t index, std::optional<std::string> description,
                   std::optional<double> confidence, std::optional<Action> action)
    : Target(confidence, std::move(action)), index(index), description(std::move(description)) {
  require(index >= 0, Errc::InvalidArgument, "category index must be nonnegative");
}

BoundingBox::BoundingBox(Category category, double x, double y, double w, double h,
                         std::optional<double> confidence, std::optional<Action> action)
    : Target(confidence, std::move(action)), category(std::move(category)), x(x), y(y), w(w), h(h) {
  require(std::isfinite(x) && std::isfinite(y), Errc::InvalidArgument,
          "box corner must be finite");
  require(finite_nonneg(w) && finite_nonneg(h), Errc::InvalidArgument,
          "box extent must be nonnegative");
}

BoundingBox3D::BoundingBox3D(Category category, std::array<double, 3> center,
                             std::array<double, 3> size, double yaw,
                             std::optional<double> confidence, std::optional<Action> action)
    : Target(confidence, std::move(action)),
      category(std::move(category)),
      center(center),
      size(size),
      yaw(yaw) {
  require(std::all_of(center.begin(), center.end(), [](double v) { return std::isfinite(v); }),
          Errc::InvalidArgument, "3D box center must be finite");
  require(std::all_of(size.begin(), size.end(), finite_nonneg), Errc::InvalidArgument,
          "3D box size must be nonnegative");
  require(yaw > -std::numbers::pi && yaw <= std::numbers::pi, Errc::InvalidArgument,
          "yaw must lie in (-pi, pi]");
}

Pose::Pose(std::vector<Keypoint> keypoints, std::optional<double> confidence,
           std::optional<Action> action)
    : Target(confidence, std::move(action)), keypoints(std::move(keypoints)) {
  for (std::size_t i = 0; i < this->keypoints.size(); ++i) {
    const Keypoint& k = this->keypoints[i];
    if (k == kAbsent) continue;
    if (!finite_nonneg(k.x) || !finite_nonneg(k.y)) {
      throw Error(Errc::InvalidArgument,
                  fmt::format("keypoint {} ({}, {}) is neither the (-1, -1) sentinel nor a "
                              "nonnegative pixel position",
                              i, k.x, k.y));
    }
  }
}

Heatmap::Heatmap(std::size_t height, std::size_t width, std::uint32_t num_classes,
                 std::vector<std::uint32_t> class_map, std::optional<double> confidence,
                 std::optional<Action> action)
    : Target(confidence, std::move(action)),
      height(height),
      width(width),
      num_classes(num_classes),
      class_map(std::move(class_map)) {
  if (this->class_map.size() != height * width) {
    throw Error(Errc::LengthMismatch, fmt::format("{}x{} heatmap needs {} ids, got {}", height,
                                                  width, height * width, this->class_map.size()));
  }
  for (std::size_t i = 0; i < this->class_map.size(); ++i) {
    if (this->class_map[i] >= num_classes) {
      throw Error(Errc::IndexOutOfRange,
                  fmt::format("class id {} at {} is not below {}", this->class_map[i], i,
                              num_classes));
    }
  }
}

SpeechCommand::SpeechCommand(Category command, std::optional<double> confidence,
                             std::optional<Action> action)
    : Target(confidence, std::move(action)), command(std::move(command)) {
  require(this->command.description.has_value() && !this->command.description->empty(),
          Errc::InvalidArgument, "speech command needs a description");
}

Bearing::Bearing(std::array<double, 3> direction, std::optional<double> confidence,
                 std::optional<Action> action)
    : Target(confidence, std::move(action)), direction(direction) {
  const double norm = std::hypot(direction[0], direction[1], direction[2]);
  require(std::isfinite(norm) && std::abs(norm - 1.0) <= 1e-9, Errc::InvalidArgument,
          "bearing direction must be a unit vector");
}

const Target& target_base(const AnyTarget& target) noexcept {
  return std::visit([](const auto& t) -> const Target& { return t; }, target);
}

Target& target_base(AnyTarget& target) noexcept {
  return std::visit([](auto& t) -> Target& { return t; }, target);
}

double iou(const BoundingBox& a, const BoundingBox& b) noexcept {
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.w * a.h + b.w * b.h - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

// --- rendering --------------------------------------------------------------

namespace {

std::string label(const Category& c) {
  if (c.description) return fmt::format("{} '{}'", c.index, *c.description);
  return fmt::format("{}", c.index);
}

std::string triple(const std::array<double, 3>& v) {
  return fmt::format("({:.3f}, {:.3f}, {:.3f})", v[0], v[1], v[2]);
}

std::string suffix(const Target& t) {
  std::string out;
  if (t.confidence) out += fmt::format(", conf={:.3f}", *t.confidence);
  if (t.suggested_action) {
    out += ", action=[";
    const auto values = t.suggested_action->values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      out += fmt::format("{}{:.3f}", i ? ", " : "", values[i]);
    }
    out += "]";
  }
  return out;
}

struct Renderer {
  std::string operator()(const Category& c) const {
    return fmt::format("Category({}{})", label(c), suffix(c));
  }
  std::string operator()(const BoundingBox& b) const {
    return fmt::format("BoundingBox({}, x={:.3f}, y={:.3f}, w={:.3f}, h={:.3f}{})",
                       label(b.category), b.x, b.y, b.w, b.h, suffix(b));
  }
  std::string operator()(const BoundingBox3D& b) const {
    return fmt::format("BoundingBox3D({}, center={}, size={}, yaw={:.3f}{})", label(b.category),
                       triple(b.center), triple(b.size), b.yaw, suffix(b));
  }
  std::string operator()(const Pose& p) const {
    std::string points;
    for (std::size_t i = 0; i < p.keypoints.size(); ++i) {
      if (i) points += ", ";
      points += p.present(i)
                    ? fmt::format("({:.3f}, {:.3f})", p.keypoints[i].x, p.keypoints[i].y)
                    : std::string("absent");
    }
    return fmt::format("Pose([{}]{})", points, suffix(p));
  }
  std::string operator()(const Heatmap& h) const {
    return fmt::format("Heatmap({}x{}, classes={}{})", h.height, h.width, h.num_classes,
                       suffix(h));
  }
  std::string operator()(const SpeechCommand& s) const {
    return fmt::format("SpeechCommand({}{})", label(s.command), suffix(s));
  }
  std::string operator()(const Bearing& b) const {
    return fmt::format("Bearing(dir={}{})", triple(b.direction), suffix(b));
  }
};

}  // namespace

std::string target_to_string(const AnyTarget& target) { return std::visit(Renderer{}, target); }

}  // namespace odr
