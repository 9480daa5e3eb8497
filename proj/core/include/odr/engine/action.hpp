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
#include <span>
#include <utility>
#include <vector>

namespace odr {

/// Active-perception control suggestion: 1 to 4 axes, each in [-1, 1].
/// Positive values move along the positive direction of an axis, negative
/// values along the negative one.
class Action {
 public:
  static constexpr std::size_t kMaxAxes = 4;

  /// Rejects out-of-range values instead of clamping them.
  /// Throws AxisCountInvalid or ComponentOutOfRange (NaN included).
  static Action validate(std::span<const double> axes);

  /// Clamps each component into [-1, 1]. Throws AxisCountInvalid, NonFinite.
  static Action clamp(std::span<const double> axes);

  std::size_t axes() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  bool operator==(const Action&) const = default;

 private:
  explicit Action(std::vector<double> values) : values_(std::move(values)) {}

  std::vector<double> values_;
};

inline Action action_validate(std::span<const double> axes) { return Action::validate(axes); }
inline Action action_clamp(std::span<const double> axes) { return Action::clamp(axes); }

}  // namespace odr
