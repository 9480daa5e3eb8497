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

#include "odr/engine/action.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

namespace {

void check_axis_count(std::size_t n) {
  if (n < 1 || n > Action::kMaxAxes) {
    throw Error(Errc::AxisCountInvalid, fmt::format("action needs 1..4 axes, got {}", n));
  }
}

}  // namespace

Action Action::validate(std::span<const double> axes) {
  check_axis_count(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (!(axes[i] >= -1.0 && axes[i] <= 1.0)) {
      throw Error(Errc::ComponentOutOfRange,
                  fmt::format("axis {} value {} outside [-1, 1]", i, axes[i]));
    }
  }
  return Action(std::vector<double>(axes.begin(), axes.end()));
}

Action Action::clamp(std::span<const double> axes) {
  check_axis_count(axes.size());
  std::vector<double> values(axes.begin(), axes.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(Errc::NonFinite, fmt::format("axis {} value {}", i, values[i]));
    }
    values[i] = std::clamp(values[i], -1.0, 1.0);
  }
  return validate(values);
}

}  // namespace odr
