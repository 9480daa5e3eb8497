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

#include "odr/learner/stats.hpp"

#include <cmath>

#include <fmt/format.h>

#include "json.hpp"
#include "odr/error.hpp"

namespace odr {

void stats_validate(const TrainStats& stats) {
  if (stats.empty()) throw Error(Errc::EmptyStats, "no metrics");
  for (const auto& [name, metric] : stats) {
    if (const auto* scalar = std::get_if<double>(&metric)) {
      if (!std::isfinite(*scalar)) {
        throw Error(Errc::NonFiniteMetric, fmt::format("'{}' is {}", name, *scalar));
      }
      continue;
    }
    const auto& series = std::get<std::vector<double>>(metric);
    if (series.empty()) throw Error(Errc::EmptySeries, fmt::format("'{}' has no values", name));
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (!std::isfinite(series[i])) {
        throw Error(Errc::NonFiniteMetric, fmt::format("'{}'[{}] is {}", name, i, series[i]));
      }
    }
  }
}

std::string stats_to_json(const TrainStats& stats) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, metric] : stats) {
    std::visit([&](const auto& v) { j[name] = v; }, metric);
  }
  return j.dump();
}

}  // namespace odr
