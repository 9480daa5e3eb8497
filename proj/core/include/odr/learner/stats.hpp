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

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace odr {

/// A training/evaluation metric: a scalar or a per-iteration series.
using Metric = std::variant<double, std::vector<double>>;

/// Metric name -> value, as returned by fit() and eval().
using TrainStats = std::map<std::string, Metric>;

/// Throws EmptyStats, NonFiniteMetric, EmptySeries.
void stats_validate(const TrainStats& stats);

/// Compact JSON object, keys sorted.
std::string stats_to_json(const TrainStats& stats);

}  // namespace odr
