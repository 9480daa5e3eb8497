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

#include <vector>

#include "odr/datasets/dataset.hpp"
#include "odr/engine/data.hpp"
#include "odr/engine/target.hpp"

namespace odr {

/// Features used by the reference learners: a Vector's values or an Image's
/// pixels scaled to [0, 1]. Other data kinds throw InvalidArgument.
std::vector<double> feature_vector(const Data& data);

/// The first Category among a sample's targets; InvalidArgument when absent.
const Category& sample_label(const Sample& sample);

}  // namespace odr
