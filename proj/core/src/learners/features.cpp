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

#include "odr/learners/features.hpp"

#include "odr/error.hpp"

namespace odr {

std::vector<double> feature_vector(const Data& data) {
  if (const auto* v = std::get_if<Vector>(&data)) return {v->values().begin(), v->values().end()};
  if (const auto* img = std::get_if<Image>(&data)) return image_to_unit_vector(*img);
  throw Error(Errc::InvalidArgument, "expected a Vector or an Image");
}

const Category& sample_label(const Sample& sample) {
  for (const auto& t : sample.targets) {
    if (const auto* c = std::get_if<Category>(&t)) return *c;
  }
  throw Error(Errc::InvalidArgument, "sample has no Category target");
}

}  // namespace odr
