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

#include "odr/datasets/dataset.hpp"

#include <fmt/format.h>

#include "odr/datasets/coco.hpp"
#include "odr/datasets/image_folder.hpp"
#include "odr/error.hpp"

namespace odr {

void check_index(std::size_t i, std::size_t size) {
  if (i >= size) {
    throw Error(Errc::IndexOutOfRange, fmt::format("index {} outside dataset of {}", i, size));
  }
}

Sample InMemoryDataset::get(std::size_t i) const {
  check_index(i, samples_.size());
  return samples_[i];
}

DatasetType parse_dataset_type(std::string_view tag) {
  if (tag == "image_folder") return DatasetType::ImageFolder;
  if (tag == "coco_subset") return DatasetType::CocoSubset;
  throw Error(Errc::InvalidArgument,
              fmt::format("unknown dataset type '{}' (image_folder, coco_subset)", tag));
}

std::string_view to_string(DatasetType type) noexcept {
  return type == DatasetType::ImageFolder ? "image_folder" : "coco_subset";
}

OpenedDataset open_external(const ExternalDataset& spec) {
  if (spec.type == DatasetType::ImageFolder) {
    auto ds = open_image_folder(spec.path);
    return {ds, ds->classes()};
  }
  auto ds = open_coco_subset(spec.path);
  return {ds, ds->classes()};
}

}  // namespace odr
