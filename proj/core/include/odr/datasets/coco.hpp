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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "odr/datasets/dataset.hpp"

namespace odr {

/// Minimal COCO detection subset: "images" (id, file_name, width, height),
/// "annotations" (image_id, category_id, bbox [x, y, w, h], optional id) and
/// "categories" (id, name). Segmentation, crowd flags and licenses are
/// ignored.
///
/// Items follow ascending image id; each item's targets are its boxes in
/// ascending annotation id (file order when ids are absent). Image files are
/// resolved relative to the JSON file.
class CocoSubsetDataset final : public DatasetIterator {
 public:
  /// Throws SchemaViolation, DanglingReference, UnreadableImage, FileNotFound.
  explicit CocoSubsetDataset(const std::filesystem::path& json_path);

  std::size_t size() const override { return items_.size(); }
  Sample get(std::size_t i) const override;

  ClassTable classes() const { return categories_; }
  std::int64_t image_id(std::size_t i) const { return items_.at(i).id; }

 private:
  struct Item {
    std::int64_t id;
    Image image;
    std::vector<AnyTarget> boxes;
  };

  ClassTable categories_;
  std::vector<Item> items_;
};

std::shared_ptr<CocoSubsetDataset> open_coco_subset(const std::filesystem::path& json_path);

}  // namespace odr
