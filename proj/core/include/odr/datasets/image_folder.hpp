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

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "odr/datasets/dataset.hpp"

namespace odr {

/// Directory-per-class image dataset.
///
/// Class indices follow the byte-wise ascending order of the subdirectory
/// names. Items are ordered by (class directory, file name). Every regular,
/// non-hidden file inside a class directory must decode as PPM/PGM.
class ImageFolderDataset final : public DatasetIterator {
 public:
  /// Throws EmptyDataset, UnreadableImage (naming the file), FileNotFound.
  explicit ImageFolderDataset(const std::filesystem::path& root);

  std::size_t size() const override { return items_.size(); }
  Sample get(std::size_t i) const override;

  const std::vector<std::string>& class_names() const noexcept { return class_names_; }
  ClassTable classes() const;
  const std::filesystem::path& file(std::size_t i) const { return items_.at(i).path; }

 private:
  struct Item {
    std::filesystem::path path;
    std::size_t label;
    Image image;
  };

  std::vector<std::string> class_names_;
  std::vector<Item> items_;
};

std::shared_ptr<ImageFolderDataset> open_image_folder(const std::filesystem::path& root);

}  // namespace odr
