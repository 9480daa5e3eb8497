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

#include "odr/datasets/image_folder.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace fs = std::filesystem;

namespace odr {

namespace {

bool hidden(const fs::path& p) {
  const std::string name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

// Byte-wise ascending order of the UTF-8 names.
std::vector<fs::path> sorted_entries(const fs::path& dir, bool want_dirs) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (hidden(entry.path())) continue;
    if (want_dirs ? entry.is_directory() : entry.is_regular_file()) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return out;
}

}  // namespace

ImageFolderDataset::ImageFolderDataset(const fs::path& root) {
  if (!fs::is_directory(root)) throw Error(Errc::FileNotFound, root.string());
  const auto class_dirs = sorted_entries(root, true);
  for (std::size_t label = 0; label < class_dirs.size(); ++label) {
    class_names_.push_back(class_dirs[label].filename().string());
    for (const auto& file : sorted_entries(class_dirs[label], false)) {
      try {
        items_.push_back({file, label, image_open(file)});
      } catch (const Error& e) {
        throw Error(Errc::UnreadableImage, fmt::format("{} ({})", file.string(), e.what()));
      }
    }
  }
  if (items_.empty()) {
    throw Error(Errc::EmptyDataset, fmt::format("no images under {}", root.string()));
  }
}

Sample ImageFolderDataset::get(std::size_t i) const {
  check_index(i, items_.size());
  const Item& item = items_[i];
  return {item.image,
          {Category(static_cast<std::int64_t>(item.label), class_names_[item.label])}};
}

ClassTable ImageFolderDataset::classes() const {
  ClassTable out;
  for (std::size_t i = 0; i < class_names_.size(); ++i) {
    out.emplace_back(static_cast<std::int64_t>(i), class_names_[i]);
  }
  return out;
}

std::shared_ptr<ImageFolderDataset> open_image_folder(const fs::path& root) {
  return std::make_shared<ImageFolderDataset>(root);
}

}  // namespace odr
