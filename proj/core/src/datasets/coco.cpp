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

#include "odr/datasets/coco.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <fmt/format.h>

#include "json.hpp"
#include "odr/error.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace odr {

namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(Errc::SchemaViolation, what); }

const Json& array_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_array()) violation(fmt::format("'{}' must be an array", key));
  return *it;
}

std::int64_t int_field(const Json& j, const char* key, const char* where) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) {
    violation(fmt::format("{} needs an integer '{}'", where, key));
  }
  return it->get<std::int64_t>();
}

std::string string_field(const Json& j, const char* key, const char* where) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) violation(fmt::format("{} needs a string '{}'", where, key));
  return it->get<std::string>();
}

struct Annotation {
  std::optional<std::int64_t> id;
  std::size_t order;
  std::int64_t image_id;
  std::int64_t category_id;
  std::array<double, 4> bbox;
};

}  // namespace

CocoSubsetDataset::CocoSubsetDataset(const fs::path& json_path) {
  std::ifstream in(json_path);
  if (!in) throw Error(Errc::FileNotFound, json_path.string());
  Json root;
  try {
    root = Json::parse(in);
  } catch (const Json::parse_error& e) {
    violation(fmt::format("{}: malformed JSON: {}", json_path.string(), e.what()));
  }
  if (!root.is_object()) violation("COCO file must hold a JSON object");

  std::map<std::int64_t, std::string> categories;
  for (const auto& c : array_field(root, "categories")) {
    if (!c.is_object()) violation("category entries must be objects");
    const auto id = int_field(c, "id", "category");
    if (id < 0) violation(fmt::format("category id {} is negative", id));
    if (!categories.emplace(id, string_field(c, "name", "category")).second) {
      violation(fmt::format("duplicate category id {}", id));
    }
  }
  categories_.assign(categories.begin(), categories.end());

  struct ImageEntry {
    std::string file_name;
    std::int64_t width;
    std::int64_t height;
  };
  std::map<std::int64_t, ImageEntry> images;
  for (const auto& im : array_field(root, "images")) {
    if (!im.is_object()) violation("image entries must be objects");
    const auto id = int_field(im, "id", "image");
    ImageEntry entry{string_field(im, "file_name", "image"), int_field(im, "width", "image"),
                     int_field(im, "height", "image")};
    if (entry.width <= 0 || entry.height <= 0) {
      violation(fmt::format("image {} has a non-positive extent", id));
    }
    if (!images.emplace(id, std::move(entry)).second) {
      violation(fmt::format("duplicate image id {}", id));
    }
  }

  std::vector<Annotation> annotations;
  for (const auto& a : array_field(root, "annotations")) {
    if (!a.is_object()) violation("annotation entries must be objects");
    Annotation ann{};
    ann.order = annotations.size();
    if (a.contains("id")) ann.id = int_field(a, "id", "annotation");
    ann.image_id = int_field(a, "image_id", "annotation");
    ann.category_id = int_field(a, "category_id", "annotation");
    const auto bbox = a.find("bbox");
    if (bbox == a.end() || !bbox->is_array() || bbox->size() != 4) {
      violation("annotation needs a 4-element 'bbox'");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (!(*bbox)[k].is_number()) violation("'bbox' must hold numbers");
      ann.bbox[k] = (*bbox)[k].get<double>();
    }
    if (!images.contains(ann.image_id)) {
      throw Error(Errc::DanglingReference,
                  fmt::format("annotation {} references missing image {}", ann.order, ann.image_id));
    }
    if (!categories.contains(ann.category_id)) {
      throw Error(Errc::DanglingReference,
                  fmt::format("annotation {} references missing category {}", ann.order,
                              ann.category_id));
    }
    annotations.push_back(ann);
  }
  // Annotation ids order the boxes only when every annotation carries one.
  if (std::all_of(annotations.begin(), annotations.end(), [](const auto& a) { return a.id; })) {
    std::stable_sort(annotations.begin(), annotations.end(),
                     [](const Annotation& a, const Annotation& b) { return *a.id < *b.id; });
  }

  const fs::path base = json_path.parent_path();
  std::map<std::int64_t, std::size_t> slot;
  for (const auto& [id, entry] : images) {
    const fs::path file = base / entry.file_name;
    Image image = [&] {
      try {
        return image_open(file);
      } catch (const Error& e) {
        throw Error(Errc::UnreadableImage, fmt::format("{} ({})", file.string(), e.what()));
      }
    }();
    if (image.width() != static_cast<std::size_t>(entry.width) ||
        image.height() != static_cast<std::size_t>(entry.height)) {
      violation(fmt::format("image {} is {}x{} but declared {}x{}", file.string(), image.width(),
                            image.height(), entry.width, entry.height));
    }
    slot[id] = items_.size();
    items_.push_back({id, std::move(image), {}});
  }
  for (const auto& ann : annotations) {
    try {
      items_[slot[ann.image_id]].boxes.emplace_back(
          BoundingBox(Category(ann.category_id, categories[ann.category_id]), ann.bbox[0],
                      ann.bbox[1], ann.bbox[2], ann.bbox[3]));
    } catch (const Error& e) {
      violation(fmt::format("annotation {}: {}", ann.order, e.what()));
    }
  }
  if (items_.empty()) {
    throw Error(Errc::EmptyDataset, fmt::format("{} lists no images", json_path.string()));
  }
}

Sample CocoSubsetDataset::get(std::size_t i) const {
  check_index(i, items_.size());
  return {items_[i].image, items_[i].boxes};
}

std::shared_ptr<CocoSubsetDataset> open_coco_subset(const fs::path& json_path) {
  return std::make_shared<CocoSubsetDataset>(json_path);
}

}  // namespace odr
