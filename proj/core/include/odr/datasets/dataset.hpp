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

#include <cstddef>
#include <filesystem>
#include <memory>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odr/engine/data.hpp"
#include "odr/engine/target.hpp"

namespace odr {

/// One dataset item: the sensor data and its annotations.
struct Sample {
  Data data;
  std::vector<AnyTarget> targets;

  bool operator==(const Sample&) const = default;
};

/// Index-addressable dataset. Implementations are read-only after
/// construction, so get() may be called concurrently.
class DatasetIterator {
 public:
  virtual ~DatasetIterator() = default;

  virtual std::size_t size() const = 0;

  /// Throws IndexOutOfRange for i >= size().
  virtual Sample get(std::size_t i) const = 0;
};

/// A dataset held in memory.
class InMemoryDataset final : public DatasetIterator {
 public:
  InMemoryDataset() = default;
  explicit InMemoryDataset(std::vector<Sample> samples) : samples_(std::move(samples)) {}

  void add(Sample sample) { samples_.push_back(std::move(sample)); }

  std::size_t size() const override { return samples_.size(); }
  Sample get(std::size_t i) const override;

 private:
  std::vector<Sample> samples_;
};

/// (class index, class name) pairs a loader assigns.
using ClassTable = std::vector<std::pair<std::int64_t, std::string>>;

enum class DatasetType { ImageFolder, CocoSubset };

/// Throws InvalidArgument for anything but "image_folder" / "coco_subset".
DatasetType parse_dataset_type(std::string_view tag);
std::string_view to_string(DatasetType type) noexcept;

/// Descriptor of a well-known on-disk dataset format.
struct ExternalDataset {
  std::filesystem::path path;
  DatasetType type = DatasetType::ImageFolder;
};

struct OpenedDataset {
  std::shared_ptr<const DatasetIterator> dataset;
  ClassTable classes;
};

OpenedDataset open_external(const ExternalDataset& spec);

void check_index(std::size_t i, std::size_t size);

}  // namespace odr
