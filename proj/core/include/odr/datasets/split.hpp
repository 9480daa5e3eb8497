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
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "odr/datasets/dataset.hpp"

namespace odr {

/// View of a parent dataset through an index list.
class SubsetDataset final : public DatasetIterator {
 public:
  SubsetDataset(std::shared_ptr<const DatasetIterator> parent, std::vector<std::size_t> indices);

  std::size_t size() const override { return indices_.size(); }
  Sample get(std::size_t i) const override;

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::shared_ptr<const DatasetIterator> parent_;
  std::vector<std::size_t> indices_;
};

/// Partition 0..n-1 with a seeded Fisher-Yates shuffle (xoshiro256** seeded
/// by SplitMix64, see odr/rng.hpp). Partition k gets floor(n * f_k) items and
/// the first partition also takes the remainder.
///
/// Throws BadFractions unless every fraction is positive and the sum is within
/// 1e-9 of 1.
std::vector<std::vector<std::size_t>> split_indices(std::size_t n,
                                                    std::span<const double> fractions,
                                                    std::uint64_t seed);

std::vector<std::shared_ptr<SubsetDataset>> dataset_split(
    std::shared_ptr<const DatasetIterator> dataset, std::span<const double> fractions,
    std::uint64_t seed);

}  // namespace odr
