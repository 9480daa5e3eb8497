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

#include "odr/datasets/split.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "odr/error.hpp"
#include "odr/rng.hpp"

namespace odr {

SubsetDataset::SubsetDataset(std::shared_ptr<const DatasetIterator> parent,
                             std::vector<std::size_t> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
  for (auto i : indices_) check_index(i, parent_->size());
}

Sample SubsetDataset::get(std::size_t i) const {
  check_index(i, indices_.size());
  return parent_->get(indices_[i]);
}

std::vector<std::vector<std::size_t>> split_indices(std::size_t n,
                                                    std::span<const double> fractions,
                                                    std::uint64_t seed) {
  if (fractions.empty()) throw Error(Errc::BadFractions, "no fractions given");
  double sum = 0.0;
  for (double f : fractions) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw Error(Errc::BadFractions, fmt::format("fraction {} is not positive", f));
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(Errc::BadFractions, fmt::format("fractions sum to {}, not 1", sum));
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }

  std::vector<std::size_t> sizes(fractions.size());
  std::size_t allocated = 0;
  for (std::size_t k = 0; k < fractions.size(); ++k) {
    sizes[k] = static_cast<std::size_t>(std::floor(static_cast<double>(n) * fractions[k]));
    allocated += sizes[k];
  }
  // floor() never over-allocates by more than rounding noise; clip then hand
  // the remainder to the first split.
  while (allocated > n) {
    for (auto& s : sizes) {
      if (allocated > n && s > 0) {
        --s;
        --allocated;
      }
    }
  }
  sizes.front() += n - allocated;

  std::vector<std::vector<std::size_t>> out(fractions.size());
  std::size_t pos = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    out[k].assign(perm.begin() + pos, perm.begin() + pos + sizes[k]);
    pos += sizes[k];
  }
  return out;
}

std::vector<std::shared_ptr<SubsetDataset>> dataset_split(
    std::shared_ptr<const DatasetIterator> dataset, std::span<const double> fractions,
    std::uint64_t seed) {
  std::vector<std::shared_ptr<SubsetDataset>> out;
  for (auto& indices : split_indices(dataset->size(), fractions, seed)) {
    out.push_back(std::make_shared<SubsetDataset>(dataset, std::move(indices)));
  }
  return out;
}

}  // namespace odr
