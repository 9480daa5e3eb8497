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


#include <benchmark/benchmark.h>

#include <random>

#include "odr/datasets/dataset.hpp"
#include "odr/learners/centroid.hpp"

namespace {

// Plain distances versus the norm-expansion path enabled by optimize().
void BM_CentroidClassify(benchmark::State& state) {
  const auto classes = static_cast<std::size_t>(state.range(0));
  const std::size_t dim = 3 * 64 * 64;
  const bool optimized = state.range(1) != 0;
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0, 1);
  odr::InMemoryDataset train;
  for (std::size_t c = 0; c < classes; ++c) {
    std::vector<double> v(dim);
    for (auto& e : v) e = u(gen);
    train.add({odr::Vector(std::move(v)), {odr::Category(static_cast<std::int64_t>(c))}});
  }
  odr::CentroidLearner learner;
  learner.fit(train);
  if (optimized) learner.optimize();
  std::vector<double> x(dim);
  for (auto& e : x) e = u(gen);
  for (auto _ : state) benchmark::DoNotOptimize(learner.classify(x));
  state.SetLabel(optimized ? "optimized" : "plain");
}
BENCHMARK(BM_CentroidClassify)->ArgsProduct({{2, 10, 100}, {0, 1}});

}  // namespace
