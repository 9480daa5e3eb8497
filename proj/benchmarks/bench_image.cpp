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

#include "odr/engine/image.hpp"

namespace {

odr::Image random_image(std::size_t w, std::size_t h) {
  std::mt19937 gen(1);
  std::vector<std::uint8_t> px(w * h * 3);
  for (auto& p : px) p = static_cast<std::uint8_t>(gen());
  return odr::Image(w, h, 3, std::move(px));
}

void BM_ImageConvert(benchmark::State& state) {
  const auto fmt = odr::all_image_formats()[static_cast<std::size_t>(state.range(0))];
  const auto img = random_image(320, 240);
  for (auto _ : state) benchmark::DoNotOptimize(odr::image_convert(img, fmt));
  state.SetLabel(odr::to_string(fmt));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * img.size()));
}
BENCHMARK(BM_ImageConvert)->DenseRange(0, 7);

void BM_ImageReconstruct(benchmark::State& state) {
  const auto fmt = odr::all_image_formats()[static_cast<std::size_t>(state.range(0))];
  const auto img = random_image(320, 240);
  const auto buffer = odr::image_convert(img, fmt);
  for (auto _ : state) benchmark::DoNotOptimize(odr::image_from_buffer(buffer, fmt, 320, 240, 3));
  state.SetLabel(odr::to_string(fmt));
}
BENCHMARK(BM_ImageReconstruct)->DenseRange(0, 7);

}  // namespace
