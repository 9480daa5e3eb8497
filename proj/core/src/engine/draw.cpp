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

#include "odr/engine/draw.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

std::uint8_t palette_gray(const Rgb& color) noexcept {
  return static_cast<std::uint8_t>(
      std::lround(0.299 * color[0] + 0.587 * color[1] + 0.114 * color[2]));
}

namespace {

class Painter {
 public:
  Painter(Image& image, const Rgb& color) : image_(image), color_(color) {}

  void put(long long x, long long y) {
    if (x < 0 || y < 0) return;
    const auto ux = static_cast<std::size_t>(x);
    const auto uy = static_cast<std::size_t>(y);
    if (ux >= image_.width() || uy >= image_.height()) return;
    if (image_.channels() == 1) {
      image_.at(0, uy, ux) = palette_gray(color_);
    } else {
      for (std::size_t c = 0; c < 3; ++c) image_.at(c, uy, ux) = color_[c];
    }
  }

 private:
  Image& image_;
  Rgb color_;
};

// Rounded pixel coordinate; far-off values are pinned well outside any image.
long long pixel(double v) { return std::llround(std::clamp(v, -1e15, 1e15)); }

}  // namespace

Image draw_bounding_boxes(const Image& image, std::span<const BoundingBox> boxes,
                          std::span<const std::string> class_names) {
  for (const auto& box : boxes) {
    if (static_cast<std::uint64_t>(box.category.index) >= class_names.size()) {
      throw Error(Errc::IndexOutOfRange,
                  fmt::format("category index {} but only {} class names", box.category.index,
                              class_names.size()));
    }
  }

  Image out = image;
  for (const auto& box : boxes) {
    Painter paint(out, kBoxPalette[static_cast<std::size_t>(box.category.index) % kBoxPalette.size()]);
    const long long x0 = pixel(box.x);
    const long long y0 = pixel(box.y);
    const long long x1 = pixel(box.x + box.w);
    const long long y1 = pixel(box.y + box.h);
    const auto width = static_cast<long long>(out.width());
    const auto height = static_cast<long long>(out.height());
    for (long long x = std::max(x0, 0LL); x <= std::min(x1, width - 1); ++x) {
      paint.put(x, y0);
      paint.put(x, y1);
    }
    for (long long y = std::max(y0 + 1, 0LL); y < std::min(y1, height); ++y) {
      paint.put(x0, y);
      paint.put(x1, y);
    }
  }
  return out;
}

}  // namespace odr
