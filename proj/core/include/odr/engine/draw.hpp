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

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "odr/engine/image.hpp"
#include "odr/engine/target.hpp"

namespace odr {

using Rgb = std::array<std::uint8_t, 3>;

/// Box colors, chosen by category index modulo 8.
inline constexpr std::array<Rgb, 8> kBoxPalette{{
    {255, 0, 0},
    {0, 255, 0},
    {0, 0, 255},
    {255, 255, 0},
    {0, 255, 255},
    {255, 0, 255},
    {255, 128, 0},
    {255, 255, 255},
}};

/// Gray level used for grayscale images: round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t palette_gray(const Rgb& color) noexcept;

/// Paints a 1-pixel border for each box. Corners are (round(x), round(y)) and
/// (round(x + w), round(y + h)), both inclusive; pixels outside the image are
/// skipped. Throws IndexOutOfRange when a category index has no class name.
Image draw_bounding_boxes(const Image& image, std::span<const BoundingBox> boxes,
                          std::span<const std::string> class_names);

}  // namespace odr
