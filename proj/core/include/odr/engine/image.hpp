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
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace odr {

// The numeric values are part of the FFI ABI (OdrImageDesc) and must not
// change.
enum class Layout : std::uint8_t { CHW = 0, HWC = 1 };
enum class ChannelOrder : std::uint8_t { RGB = 0, BGR = 1 };
enum class DType : std::uint8_t { U8 = 0, F32 = 1 };

/// External pixel layout: dimension order, channel order and sample type.
struct ImageFormat {
  Layout layout = Layout::CHW;
  ChannelOrder order = ChannelOrder::RGB;
  DType dtype = DType::U8;

  static constexpr ImageFormat canonical() noexcept { return {}; }

  bool operator==(const ImageFormat&) const = default;
};

/// All 2 x 2 x 2 external formats, canonical first.
std::array<ImageFormat, 8> all_image_formats() noexcept;

/// "CHW-RGB-U8" style name.
std::string to_string(ImageFormat fmt);

/// Inverse of to_string; throws InvalidArgument.
ImageFormat parse_image_format(std::string_view name);

/// An image in canonical form: planar CHW, RGB channel order, 8-bit samples.
/// Grayscale images have one channel.
class Image {
 public:
  /// Takes ownership of a canonical buffer; throws BadChannels,
  /// LengthMismatch or InvalidArgument (zero extent).
  Image(std::size_t width, std::size_t height, std::size_t channels,
        std::vector<std::uint8_t> data);

  /// Zero-filled image.
  static Image blank(std::size_t width, std::size_t height, std::size_t channels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> mutable_data() noexcept { return data_; }

  std::uint8_t at(std::size_t c, std::size_t y, std::size_t x) const noexcept {
    return data_[(c * height_ + y) * width_ + x];
  }
  std::uint8_t& at(std::size_t c, std::size_t y, std::size_t x) noexcept {
    return data_[(c * height_ + y) * width_ + x];
  }

  bool operator==(const Image&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::size_t channels_;
  std::vector<std::uint8_t> data_;
};

/// A buffer in some external format; the alternative matches the dtype.
using PixelBuffer = std::variant<std::vector<std::uint8_t>, std::vector<float>>;

/// Canonicalize an external buffer. F32 samples must lie in [0, 1] and are
/// quantized with round-half-away-from-zero of v * 255.
///
/// Throws BadChannels, LengthMismatch, ValueOutOfRange, or InvalidArgument
/// when the buffer type does not match fmt.dtype.
Image image_from_buffer(std::span<const std::uint8_t> buffer, ImageFormat fmt,
                        std::size_t width, std::size_t height, std::size_t channels);
Image image_from_buffer(std::span<const float> buffer, ImageFormat fmt, std::size_t width,
                        std::size_t height, std::size_t channels);
Image image_from_buffer(const PixelBuffer& buffer, ImageFormat fmt, std::size_t width,
                        std::size_t height, std::size_t channels);

// Exact-match overloads so vectors do not convert ambiguously to span or PixelBuffer.
inline Image image_from_buffer(const std::vector<std::uint8_t>& buffer, ImageFormat fmt,
                               std::size_t width, std::size_t height, std::size_t channels) {
  return image_from_buffer(std::span<const std::uint8_t>(buffer), fmt, width, height, channels);
}
inline Image image_from_buffer(const std::vector<float>& buffer, ImageFormat fmt, std::size_t width,
                               std::size_t height, std::size_t channels) {
  return image_from_buffer(std::span<const float>(buffer), fmt, width, height, channels);
}

/// Raw-byte entry point used by the C ABI: F32 samples are read in host byte
/// order. The length check is in bytes.
Image image_from_bytes(std::span<const std::byte> bytes, ImageFormat fmt, std::size_t width,
                       std::size_t height, std::size_t channels);

/// Export to an external format. U8 -> F32 maps v to v / 255.
PixelBuffer image_convert(const Image& image, ImageFormat fmt);

/// Canonical samples scaled to [0, 1] as doubles (CHW, RGB order).
std::vector<double> image_to_unit_vector(const Image& image);

/// Binary PPM (P6) and PGM (P5) with maxval 255.
Image decode_pnm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pnm(const Image& image);

/// Throws FileNotFound, UnsupportedFormat, CorruptHeader.
Image image_open(const std::filesystem::path& path);
void image_save(const std::filesystem::path& path, const Image& image);

}  // namespace odr
