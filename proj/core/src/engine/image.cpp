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

#include "odr/engine/image.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

namespace {

void check_channels(std::size_t channels) {
  if (channels != 1 && channels != 3) {
    throw Error(Errc::BadChannels, fmt::format("channels must be 1 or 3, got {}", channels));
  }
}

void check_extent(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw Error(Errc::InvalidArgument, fmt::format("empty image extent {}x{}", width, height));
  }
}

// Maps a canonical (channel, y, x) to the element offset in an external
// buffer of the given format.
class ExternalIndex {
 public:
  ExternalIndex(ImageFormat fmt, std::size_t width, std::size_t height, std::size_t channels)
      : fmt_(fmt), width_(width), height_(height), channels_(channels) {}

  std::size_t operator()(std::size_t c, std::size_t y, std::size_t x) const noexcept {
    const std::size_t slot =
        (channels_ == 3 && fmt_.order == ChannelOrder::BGR) ? 2 - c : c;
    if (fmt_.layout == Layout::HWC) return (y * width_ + x) * channels_ + slot;
    return (slot * height_ + y) * width_ + x;
  }

 private:
  ImageFormat fmt_;
  std::size_t width_;
  std::size_t height_;
  std::size_t channels_;
};

std::uint8_t quantize(float v) {
  if (!(v >= 0.0f && v <= 1.0f)) {
    throw Error(Errc::ValueOutOfRange, fmt::format("F32 sample {} outside [0, 1]", v));
  }
  return static_cast<std::uint8_t>(std::lround(static_cast<double>(v) * 255.0));
}

template <typename T, typename Load>
Image canonicalize(std::span<const T> buffer, ImageFormat fmt, std::size_t width,
                   std::size_t height, std::size_t channels, Load load) {
  check_channels(channels);
  check_extent(width, height);
  const std::size_t expected = width * height * channels;
  if (buffer.size() != expected) {
    throw Error(Errc::LengthMismatch,
                fmt::format("buffer holds {} samples, {}x{}x{} needs {}", buffer.size(), channels,
                            height, width, expected));
  }
  const ExternalIndex index(fmt, width, height, channels);
  std::vector<std::uint8_t> out(expected);
  std::size_t o = 0;
  for (std::size_t c = 0; c < channels; ++c) {
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) out[o++] = load(buffer[index(c, y, x)]);
    }
  }
  return Image(width, height, channels, std::move(out));
}

void require_dtype(ImageFormat fmt, DType dtype) {
  if (fmt.dtype != dtype) {
    throw Error(Errc::InvalidArgument,
                fmt::format("buffer element type does not match format {}", to_string(fmt)));
  }
}

}  // namespace

std::array<ImageFormat, 8> all_image_formats() noexcept {
  std::array<ImageFormat, 8> out{};
  std::size_t i = 0;
  for (auto dtype : {DType::U8, DType::F32}) {
    for (auto layout : {Layout::CHW, Layout::HWC}) {
      for (auto order : {ChannelOrder::RGB, ChannelOrder::BGR}) out[i++] = {layout, order, dtype};
    }
  }
  return out;
}

std::string to_string(ImageFormat fmt) {
  return fmt::format("{}-{}-{}", fmt.layout == Layout::CHW ? "CHW" : "HWC",
                     fmt.order == ChannelOrder::RGB ? "RGB" : "BGR",
                     fmt.dtype == DType::U8 ? "U8" : "F32");
}

ImageFormat parse_image_format(std::string_view name) {
  for (const auto& fmt : all_image_formats()) {
    if (to_string(fmt) == name) return fmt;
  }
  throw Error(Errc::InvalidArgument, fmt::format("unknown image format '{}'", name));
}

Image::Image(std::size_t width, std::size_t height, std::size_t channels,
             std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
  check_channels(channels_);
  check_extent(width_, height_);
  if (data_.size() != width_ * height_ * channels_) {
    throw Error(Errc::LengthMismatch, fmt::format("buffer holds {} bytes, {}x{}x{} needs {}",
                                                  data_.size(), channels_, height_, width_,
                                                  width_ * height_ * channels_));
  }
}

Image Image::blank(std::size_t width, std::size_t height, std::size_t channels) {
  return Image(width, height, channels, std::vector<std::uint8_t>(width * height * channels, 0));
}

Image image_from_buffer(std::span<const std::uint8_t> buffer, ImageFormat fmt, std::size_t width,
                        std::size_t height, std::size_t channels) {
  require_dtype(fmt, DType::U8);
  return canonicalize(buffer, fmt, width, height, channels, [](std::uint8_t v) { return v; });
}

Image image_from_buffer(std::span<const float> buffer, ImageFormat fmt, std::size_t width,
                        std::size_t height, std::size_t channels) {
  require_dtype(fmt, DType::F32);
  return canonicalize(buffer, fmt, width, height, channels, quantize);
}

Image image_from_buffer(const PixelBuffer& buffer, ImageFormat fmt, std::size_t width,
                        std::size_t height, std::size_t channels) {
  return std::visit(
      [&](const auto& v) {
        return image_from_buffer(std::span(v.data(), v.size()), fmt, width, height, channels);
      },
      buffer);
}

Image image_from_bytes(std::span<const std::byte> bytes, ImageFormat fmt, std::size_t width,
                       std::size_t height, std::size_t channels) {
  if (fmt.dtype == DType::U8) {
    return image_from_buffer(
        std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()), fmt, width,
        height, channels);
  }
  if (bytes.size() % sizeof(float) != 0) {
    throw Error(Errc::LengthMismatch,
                fmt::format("{} bytes is not a whole number of F32 samples", bytes.size()));
  }
  // Copy out to honor float alignment regardless of the caller's buffer.
  std::vector<float> samples(bytes.size() / sizeof(float));
  std::memcpy(samples.data(), bytes.data(), bytes.size());
  return image_from_buffer(std::span<const float>(samples), fmt, width, height, channels);
}

PixelBuffer image_convert(const Image& image, ImageFormat fmt) {
  const ExternalIndex index(fmt, image.width(), image.height(), image.channels());
  const auto convert = [&](auto& out, auto map) {
    out.resize(image.size());
    for (std::size_t c = 0; c < image.channels(); ++c) {
      for (std::size_t y = 0; y < image.height(); ++y) {
        for (std::size_t x = 0; x < image.width(); ++x) out[index(c, y, x)] = map(image.at(c, y, x));
      }
    }
  };
  if (fmt.dtype == DType::U8) {
    std::vector<std::uint8_t> out;
    convert(out, [](std::uint8_t v) { return v; });
    return out;
  }
  std::vector<float> out;
  convert(out, [](std::uint8_t v) { return static_cast<float>(v / 255.0); });
  return out;
}

std::vector<double> image_to_unit_vector(const Image& image) {
  std::vector<double> out(image.size());
  const auto data = image.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = data[i] / 255.0;
  return out;
}

// --- PNM ------------------------------------------------------------------

namespace {

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t read_number(const char* what) {
    skip_space_and_comments();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (++digits > 9) throw Error(Errc::CorruptHeader, fmt::format("{} too large", what));
      ++pos_;
    }
    if (digits == 0) throw Error(Errc::CorruptHeader, fmt::format("missing {}", what));
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_space() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw Error(Errc::CorruptHeader, "missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }

 private:
  static bool is_space(std::uint8_t c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image decode_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw Error(Errc::UnsupportedFormat, "only binary PPM (P6) and PGM (P5) are supported");
  }
  const std::size_t channels = bytes[1] == '6' ? 3 : 1;
  PnmHeaderReader reader(bytes);
  reader.advance(2);
  const std::size_t width = reader.read_number("width");
  const std::size_t height = reader.read_number("height");
  const std::size_t maxval = reader.read_number("maxval");
  reader.expect_single_space();
  if (width == 0 || height == 0) throw Error(Errc::CorruptHeader, "zero image extent");
  if (maxval != 255) {
    throw Error(Errc::UnsupportedFormat, fmt::format("maxval {} (only 255 is supported)", maxval));
  }
  const std::size_t payload = width * height * channels;
  if (bytes.size() - reader.position() < payload) {
    throw Error(Errc::CorruptHeader,
                fmt::format("truncated raster: {} of {} bytes",
                            bytes.size() - reader.position(), payload));
  }
  return image_from_buffer(bytes.subspan(reader.position(), payload),
                           {Layout::HWC, ChannelOrder::RGB, DType::U8}, width, height, channels);
}

std::vector<std::uint8_t> encode_pnm(const Image& image) {
  const std::string header = fmt::format("P{}\n{} {}\n255\n", image.channels() == 3 ? 6 : 5,
                                         image.width(), image.height());
  const auto raster =
      std::get<std::vector<std::uint8_t>>(image_convert(image, {Layout::HWC, ChannelOrder::RGB, DType::U8}));
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), raster.begin(), raster.end());
  return out;
}

Image image_open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_pnm(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.detail()));
  }
}

void image_save(const std::filesystem::path& path, const Image& image) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, fmt::format("cannot write {}", path.string()));
  const auto bytes = encode_pnm(image);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::IoError, fmt::format("short write to {}", path.string()));
}

}  // namespace odr
