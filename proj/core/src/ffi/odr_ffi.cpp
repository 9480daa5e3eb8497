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

#include "odr/odr_ffi.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "odr/engine/image.hpp"
#include "odr/error.hpp"
#include "odr/learners/centroid.hpp"
#include "odr/package/manifest.hpp"

namespace {

constexpr std::size_t kMaxLiveHandles = 1 << 16;

thread_local std::string t_last_error;

struct Entry {
  std::mutex mutex;
  odr::CentroidLearner model;
};

class HandleTable {
 public:
  OdrStatus insert(std::shared_ptr<Entry> entry, OdrHandle& out) {
    std::lock_guard lock(mutex_);
    if (entries_.size() >= kMaxLiveHandles || next_ == UINT64_MAX) {
      return fail(ODR_CAPACITY, "handle table is full");
    }
    out = next_++;
    entries_.emplace(out, std::move(entry));
    return ODR_OK;
  }

  std::shared_ptr<Entry> find(OdrHandle h) {
    std::lock_guard lock(mutex_);
    const auto it = entries_.find(h);
    return it == entries_.end() ? nullptr : it->second;
  }

  bool erase(OdrHandle h) {
    std::lock_guard lock(mutex_);
    return entries_.erase(h) == 1;
  }

  static OdrStatus fail(OdrStatus status, std::string message) {
    t_last_error = std::move(message);
    return status;
  }

 private:
  std::mutex mutex_;
  std::map<OdrHandle, std::shared_ptr<Entry>> entries_;
  OdrHandle next_ = 1;
};

HandleTable& table() {
  static auto* t = new HandleTable();
  return *t;
}

OdrStatus fail(OdrStatus status, std::string message) { return HandleTable::fail(status, std::move(message)); }

OdrStatus load_status(odr::Errc code) {
  return code == odr::Errc::FileNotFound ? ODR_NOT_FOUND : ODR_BAD_PACKAGE;
}

}  // namespace

extern "C" {

OdrStatus odr_load_centroid(const char* path_utf8, OdrHandle* out_handle) {
  if (path_utf8 == nullptr || out_handle == nullptr) return fail(ODR_BAD_INPUT, "null argument");
  try {
    const std::filesystem::path root(reinterpret_cast<const char8_t*>(path_utf8));
    if (!std::filesystem::exists(root)) return fail(ODR_NOT_FOUND, "no such path: " + root.string());
    auto entry = std::make_shared<Entry>();
    entry->model.load(root);
    OdrHandle h = 0;
    const OdrStatus s = table().insert(std::move(entry), h);
    if (s == ODR_OK) *out_handle = h;
    return s;
  } catch (const odr::Error& e) {
    return fail(load_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(ODR_INTERNAL, e.what());
  } catch (...) {
    return fail(ODR_INTERNAL, "unknown failure");
  }
}

OdrStatus odr_infer_centroid(OdrHandle handle, const OdrImageDesc* image, OdrCategoryOut* out_category) {
  try {
    const auto entry = table().find(handle);
    if (!entry) return fail(ODR_BAD_HANDLE, "unknown handle " + std::to_string(handle));
    if (image == nullptr || out_category == nullptr) return fail(ODR_BAD_INPUT, "null argument");
    if (image->data == nullptr && image->length_bytes != 0) return fail(ODR_BAD_INPUT, "null pixel data");
    if (image->layout > ODR_LAYOUT_HWC || image->channel_order > ODR_ORDER_BGR ||
        image->dtype > ODR_DTYPE_F32) {
      return fail(ODR_BAD_INPUT, "unknown layout, channel order or dtype code");
    }
    const odr::ImageFormat format{static_cast<odr::Layout>(image->layout),
                                  static_cast<odr::ChannelOrder>(image->channel_order),
                                  static_cast<odr::DType>(image->dtype)};
    const std::span<const std::byte> bytes(reinterpret_cast<const std::byte*>(image->data),
                                           static_cast<std::size_t>(image->length_bytes));
    odr::Category result;
    try {
      const odr::Image img = odr::image_from_bytes(bytes, format, image->width, image->height, image->channels);
      std::lock_guard lock(entry->mutex);
      result = entry->model.classify(odr::image_to_unit_vector(img));
    } catch (const odr::Error& e) {
      return fail(ODR_BAD_INPUT, e.what());
    }
    out_category->index = static_cast<std::uint32_t>(result.index);
    out_category->confidence = result.confidence.value_or(0.0);
    std::memset(out_category->description, 0, sizeof out_category->description);
    const std::string& text = result.description.value_or("");
    std::memcpy(out_category->description, text.data(),
                std::min(text.size(), sizeof out_category->description - 1));
    return ODR_OK;
  } catch (const std::exception& e) {
    return fail(ODR_INTERNAL, e.what());
  } catch (...) {
    return fail(ODR_INTERNAL, "unknown failure");
  }
}

OdrStatus odr_free(OdrHandle handle) {
  try {
    if (!table().erase(handle)) return fail(ODR_BAD_HANDLE, "unknown handle " + std::to_string(handle));
    return ODR_OK;
  } catch (...) {
    return fail(ODR_INTERNAL, "unknown failure");
  }
}

OdrStatus odr_last_error(char* buffer, size_t capacity) {
  if (buffer == nullptr || capacity == 0) return ODR_BAD_INPUT;
  const std::size_t n = std::min(t_last_error.size(), capacity - 1);
  std::memcpy(buffer, t_last_error.data(), n);
  buffer[n] = '\0';
  return ODR_OK;
}

}  // extern "C"
