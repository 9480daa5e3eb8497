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


#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <random>
#include <thread>

#include "odr/engine/image.hpp"
#include "odr/io.hpp"
#include "odr/learners/centroid.hpp"
#include "odr/odr_ffi.h"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;
using odr::testing::fixture;
using odr::testing::TempDir;

std::string last_error() {
  char buf[512];
  odr_last_error(buf, sizeof buf);
  return buf;
}

OdrImageDesc describe(const std::vector<std::uint8_t>& bytes, std::uint32_t w, std::uint32_t h, std::uint32_t c,
                      std::uint32_t layout = ODR_LAYOUT_CHW, std::uint32_t order = ODR_ORDER_RGB,
                      std::uint32_t dtype = ODR_DTYPE_U8) {
  return {bytes.data(), bytes.size(), w, h, c, layout, order, dtype};
}

class Ffi : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(odr_load_centroid(fixture("centroid_pkg").c_str(), &handle_), ODR_OK) << last_error();
    ASSERT_NE(handle_, 0u);
    reference_.load(fixture("centroid_pkg"));
  }
  void TearDown() override {
    if (handle_ != 0) odr_free(handle_);
  }
  OdrHandle handle_ = 0;
  odr::CentroidLearner reference_;
};

TEST_F(Ffi, MatchesInProcessOnRandomProbes) {
  std::mt19937 gen(100);
  const std::size_t w = 4, h = 4;
  for (int probe = 0; probe < 100; ++probe) {
    std::vector<std::uint8_t> bytes(w * h);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(gen());
    const auto desc = describe(bytes, w, h, 1);
    OdrCategoryOut out{};
    ASSERT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_OK) << last_error();
    const odr::Image img(w, h, 1, bytes);
    const auto expected = reference_.classify(odr::image_to_unit_vector(img));
    EXPECT_EQ(static_cast<std::int64_t>(out.index), expected.index);
    EXPECT_NEAR(out.confidence, *expected.confidence, 1e-12);
    EXPECT_STREQ(out.description, expected.description->c_str());
  }
}

TEST_F(Ffi, FixtureImagesAndExternalFormats) {
  for (const auto& [name, label] : {std::pair{"probe_a.pgm", 0u}, std::pair{"probe_b.pgm", 1u}}) {
    const auto img = odr::image_open(fixture(name));
    const auto canonical = std::vector<std::uint8_t>(img.data().begin(), img.data().end());
    const auto desc = describe(canonical, img.width(), img.height(), 1);
    OdrCategoryOut out{};
    ASSERT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_OK);
    EXPECT_EQ(out.index, label);

    // The same pixels as HWC float samples give the same answer.
    const auto floats = std::get<std::vector<float>>(
        odr::image_convert(img, {odr::Layout::HWC, odr::ChannelOrder::RGB, odr::DType::F32}));
    std::vector<std::uint8_t> raw(floats.size() * sizeof(float));
    std::memcpy(raw.data(), floats.data(), raw.size());
    const auto fdesc = describe(raw, img.width(), img.height(), 1, ODR_LAYOUT_HWC, ODR_ORDER_RGB, ODR_DTYPE_F32);
    OdrCategoryOut fout{};
    ASSERT_EQ(odr_infer_centroid(handle_, &fdesc, &fout), ODR_OK) << last_error();
    EXPECT_EQ(fout.index, out.index);
    EXPECT_EQ(fout.confidence, out.confidence);
  }
}

TEST_F(Ffi, BadInput) {
  std::vector<std::uint8_t> bytes(15);
  OdrCategoryOut out{};
  auto desc = describe(bytes, 4, 4, 1);
  EXPECT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_BAD_INPUT);
  EXPECT_FALSE(last_error().empty());
  bytes.resize(16);
  desc = describe(bytes, 4, 4, 1, 7);
  EXPECT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_BAD_INPUT);
  desc = describe(bytes, 4, 4, 1, ODR_LAYOUT_CHW, ODR_ORDER_RGB, 9);
  EXPECT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_BAD_INPUT);
  desc = describe(bytes, 4, 4, 2);
  EXPECT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_BAD_INPUT);
  desc = describe(bytes, 4, 4, 1);
  EXPECT_EQ(odr_infer_centroid(handle_, nullptr, &out), ODR_BAD_INPUT);
  EXPECT_EQ(odr_infer_centroid(handle_, &desc, nullptr), ODR_BAD_INPUT);
  desc.data = nullptr;
  EXPECT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_BAD_INPUT);
  // Right sample count, wrong model dimension.
  std::vector<std::uint8_t> wide(8 * 4);
  desc = describe(wide, 8, 4, 1);
  EXPECT_EQ(odr_infer_centroid(handle_, &desc, &out), ODR_BAD_INPUT);
}

TEST(FfiLoad, Errors) {
  OdrHandle h = 12345;
  EXPECT_EQ(odr_load_centroid("/nonexistent/odr/pkg", &h), ODR_NOT_FOUND);
  EXPECT_EQ(h, 12345u);
  EXPECT_EQ(odr_load_centroid(nullptr, &h), ODR_BAD_INPUT);
  EXPECT_EQ(odr_load_centroid(fixture("centroid_pkg").c_str(), nullptr), ODR_BAD_INPUT);

  TempDir tmp;
  fs::copy(fixture("centroid_pkg"), tmp / "pkg", fs::copy_options::recursive);
  auto bytes = odr::read_file(tmp / "pkg" / "centroids.bin");
  bytes[20] ^= 0x01;
  odr::write_file(tmp / "pkg" / "centroids.bin", bytes);
  EXPECT_EQ(odr_load_centroid((tmp / "pkg").c_str(), &h), ODR_BAD_PACKAGE);
  EXPECT_NE(last_error().find("centroids.bin"), std::string::npos);
  EXPECT_EQ(h, 12345u);
}

TEST(FfiHandles, FreeSemantics) {
  OdrHandle h = 0;
  ASSERT_EQ(odr_load_centroid(fixture("centroid_pkg").c_str(), &h), ODR_OK);
  EXPECT_EQ(odr_free(h), ODR_OK);
  EXPECT_EQ(odr_free(h), ODR_BAD_HANDLE);
  EXPECT_EQ(odr_free(0), ODR_BAD_HANDLE);
  std::vector<std::uint8_t> bytes(16);
  const auto desc = describe(bytes, 4, 4, 1);
  OdrCategoryOut out{};
  EXPECT_EQ(odr_infer_centroid(h, &desc, &out), ODR_BAD_HANDLE);

  OdrHandle next = 0;
  ASSERT_EQ(odr_load_centroid(fixture("centroid_pkg").c_str(), &next), ODR_OK);
  EXPECT_NE(next, h);
  odr_free(next);
}

TEST(FfiHandles, LastErrorTruncates) {
  odr_free(0);
  char small[8];
  std::memset(small, 'x', sizeof small);
  EXPECT_EQ(odr_last_error(small, sizeof small), ODR_OK);
  EXPECT_EQ(std::strlen(small), 7u);
  EXPECT_EQ(odr_last_error(nullptr, 4), ODR_BAD_INPUT);
  EXPECT_STREQ(odr_status_name(ODR_BAD_HANDLE), "BAD_HANDLE");
}

TEST(FfiHandles, ConcurrentDistinctAndSharedHandles) {
  OdrHandle shared = 0;
  ASSERT_EQ(odr_load_centroid(fixture("centroid_pkg").c_str(), &shared), ODR_OK);
  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      std::mt19937 gen(t);
      for (int round = 0; round < 20; ++round) {
        OdrHandle own = 0;
        if (odr_load_centroid(fixture("centroid_pkg").c_str(), &own) != ODR_OK) ++failures;
        std::vector<std::uint8_t> bytes(16);
        for (auto& b : bytes) b = static_cast<std::uint8_t>(gen());
        const auto desc = describe(bytes, 4, 4, 1);
        OdrCategoryOut a{};
        OdrCategoryOut b{};
        if (odr_infer_centroid(own, &desc, &a) != ODR_OK) ++failures;
        if (odr_infer_centroid(shared, &desc, &b) != ODR_OK) ++failures;
        if (a.index != b.index || a.confidence != b.confidence) ++failures;
        if (odr_free(own) != ODR_OK) ++failures;
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(failures.load(), 0);
  EXPECT_EQ(odr_free(shared), ODR_OK);
}

}  // namespace
