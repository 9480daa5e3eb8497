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

#include <set>

#include "odr/error.hpp"
#include "odr/io.hpp"
#include "odr/rng.hpp"
#include "odr/scalar.hpp"
#include "odr_gtest.hpp"
#include "test_support.hpp"

namespace odr {
namespace {

TEST(Error, WhatCarriesCodeNameAndDetail) {
  const Error e(Errc::ChecksumMismatch, "model.bin");
  EXPECT_STREQ(e.what(), "ChecksumMismatch: model.bin");
  EXPECT_EQ(e.code(), Errc::ChecksumMismatch);
  EXPECT_EQ(e.detail(), "model.bin");
}

TEST(Error, EveryCodeHasADistinctName) {
  std::set<std::string_view> names;
  for (int i = 0; i <= static_cast<int>(Errc::InferFailed); ++i) {
    const auto name = errc_name(static_cast<Errc>(i));
    EXPECT_FALSE(name.empty());
    names.insert(name);
  }
  EXPECT_EQ(names.size(), static_cast<std::size_t>(Errc::InferFailed) + 1);
}

// Reference values from an independent Python implementation of the same
// generators.
TEST(Rng, SplitMixMatchesReferenceStream) {
  SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(sm.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(sm.next(), 0x06c45d188009454fULL);
}

TEST(Rng, XoshiroMatchesReferenceStream) {
  Rng rng(42);
  EXPECT_EQ(rng.next(), 0x15780b2e0c2ec716ULL);
  EXPECT_EQ(rng.next(), 0x6104d9866d113a7eULL);
  EXPECT_EQ(rng.next(), 0xae17533239e499a1ULL);
  EXPECT_EQ(rng.next(), 0xecb8ad4703b360a1ULL);
}

TEST(Rng, UniformAndBelowStayInRange) {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(rng.below(13), 13u);
  }
}

TEST(Rng, BelowCoversEveryResidue) {
  Rng rng(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(rng.below(10));
  EXPECT_EQ(seen.size(), 10u);
}

TEST(Rng, NormalHasRoughlyUnitMoments) {
  Rng rng(11);
  double sum = 0.0;
  double sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    ASSERT_TRUE(std::isfinite(x));
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.02);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Rng, SameSeedSameStream) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Scalar, RendersEachAlternative) {
  EXPECT_EQ(scalar_to_string(true), "true");
  EXPECT_EQ(scalar_to_string(std::int64_t{-3}), "-3");
  EXPECT_EQ(scalar_to_string(0.5), "0.5");
  EXPECT_EQ(scalar_to_string(std::string("cpu")), "cpu");
}

TEST(Io, MissingFileIsFileNotFound) {
  EXPECT_ODR_ERROR(read_file("/nonexistent/odr/file"), FileNotFound);
}

TEST(Io, WriteCreatesParentsAndRoundTrips) {
  testing::TempDir dir;
  const auto path = dir / "a/b/c.txt";
  write_text_file(path, "hello");
  EXPECT_EQ(read_text_file(path), "hello");
  const std::vector<std::uint8_t> bytes{0, 1, 255};
  write_file(dir / "bin", bytes);
  EXPECT_EQ(read_file(dir / "bin"), bytes);
}

}  // namespace
}  // namespace odr
