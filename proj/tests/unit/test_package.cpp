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

#include <filesystem>
#include <random>

#include "odr/io.hpp"
#include "odr/package/manifest.hpp"
#include "odr/package/package.hpp"
#include "odr/package/sha256.hpp"
#include "odr/package/zip.hpp"
#include "odr_gtest.hpp"
#include "test_support.hpp"

namespace odr {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

Manifest sample_manifest() {
  Manifest m;
  m.name = "sample";
  m.model_paths = {"model.bin", "sub/extra.txt"};
  m.classes = std::vector<std::string>{"cat", "dog"};
  m.optimized = true;
  m.optimizer_info = {{"pass", "fold"}};
  m.inference_params = {{"temperature", 2.5}, {"top_k", std::int64_t{3}}, {"flag", true}, {"mode", std::string("fast")}};
  m.metadata = {{"author", "odr"}};
  return m;
}

Payloads sample_payloads() {
  return {{"model.bin", {1, 2, 3}}, {"sub/extra.txt", {'h', 'i'}}};
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(std::string_view("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(std::string_view("")),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  const std::vector<std::uint8_t> bytes{1, 2, 3};
  EXPECT_EQ(sha256_hex(bytes), "039058c6f2c0cb492c533b0a4d14ef77cc0f78abccced5287d84a1a2011cfb81");
}

TEST(Sha256, IncrementalMatchesOneShot) {
  Sha256 h;
  h.update(std::string_view("a"));
  h.update(std::string_view("bc"));
  EXPECT_EQ(h.hex_digest(), sha256_hex(std::string_view("abc")));
  EXPECT_TRUE(is_sha256_hex(sha256_hex(std::string_view("x"))));
  EXPECT_FALSE(is_sha256_hex("ABC"));
}

TEST(Manifest, JsonRoundTrip) {
  Manifest m = sample_manifest();
  m.checksums = {{"model.bin", std::string(64, 'a')}, {"sub/extra.txt", std::string(64, 'b')}};
  EXPECT_EQ(manifest_from_json(manifest_to_json(m)), m);
}

TEST(Manifest, RejectsWrongSchemaVersion) {
  Manifest m = sample_manifest();
  m.schema_version = 2;
  EXPECT_ODR_ERROR(manifest_from_json(manifest_to_json(m)), SchemaViolation);
  EXPECT_ODR_ERROR(manifest_from_json("{not json"), SchemaViolation);
}

TEST(Manifest, PayloadPathRules) {
  EXPECT_NO_THROW(check_payload_path("model.bin"));
  EXPECT_NO_THROW(check_payload_path("a/b/c.bin"));
  for (const char* bad : {"../x", "/abs", "a/../b", "a\\b", "", "a//b", "./a", "a/"}) {
    EXPECT_ODR_ERROR(check_payload_path(bad), PathEscape) << bad;
  }
}

TEST(PackageWrite, ComputesChecksums) {
  TempDir tmp;
  Manifest m;
  m.name = "one";
  m.model_paths = {"model.bin"};
  const auto pkg = package_write(m, {{"model.bin", {1, 2, 3}}}, tmp / "pkg");
  EXPECT_EQ(pkg.manifest.checksums.at("model.bin"),
            "039058c6f2c0cb492c533b0a4d14ef77cc0f78abccced5287d84a1a2011cfb81");
  EXPECT_EQ(pkg.read_payload("model.bin"), (std::vector<std::uint8_t>{1, 2, 3}));
}

TEST(PackageWrite, ValidateRoundTripPreservesManifest) {
  TempDir tmp;
  const auto pkg = package_write(sample_manifest(), sample_payloads(), tmp / "pkg");
  EXPECT_EQ(package_validate(tmp / "pkg"), pkg.manifest);
  EXPECT_EQ(package_open(tmp / "pkg").manifest, pkg.manifest);
}

TEST(PackageWrite, RejectsEscapingPath) {
  TempDir tmp;
  Manifest m;
  m.name = "bad";
  m.model_paths = {"../x"};
  EXPECT_ODR_ERROR(package_write(m, {{"../x", {0}}}, tmp / "pkg"), PathEscape);
  EXPECT_FALSE(fs::exists(tmp.path().parent_path() / "x"));
}

TEST(PackageWrite, RejectsNonEmptyDestination) {
  TempDir tmp;
  write_text_file(tmp / "occupied", "x");
  EXPECT_ODR_ERROR(package_write(sample_manifest(), sample_payloads(), tmp.path()), DestNotEmpty);
}

TEST(PackageWrite, RejectsDisagreeingPrefilledChecksum) {
  TempDir tmp;
  Manifest m = sample_manifest();
  m.checksums["model.bin"] = std::string(64, '0');
  EXPECT_ODR_ERROR(package_write(m, sample_payloads(), tmp / "pkg"), ChecksumMismatch);
}

TEST(PackageValidate, FlippedByteNamesTheFile) {
  TempDir tmp;
  package_write(sample_manifest(), sample_payloads(), tmp / "pkg");
  auto bytes = read_file(tmp / "pkg" / "sub/extra.txt");
  bytes[0] ^= 0x01;
  write_file(tmp / "pkg" / "sub/extra.txt", bytes);
  try {
    package_validate(tmp / "pkg");
    FAIL() << "tamper not detected";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ChecksumMismatch);
    EXPECT_NE(std::string(e.what()).find("sub/extra.txt"), std::string::npos);
  }
}

TEST(PackageValidate, MissingPieces) {
  TempDir tmp;
  package_write(sample_manifest(), sample_payloads(), tmp / "pkg");
  fs::remove(tmp / "pkg" / "model.bin");
  EXPECT_ODR_ERROR(package_validate(tmp / "pkg"), MissingPayload);
  fs::remove(tmp / "pkg" / "manifest.json");
  EXPECT_ODR_ERROR(package_validate(tmp / "pkg"), MissingManifest);
}

// Property: any single-byte change in any payload is detected.
TEST(PackageValidate, EverySingleByteTamperDetected) {
  TempDir tmp;
  std::mt19937 gen(17);
  Payloads payloads{{"a.bin", std::vector<std::uint8_t>(97)}, {"b/c.bin", std::vector<std::uint8_t>(31)}};
  for (auto& [name, bytes] : payloads)
    for (auto& b : bytes) b = static_cast<std::uint8_t>(gen());
  Manifest m;
  m.name = "prop";
  m.model_paths = {"a.bin", "b/c.bin"};
  package_write(m, payloads, tmp / "pkg");
  for (const auto& [name, original] : payloads) {
    for (std::size_t i = 0; i < original.size(); ++i) {
      auto bytes = original;
      bytes[i] = static_cast<std::uint8_t>(bytes[i] ^ (1u + gen() % 255u));
      write_file(tmp / "pkg" / name, bytes);
      ASSERT_ODR_ERROR(package_validate(tmp / "pkg"), ChecksumMismatch);
    }
    write_file(tmp / "pkg" / name, original);
  }
  EXPECT_NO_THROW(package_validate(tmp / "pkg"));
}

TEST(Zip, ReadsDeflatedFixture) {
  const auto entries = zip_read(read_file(testing::fixture("centroid_pkg.zip")));
  std::map<std::string, std::vector<std::uint8_t>> by_name;
  for (const auto& e : entries) by_name[e.name] = e.data;
  ASSERT_TRUE(by_name.count("manifest.json"));
  ASSERT_TRUE(by_name.count("centroids.bin"));
  EXPECT_EQ(by_name["centroids.bin"], read_file(testing::fixture("centroid_pkg/centroids.bin")));
}

TEST(Zip, ReadsStoredNestedFixture) {
  const auto entries = zip_read(read_file(testing::fixture("centroid_pkg_nested.zip")));
  bool found = false;
  for (const auto& e : entries) found |= e.name == "centroid_pkg/manifest.json";
  EXPECT_TRUE(found);
}

TEST(Zip, WriteReadRoundTrip) {
  std::mt19937 gen(3);
  std::vector<ZipEntry> entries{{"empty", {}}, {"zeros.bin", std::vector<std::uint8_t>(5000, 0)}, {"noise.bin", {}}};
  for (int i = 0; i < 777; ++i) entries[2].data.push_back(static_cast<std::uint8_t>(gen()));
  for (bool store : {false, true}) {
    const auto archive = zip_write(entries, store);
    const auto back = zip_read(archive);
    ASSERT_EQ(back.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      EXPECT_EQ(back[i].name, entries[i].name);
      EXPECT_EQ(back[i].data, entries[i].data);
    }
  }
  EXPECT_EQ(zip_write(entries), zip_write(entries));
}

TEST(Zip, CorruptionIsInvalidArchive) {
  const std::vector<ZipEntry> entries{{"a.txt", std::vector<std::uint8_t>(200, 'a')}};
  auto archive = zip_write(entries, true);
  EXPECT_ODR_ERROR(zip_read(std::span(archive).first(archive.size() / 2)), InvalidArchive);
  archive[40] ^= 0xff;  // inside the stored data: CRC check fails
  EXPECT_ODR_ERROR(zip_read(archive), InvalidArchive);
  const std::vector<std::uint8_t> junk(100, 7);
  EXPECT_ODR_ERROR(zip_read(junk), InvalidArchive);
}

}  // namespace
}  // namespace odr
