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

#include "odr/package/package.hpp"

#include <set>

#include <fmt/format.h>

#include "odr/error.hpp"
#include "odr/io.hpp"
#include "odr/package/sha256.hpp"

namespace fs = std::filesystem;

namespace odr {

fs::path ModelPackage::payload_path(std::string_view relative) const {
  check_payload_path(relative);
  return root / fs::path(std::string(relative));
}

std::vector<std::uint8_t> ModelPackage::read_payload(std::string_view relative) const {
  return read_file(payload_path(relative));
}

ModelPackage package_write(Manifest manifest, const Payloads& payloads, const fs::path& dest) {
  for (const auto& path : manifest.model_paths) check_payload_path(path);
  for (const auto& [path, bytes] : payloads) check_payload_path(path);

  const std::set<std::string> listed(manifest.model_paths.begin(), manifest.model_paths.end());
  std::set<std::string> provided;
  for (const auto& [path, bytes] : payloads) provided.insert(path);
  if (listed != provided || listed.size() != manifest.model_paths.size()) {
    throw Error(Errc::SchemaViolation, "payload files must match model_paths exactly");
  }

  std::error_code ec;
  if (fs::exists(dest, ec) && (!fs::is_directory(dest, ec) || !fs::is_empty(dest, ec))) {
    throw Error(Errc::DestNotEmpty, dest.string());
  }

  for (const auto& [path, bytes] : payloads) {
    const std::string digest = sha256_hex(bytes);
    const auto it = manifest.checksums.find(path);
    if (it != manifest.checksums.end() && it->second != digest) {
      throw Error(Errc::ChecksumMismatch,
                  fmt::format("{} (manifest says {}, payload hashes to {})", path, it->second, digest));
    }
    manifest.checksums[path] = digest;
  }

  // Schema check through the same parser package_validate uses.
  const std::string text = manifest_to_json(manifest);
  manifest_from_json(text);

  fs::create_directories(dest, ec);
  if (ec) throw Error(Errc::IoError, fmt::format("cannot create {}: {}", dest.string(), ec.message()));
  for (const auto& [path, bytes] : payloads) write_file(dest / fs::path(path), bytes);
  write_text_file(dest / kManifestFileName, text);
  return package_open(dest);
}

Manifest package_validate(const fs::path& root) {
  const fs::path manifest_path = root / kManifestFileName;
  std::error_code ec;
  if (!fs::is_regular_file(manifest_path, ec)) {
    throw Error(Errc::MissingManifest, manifest_path.string());
  }
  Manifest manifest = manifest_from_json(read_text_file(manifest_path));
  for (const auto& path : manifest.model_paths) {
    const auto it = manifest.checksums.find(path);
    if (it == manifest.checksums.end()) {
      throw Error(Errc::SchemaViolation, fmt::format("no checksum for '{}'", path));
    }
    const fs::path file = root / fs::path(path);
    if (!fs::is_regular_file(file, ec)) throw Error(Errc::MissingPayload, path);
    if (sha256_file_hex(file) != it->second) throw Error(Errc::ChecksumMismatch, path);
  }
  return manifest;
}

ModelPackage package_open(const fs::path& root) { return {root, package_validate(root)}; }

}  // namespace odr
