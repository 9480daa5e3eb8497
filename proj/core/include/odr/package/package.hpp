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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "odr/package/manifest.hpp"

namespace odr {

using Payloads = std::map<std::string, std::vector<std::uint8_t>>;

/// A directory holding manifest.json plus the payload files it lists.
struct ModelPackage {
  std::filesystem::path root;
  Manifest manifest;

  std::filesystem::path payload_path(std::string_view relative) const;
  std::vector<std::uint8_t> read_payload(std::string_view relative) const;
};

/// Writes payloads and a manifest whose checksums are computed from the
/// payload bytes. Pre-filled checksums must agree with the bytes.
///
/// Throws PathEscape, DestNotEmpty, ChecksumMismatch, SchemaViolation (the
/// payload keys differ from model_paths), IoError.
ModelPackage package_write(Manifest manifest, const Payloads& payloads,
                           const std::filesystem::path& dest);

/// Parses manifest.json and re-hashes every payload.
/// Throws MissingManifest, SchemaViolation, MissingPayload, ChecksumMismatch
/// (the message names the offending file).
Manifest package_validate(const std::filesystem::path& root);

/// package_validate wrapped into a ModelPackage.
ModelPackage package_open(const std::filesystem::path& root);

}  // namespace odr
