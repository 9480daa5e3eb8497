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
#include <span>
#include <string>
#include <vector>

namespace odr {

struct ZipEntry {
  std::string name;
  std::vector<std::uint8_t> data;
};

/// Reads a zip archive (stored and deflate entries, no zip64, no
/// encryption). Directory entries are skipped; CRC-32 is verified.
/// Throws InvalidArchive.
std::vector<ZipEntry> zip_read(std::span<const std::uint8_t> archive);

/// Writes a zip archive; entries are deflated unless `store_only`.
std::vector<std::uint8_t> zip_write(const std::vector<ZipEntry>& entries, bool store_only = false);

}  // namespace odr
