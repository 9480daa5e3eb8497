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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace odr {

/// Materializes a model package under `cache_dir` and returns its directory.
///
/// Accepted sources: file:// pointing at a package directory or a zip
/// archive, and http(s):// pointing at a zip archive. Entries live in
/// cache_dir/<first 2 hex>/<sha256>/, keyed by the SHA-256 of the archive
/// bytes; a directory source is keyed by the SHA-256 of its manifest.json,
/// which in turn pins every payload checksum.
///
/// A URI that was fetched before is served from the cache without touching
/// the source. Concurrent fetches of one URI are serialized on an exclusive
/// lock file; the losers reuse the winner's entry.
///
/// Throws UnsupportedScheme, TransferFailed, DigestMismatch (the entry is
/// removed), InvalidArchive, and the package_validate errors.
std::filesystem::path package_fetch(std::string_view uri, const std::filesystem::path& cache_dir,
                                    std::optional<std::string> expected_sha256 = std::nullopt);

}  // namespace odr
