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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odr/scalar.hpp"

namespace odr {

inline constexpr std::string_view kManifestFileName = "manifest.json";

enum class ModelFormat { Onnx, Native };

std::string_view to_string(ModelFormat format) noexcept;

/// Contents of a package's manifest.json.
///
/// The JSON field names are exactly the member names. ONNX payloads are
/// carried as opaque bytes; nothing here executes them.
struct Manifest {
  static constexpr int kSchemaVersion = 1;

  std::string name;
  int schema_version = kSchemaVersion;
  ModelFormat model_format = ModelFormat::Native;
  std::vector<std::string> model_paths;
  std::map<std::string, std::string> checksums;
  std::optional<std::vector<std::string>> classes;
  bool optimized = false;
  std::map<std::string, std::string> optimizer_info;
  std::map<std::string, Scalar> inference_params;
  std::map<std::string, std::string> metadata;

  bool operator==(const Manifest&) const = default;
};

/// Pretty-printed JSON with every field present, newline-terminated.
std::string manifest_to_json(const Manifest& manifest);

/// Parses and checks the schema. name, schema_version, model_format and
/// model_paths are required; the other fields default to empty. Throws
/// SchemaViolation or PathEscape.
Manifest manifest_from_json(std::string_view text);

/// A payload path must be relative, '/'-separated, and free of empty, "."
/// and ".." segments. Throws PathEscape.
void check_payload_path(std::string_view path);

}  // namespace odr
