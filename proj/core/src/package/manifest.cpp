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

#include "odr/package/manifest.hpp"

#include <set>

#include <fmt/format.h>

#include "json.hpp"
#include "odr/error.hpp"
#include "odr/package/sha256.hpp"

namespace odr {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void violation(const std::string& what) { throw Error(Errc::SchemaViolation, what); }

Json scalar_to_json(const Scalar& value) {
  return std::visit([](const auto& v) { return Json(v); }, value);
}

Scalar scalar_from_json(const std::string& key, const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > INT64_MAX) {
      violation(fmt::format("inference_params['{}'] is out of integer range", key));
    }
    return j.get<std::int64_t>();
  }
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  violation(fmt::format("inference_params['{}'] must be a scalar", key));
}

std::map<std::string, std::string> string_map(const Json& j, const char* field) {
  if (!j.is_object()) violation(fmt::format("'{}' must be an object", field));
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) violation(fmt::format("'{}' values must be strings", field));
    out.emplace(key, value.get<std::string>());
  }
  return out;
}

std::vector<std::string> string_list(const Json& j, const char* field) {
  if (!j.is_array()) violation(fmt::format("'{}' must be an array", field));
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) violation(fmt::format("'{}' entries must be strings", field));
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string_view to_string(ModelFormat format) noexcept {
  return format == ModelFormat::Onnx ? "onnx" : "native";
}

void check_payload_path(std::string_view path) {
  const auto escape = [&](const char* why) {
    throw Error(Errc::PathEscape, fmt::format("'{}' {}", path, why));
  };
  if (path.empty()) escape("is empty");
  if (path.front() == '/') escape("is absolute");
  if (path.find('\\') != std::string_view::npos) escape("uses '\\' separators");
  if (path.find('\0') != std::string_view::npos) escape("contains NUL");
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t end = std::min(path.find('/', start), path.size());
    const std::string_view segment = path.substr(start, end - start);
    if (segment.empty()) escape("has an empty segment");
    if (segment == "." || segment == "..") escape("has a '.' or '..' segment");
    start = end + 1;
  }
}

std::string manifest_to_json(const Manifest& m) {
  Json j;
  j["name"] = m.name;
  j["schema_version"] = m.schema_version;
  j["model_format"] = to_string(m.model_format);
  j["model_paths"] = m.model_paths;
  j["checksums"] = Json::object();
  for (const auto& [path, digest] : m.checksums) j["checksums"][path] = digest;
  j["classes"] = m.classes ? Json(*m.classes) : Json(nullptr);
  j["optimized"] = m.optimized;
  j["optimizer_info"] = Json::object();
  for (const auto& [k, v] : m.optimizer_info) j["optimizer_info"][k] = v;
  j["inference_params"] = Json::object();
  for (const auto& [k, v] : m.inference_params) j["inference_params"][k] = scalar_to_json(v);
  j["metadata"] = Json::object();
  for (const auto& [k, v] : m.metadata) j["metadata"][k] = v;
  return j.dump(2) + "\n";
}

Manifest manifest_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    violation(fmt::format("manifest is not valid JSON: {}", e.what()));
  }
  if (!j.is_object()) violation("manifest must be a JSON object");

  static const std::set<std::string> kFields = {
      "name",     "schema_version", "model_format",     "model_paths", "checksums", "classes",
      "optimized", "optimizer_info", "inference_params", "metadata"};
  for (const auto& [key, value] : j.items()) {
    if (!kFields.contains(key)) {
      violation(fmt::format("unknown manifest field '{}' (extra keys belong in metadata)", key));
    }
  }
  const auto required = [&](const char* key) -> const Json& {
    const auto it = j.find(key);
    if (it == j.end()) violation(fmt::format("manifest is missing '{}'", key));
    return *it;
  };

  Manifest m;
  const Json& name = required("name");
  if (!name.is_string() || name.get<std::string>().empty()) violation("'name' must be a nonempty string");
  m.name = name.get<std::string>();

  const Json& version = required("schema_version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != Manifest::kSchemaVersion) {
    violation(fmt::format("unsupported schema_version {}", version.dump()));
  }

  const Json& format = required("model_format");
  if (format == "onnx") {
    m.model_format = ModelFormat::Onnx;
  } else if (format == "native") {
    m.model_format = ModelFormat::Native;
  } else {
    violation(fmt::format("model_format must be \"onnx\" or \"native\", got {}", format.dump()));
  }

  m.model_paths = string_list(required("model_paths"), "model_paths");
  std::set<std::string> unique;
  for (const auto& path : m.model_paths) {
    check_payload_path(path);
    if (path == kManifestFileName) violation("manifest.json cannot be a payload");
    if (!unique.insert(path).second) violation(fmt::format("duplicate model path '{}'", path));
  }

  if (const auto it = j.find("checksums"); it != j.end()) {
    m.checksums = string_map(*it, "checksums");
    for (const auto& [path, digest] : m.checksums) {
      if (!unique.contains(path)) violation(fmt::format("checksum for unlisted path '{}'", path));
      if (!is_sha256_hex(digest)) {
        violation(fmt::format("checksum for '{}' is not lowercase SHA-256 hex", path));
      }
    }
  }
  if (const auto it = j.find("classes"); it != j.end() && !it->is_null()) {
    m.classes = string_list(*it, "classes");
  }
  if (const auto it = j.find("optimized"); it != j.end()) {
    if (!it->is_boolean()) violation("'optimized' must be a boolean");
    m.optimized = it->get<bool>();
  }
  if (const auto it = j.find("optimizer_info"); it != j.end()) {
    m.optimizer_info = string_map(*it, "optimizer_info");
  }
  if (const auto it = j.find("inference_params"); it != j.end()) {
    if (!it->is_object()) violation("'inference_params' must be an object");
    for (const auto& [key, value] : it->items()) m.inference_params.emplace(key, scalar_from_json(key, value));
  }
  if (const auto it = j.find("metadata"); it != j.end()) m.metadata = string_map(*it, "metadata");
  return m;
}

}  // namespace odr
