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

#include <fmt/format.h>

#include "json.hpp"
#include "odr/engine/target.hpp"
#include "odr/error.hpp"

namespace odr {

namespace {

using Json = nlohmann::ordered_json;

// --- encoding ---------------------------------------------------------------

void put_common(Json& j, const Target& t) {
  if (t.confidence) j["confidence"] = *t.confidence;
  if (t.suggested_action) {
    const auto values = t.suggested_action->values();
    j["action"] = std::vector<double>(values.begin(), values.end());
  }
}

Json encode_category(const Category& c) {
  Json j;
  j["type"] = "category";
  j["index"] = c.index;
  if (c.description) j["description"] = *c.description;
  put_common(j, c);
  return j;
}

struct Encoder {
  Json operator()(const Category& c) const { return encode_category(c); }
  Json operator()(const BoundingBox& b) const {
    Json j;
    j["type"] = "bounding_box";
    j["category"] = encode_category(b.category);
    j["x"] = b.x;
    j["y"] = b.y;
    j["w"] = b.w;
    j["h"] = b.h;
    put_common(j, b);
    return j;
  }
  Json operator()(const BoundingBox3D& b) const {
    Json j;
    j["type"] = "bounding_box_3d";
    j["category"] = encode_category(b.category);
    j["center"] = b.center;
    j["size"] = b.size;
    j["yaw"] = b.yaw;
    put_common(j, b);
    return j;
  }
  Json operator()(const Pose& p) const {
    Json j;
    j["type"] = "pose";
    Json points = Json::array();
    for (const auto& k : p.keypoints) points.push_back({k.x, k.y});
    j["keypoints"] = std::move(points);
    put_common(j, p);
    return j;
  }
  Json operator()(const Heatmap& h) const {
    Json j;
    j["type"] = "heatmap";
    j["height"] = h.height;
    j["width"] = h.width;
    j["num_classes"] = h.num_classes;
    Json rows = Json::array();
    for (std::size_t y = 0; y < h.height; ++y) {
      rows.push_back(std::vector<std::uint32_t>(h.class_map.begin() + y * h.width,
                                                h.class_map.begin() + (y + 1) * h.width));
    }
    j["class_map"] = std::move(rows);
    put_common(j, h);
    return j;
  }
  Json operator()(const SpeechCommand& s) const {
    Json j;
    j["type"] = "speech_command";
    j["command"] = encode_category(s.command);
    put_common(j, s);
    return j;
  }
  Json operator()(const Bearing& b) const {
    Json j;
    j["type"] = "bearing";
    j["direction"] = b.direction;
    put_common(j, b);
    return j;
  }
};

// --- decoding ---------------------------------------------------------------

[[noreturn]] void violation(const std::string& what) { throw Error(Errc::SchemaViolation, what); }

class Fields {
 public:
  Fields(const Json& j, std::string_view type) : j_(j), type_(type) {
    if (!j_.is_object()) violation(fmt::format("{} record must be a JSON object", type_));
  }

  const Json& required(const char* key) {
    const auto it = j_.find(key);
    if (it == j_.end()) violation(fmt::format("{} record is missing '{}'", type_, key));
    seen_.emplace_back(key);
    return *it;
  }

  const Json* optional(const char* key) {
    const auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    seen_.emplace_back(key);
    return &*it;
  }

  double number(const char* key) {
    const Json& v = required(key);
    if (!v.is_number()) violation(fmt::format("'{}' must be a number", key));
    return v.get<double>();
  }

  std::uint64_t unsigned_integer(const char* key) {
    const Json& v = required(key);
    if (!v.is_number_unsigned()) violation(fmt::format("'{}' must be a nonnegative integer", key));
    return v.get<std::uint64_t>();
  }

  std::array<double, 3> triple(const char* key) {
    const Json& v = required(key);
    if (!v.is_array() || v.size() != 3) violation(fmt::format("'{}' must be a 3-array", key));
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!v[i].is_number()) violation(fmt::format("'{}' must hold numbers", key));
      out[i] = v[i].get<double>();
    }
    return out;
  }

  std::optional<double> confidence() {
    const Json* v = optional("confidence");
    if (!v) return std::nullopt;
    if (!v->is_number()) violation("'confidence' must be a number");
    return v->get<double>();
  }

  std::optional<Action> action() {
    const Json* v = optional("action");
    if (!v) return std::nullopt;
    if (!v->is_array()) violation("'action' must be an array");
    std::vector<double> axes;
    for (const auto& a : *v) {
      if (!a.is_number()) violation("'action' must hold numbers");
      axes.push_back(a.get<double>());
    }
    return Action::validate(axes);
  }

  // Rejects keys that were never consumed.
  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (key == "type") continue;
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
        violation(fmt::format("{} record has unexpected field '{}'", type_, key));
      }
    }
  }

 private:
  const Json& j_;
  std::string_view type_;
  std::vector<std::string> seen_;
};

Category decode_category(const Json& j) {
  Fields f(j, "category");
  if (const auto it = j.find("type"); it != j.end() && *it != "category") {
    violation("nested category has a non-category type tag");
  }
  const Json& index = f.required("index");
  if (!index.is_number_integer()) violation("'index' must be an integer");
  std::optional<std::string> description;
  if (const Json* d = f.optional("description")) {
    if (!d->is_string()) violation("'description' must be a string");
    description = d->get<std::string>();
  }
  auto conf = f.confidence();
  auto action = f.action();
  f.finish();
  return Category(index.get<std::int64_t>(), std::move(description), conf, std::move(action));
}

AnyTarget decode(const Json& j) {
  if (!j.is_object()) violation("target record must be a JSON object");
  const auto type_it = j.find("type");
  if (type_it == j.end()) violation("target record has no 'type' tag");
  if (!type_it->is_string()) violation("'type' must be a string");
  const std::string type = type_it->get<std::string>();

  if (type == "category") return decode_category(j);

  Fields f(j, type);
  if (type == "bounding_box") {
    Category c = decode_category(f.required("category"));
    const double x = f.number("x");
    const double y = f.number("y");
    const double w = f.number("w");
    const double h = f.number("h");
    auto conf = f.confidence();
    auto action = f.action();
    f.finish();
    return BoundingBox(std::move(c), x, y, w, h, conf, std::move(action));
  }
  if (type == "bounding_box_3d") {
    Category c = decode_category(f.required("category"));
    const auto center = f.triple("center");
    const auto size = f.triple("size");
    const double yaw = f.number("yaw");
    auto conf = f.confidence();
    auto action = f.action();
    f.finish();
    return BoundingBox3D(std::move(c), center, size, yaw, conf, std::move(action));
  }
  if (type == "pose") {
    const Json& points = f.required("keypoints");
    if (!points.is_array()) violation("'keypoints' must be an array");
    std::vector<Keypoint> keypoints;
    for (const auto& p : points) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        violation("each keypoint must be an [x, y] pair");
      }
      keypoints.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    auto conf = f.confidence();
    auto action = f.action();
    f.finish();
    return Pose(std::move(keypoints), conf, std::move(action));
  }
  if (type == "heatmap") {
    const auto height = f.unsigned_integer("height");
    const auto width = f.unsigned_integer("width");
    const auto num_classes = f.unsigned_integer("num_classes");
    if (num_classes > UINT32_MAX) violation("'num_classes' out of range");
    const Json& rows = f.required("class_map");
    if (!rows.is_array() || rows.size() != height) violation("'class_map' must have height rows");
    std::vector<std::uint32_t> ids;
    ids.reserve(height * width);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != width) violation("'class_map' rows must have width ids");
      for (const auto& id : row) {
        if (!id.is_number_unsigned() || id.get<std::uint64_t>() > UINT32_MAX) {
          violation("class ids must be nonnegative 32-bit integers");
        }
        ids.push_back(id.get<std::uint32_t>());
      }
    }
    auto conf = f.confidence();
    auto action = f.action();
    f.finish();
    return Heatmap(height, width, static_cast<std::uint32_t>(num_classes), std::move(ids), conf,
                   std::move(action));
  }
  if (type == "speech_command") {
    Category c = decode_category(f.required("command"));
    auto conf = f.confidence();
    auto action = f.action();
    f.finish();
    return SpeechCommand(std::move(c), conf, std::move(action));
  }
  if (type == "bearing") {
    const auto direction = f.triple("direction");
    auto conf = f.confidence();
    auto action = f.action();
    f.finish();
    return Bearing(direction, conf, std::move(action));
  }
  throw Error(Errc::UnknownTypeTag, fmt::format("unknown target type '{}'", type));
}

}  // namespace

std::string target_to_wire(const AnyTarget& target) { return std::visit(Encoder{}, target).dump(); }

AnyTarget target_from_wire(std::string_view record) {
  Json j;
  try {
    j = Json::parse(record);
  } catch (const nlohmann::json::parse_error& e) {
    violation(fmt::format("malformed JSON: {}", e.what()));
  }
  try {
    return decode(j);
  } catch (const Error& e) {
    if (e.code() == Errc::UnknownTypeTag || e.code() == Errc::SchemaViolation) throw;
    // Field values that break a type invariant are schema violations on the wire.
    throw Error(Errc::SchemaViolation, e.what());
  }
}

}  // namespace odr
