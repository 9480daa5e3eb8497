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

#include "odr/learner/hyperparams.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

namespace {

template <typename T>
bool parse_full(std::string_view text, T& out) {
  const char* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, out);
  return result.ec == std::errc() && result.ptr == end;
}

[[noreturn]] void wrong_type(std::string_view key, const char* expected) {
  throw Error(Errc::BadHyperparam, fmt::format("'{}' must be {}", key, expected));
}

}  // namespace

void Hyperparams::require_known(std::initializer_list<std::string_view> allowed,
                                std::string_view learner) const {
  for (const auto& [key, value] : values_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(Errc::BadHyperparam,
                  fmt::format("{} does not accept hyperparameter '{}'", learner, key));
    }
  }
}

double Hyperparams::number(std::string_view key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* d = std::get_if<double>(&it->second)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
  wrong_type(key, "a number");
}

std::int64_t Hyperparams::integer(std::string_view key, std::int64_t fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
  wrong_type(key, "an integer");
}

std::string Hyperparams::string(std::string_view key, std::string fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  wrong_type(key, "a string");
}

bool Hyperparams::flag(std::string_view key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* b = std::get_if<bool>(&it->second)) return *b;
  wrong_type(key, "a boolean");
}

std::pair<std::string, Scalar> Hyperparams::parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error(Errc::BadHyperparam, fmt::format("expected key=value, got '{}'", text));
  }
  std::string key(text.substr(0, eq));
  const std::string_view value = text.substr(eq + 1);
  if (value == "true") return {key, true};
  if (value == "false") return {key, false};
  std::int64_t i = 0;
  if (parse_full(value, i)) return {key, i};
  double d = 0.0;
  if (parse_full(value, d)) return {key, d};
  return {key, std::string(value)};
}

}  // namespace odr
