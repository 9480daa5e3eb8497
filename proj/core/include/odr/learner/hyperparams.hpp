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
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "odr/scalar.hpp"

namespace odr {

/// String-keyed learner configuration. Learners reject unknown keys.
class Hyperparams {
 public:
  using Map = std::map<std::string, Scalar, std::less<>>;

  Hyperparams() = default;
  Hyperparams(std::initializer_list<std::pair<const std::string, Scalar>> values)
      : values_(values) {}

  void set(std::string key, Scalar value) { values_.insert_or_assign(std::move(key), std::move(value)); }
  bool contains(std::string_view key) const { return values_.find(key) != values_.end(); }
  const Map& values() const noexcept { return values_; }

  /// Throws BadHyperparam naming the first key outside `allowed`.
  void require_known(std::initializer_list<std::string_view> allowed,
                     std::string_view learner) const;

  /// Numeric lookup; integers are widened. Throws BadHyperparam on a
  /// non-numeric value.
  double number(std::string_view key, double fallback) const;
  std::int64_t integer(std::string_view key, std::int64_t fallback) const;
  std::string string(std::string_view key, std::string fallback) const;
  bool flag(std::string_view key, bool fallback) const;

  /// Parses "key=value" (CLI form): true/false, integers, decimals, or text.
  static std::pair<std::string, Scalar> parse_assignment(std::string_view text);

 private:
  Map values_;
};

}  // namespace odr
