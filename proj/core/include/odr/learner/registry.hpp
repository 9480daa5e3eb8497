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

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "odr/learner/hyperparams.hpp"
#include "odr/learner/learner.hpp"

namespace odr {

using LearnerFactory = std::function<std::unique_ptr<Learner>(const Hyperparams&)>;

/// Name -> factory table. Lookups may run concurrently; registration is
/// expected during startup.
class LearnerRegistry {
 public:
  /// Throws InvalidArgument for an empty name, DuplicateName if taken.
  void register_learner(std::string name, LearnerFactory factory);

  /// Fresh Untrained learner. Throws UnknownLearner or BadHyperparam.
  std::unique_ptr<Learner> create(std::string_view name, const Hyperparams& hp = {}) const;

  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, LearnerFactory, std::less<>> factories_;
};

}  // namespace odr
