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

#include "odr/learner/registry.hpp"

#include <mutex>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

void LearnerRegistry::register_learner(std::string name, LearnerFactory factory) {
  if (name.empty()) throw Error(Errc::InvalidArgument, "learner name must not be empty");
  std::unique_lock lock(mutex_);
  if (factories_.contains(name)) {
    throw Error(Errc::DuplicateName, fmt::format("learner '{}' is already registered", name));
  }
  factories_.emplace(std::move(name), std::move(factory));
}

std::unique_ptr<Learner> LearnerRegistry::create(std::string_view name,
                                                 const Hyperparams& hp) const {
  LearnerFactory factory;
  {
    std::shared_lock lock(mutex_);
    const auto it = factories_.find(name);
    if (it == factories_.end()) {
      throw Error(Errc::UnknownLearner, fmt::format("no learner named '{}'", name));
    }
    factory = it->second;
  }
  return factory(hp);
}

bool LearnerRegistry::contains(std::string_view name) const {
  std::shared_lock lock(mutex_);
  return factories_.find(name) != factories_.end();
}

std::vector<std::string> LearnerRegistry::names() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [name, factory] : factories_) out.push_back(name);
  return out;
}

}  // namespace odr
