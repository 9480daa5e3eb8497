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

#include "odr/learners/builtin.hpp"

#include <memory>

#include "odr/active/bearing_learner.hpp"
#include "odr/learners/centroid.hpp"
#include "odr/learners/ewma.hpp"

namespace odr {

void register_builtin_learners(LearnerRegistry& registry) {
  registry.register_learner(std::string(CentroidLearner::kName),
                            [](const Hyperparams& hp) { return std::make_unique<CentroidLearner>(hp); });
  registry.register_learner(std::string(EwmaLearner::kName),
                            [](const Hyperparams& hp) { return std::make_unique<EwmaLearner>(hp); });
  registry.register_learner(std::string(ActiveBearingLearner::kName), [](const Hyperparams& hp) {
    return std::make_unique<ActiveBearingLearner>(hp);
  });
}

LearnerRegistry& default_registry() {
  static LearnerRegistry* registry = [] {
    auto* r = new LearnerRegistry();
    register_builtin_learners(*r);
    return r;
  }();
  return *registry;
}

}  // namespace odr
