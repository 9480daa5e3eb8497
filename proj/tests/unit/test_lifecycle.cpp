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


#include <gtest/gtest.h>

#include <algorithm>

#include "conformance.hpp"

namespace odr {
namespace {

using testing::ConformanceCase;

std::string case_name(const ::testing::TestParamInfo<ConformanceCase>& info) { return info.param.learner; }

class Lifecycle : public ::testing::TestWithParam<ConformanceCase> {};

TEST_P(Lifecycle, Conforms) {
  const auto failures = testing::check_lifecycle(default_registry(), GetParam());
  for (const auto& f : failures) ADD_FAILURE() << f;
}

INSTANTIATE_TEST_SUITE_P(Builtin, Lifecycle, ::testing::ValuesIn(testing::builtin_conformance_cases()), case_name);

TEST(LifecycleCoverage, EveryRegisteredLearnerHasACase) {
  const auto cases = testing::builtin_conformance_cases();
  for (const auto& name : default_registry().names()) {
    EXPECT_TRUE(std::any_of(cases.begin(), cases.end(), [&](const auto& c) { return c.learner == name; }))
        << name;
  }
}

// The suite itself must catch a learner that breaks the contract.
class DriftingLearner final : public Learner {
 public:
  std::string_view name() const override { return "drifting"; }
  TrainStats fit(const DatasetIterator&) override {
    set_state(LearnerState::Trained);
    return {{"n", 1.0}};
  }
  TrainStats eval(const DatasetIterator&) override { return {{"n", 1.0}}; }
  std::vector<AnyTarget> infer(const Data&) override {
    require_trained("infer");
    return {Category(0, std::nullopt, 1.0 / static_cast<double>(++calls_))};
  }
  void save(const std::filesystem::path& dir) const override { std::filesystem::create_directories(dir); }
  void load(const std::filesystem::path&) override { set_state(LearnerState::Trained); }
  void optimize() override { set_state(LearnerState::Optimized); }
  void reset() override {}

 private:
  int calls_ = 0;
};

TEST(LifecycleSuite, DetectsBrokenReset) {
  LearnerRegistry registry;
  registry.register_learner("drifting", [](const Hyperparams&) { return std::make_unique<DriftingLearner>(); });
  ConformanceCase c{"drifting", {}, std::make_shared<InMemoryDataset>(), {Vector({1.0}), Vector({2.0})}, true};
  EXPECT_FALSE(testing::check_lifecycle(registry, c).empty());
}

}  // namespace
}  // namespace odr
