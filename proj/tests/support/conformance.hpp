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

#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "odr/active/sphere_env.hpp"
#include "odr/datasets/dataset.hpp"
#include "odr/error.hpp"
#include "odr/learner/registry.hpp"
#include "odr/learners/builtin.hpp"
#include "test_support.hpp"

namespace odr::testing {

/// Inputs the lifecycle suite feeds one registered learner.
struct ConformanceCase {
  std::string learner;
  Hyperparams hp;
  std::shared_ptr<const DatasetIterator> train;
  std::vector<Data> probes;
  bool needs_training = true;
};

inline bool close(double a, double b, double tol) {
  if (a == b) return true;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

/// Equality of infer outputs up to a relative tolerance on real fields.
inline bool targets_close(const AnyTarget& a, const AnyTarget& b, double tol) {
  if (tol == 0.0 || a.index() != b.index()) return a == b;
  const auto conf_close = [&](const Target& x, const Target& y) {
    if (x.confidence.has_value() != y.confidence.has_value()) return false;
    if (x.confidence && !close(*x.confidence, *y.confidence, tol)) return false;
    if (x.suggested_action.has_value() != y.suggested_action.has_value()) return false;
    if (x.suggested_action) {
      const auto u = x.suggested_action->values();
      const auto v = y.suggested_action->values();
      if (u.size() != v.size()) return false;
      for (std::size_t i = 0; i < u.size(); ++i)
        if (!close(u[i], v[i], tol)) return false;
    }
    return true;
  };
  if (const auto* x = std::get_if<Category>(&a)) {
    const auto& y = std::get<Category>(b);
    return x->index == y.index && x->description == y.description && conf_close(*x, y);
  }
  if (const auto* x = std::get_if<Bearing>(&a)) {
    const auto& y = std::get<Bearing>(b);
    for (int i = 0; i < 3; ++i)
      if (!close(x->direction[i], y.direction[i], tol)) return false;
    return conf_close(*x, y);
  }
  return a == b;
}

inline std::vector<std::vector<AnyTarget>> run_probes(Learner& learner, const std::vector<Data>& probes) {
  std::vector<std::vector<AnyTarget>> out;
  out.reserve(probes.size());
  for (const auto& p : probes) out.push_back(learner.infer(p));
  return out;
}

inline bool outputs_close(const std::vector<std::vector<AnyTarget>>& a,
                          const std::vector<std::vector<AnyTarget>>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t k = 0; k < a[i].size(); ++k)
      if (!targets_close(a[i][k], b[i][k], tol)) return false;
  }
  return true;
}

/// Runs every lifecycle check for one learner; returns a description per failure.
inline std::vector<std::string> check_lifecycle(const LearnerRegistry& registry, const ConformanceCase& c) {
  std::vector<std::string> failures;
  const auto fail = [&](std::string what) { failures.push_back(fmt::format("{}: {}", c.learner, what)); };
  try {
    // Infer before fit/load.
    auto untouched = registry.create(c.learner, c.hp);
    if (c.needs_training) {
      try {
        untouched->infer(c.probes.front());
        fail("infer before fit/load did not throw");
      } catch (const Error& e) {
        if (e.code() != Errc::NotTrained) fail(fmt::format("infer before fit threw {}", e.what()));
      }
      if (untouched->state() != LearnerState::Untrained) fail("fresh learner is not untrained");
    }

    auto trained = registry.create(c.learner, c.hp);
    trained->fit(*c.train);
    if (trained->state() == LearnerState::Untrained) fail("fit left the learner untrained");
    trained->reset();
    const auto reference = run_probes(*trained, c.probes);

    // save -> load on a fresh instance.
    TempDir tmp;
    trained->save(tmp / "pkg");
    auto loaded = registry.create(c.learner, c.hp);
    loaded->load(tmp / "pkg");
    const auto from_package = run_probes(*loaded, c.probes);
    if (!outputs_close(reference, from_package, 0.0)) fail("save/load changed infer outputs");

    // reset restores the freshly loaded behaviour.
    trained->reset();
    if (!outputs_close(run_probes(*trained, c.probes), from_package, 0.0)) {
      fail("outputs after reset differ from a freshly loaded learner");
    }

    // optimize stays within the declared tolerance.
    auto optimized = registry.create(c.learner, c.hp);
    optimized->load(tmp / "pkg");
    optimized->optimize();
    if (optimized->state() != LearnerState::Optimized) fail("optimize did not set the optimized state");
    if (!outputs_close(reference, run_probes(*optimized, c.probes), optimized->optimize_tolerance())) {
      fail(fmt::format("optimize changed outputs beyond tolerance {}", optimized->optimize_tolerance()));
    }
    TempDir tmp2;
    optimized->save(tmp2 / "pkg");
    auto reloaded = registry.create(c.learner, c.hp);
    reloaded->load(tmp2 / "pkg");
    if (reloaded->state() != LearnerState::Optimized) fail("optimized flag lost across save/load");
  } catch (const std::exception& e) {
    fail(fmt::format("unexpected exception: {}", e.what()));
  }
  return failures;
}

inline Sample vector_sample(std::vector<double> v, std::int64_t label, std::string name) {
  return {Vector(std::move(v)), {Category(label, std::move(name))}};
}

inline constexpr int kProbeCount = 100;

/// One case for each builtin learner.
inline std::vector<ConformanceCase> builtin_conformance_cases() {
  std::vector<ConformanceCase> cases;
  std::mt19937_64 gen(20260101);
  std::normal_distribution<double> n01;

  {
    auto train = std::make_shared<InMemoryDataset>();
    for (std::int64_t c = 0; c < 3; ++c) {
      for (int k = 0; k < 10; ++k) {
        std::vector<double> v(8);
        for (auto& e : v) e = n01(gen) + 2.0 * static_cast<double>(c);
        train->add(vector_sample(std::move(v), c, fmt::format("class{}", c)));
      }
    }
    ConformanceCase cc{"centroid", {{"temperature", 2.0}}, train, {}, true};
    for (int i = 0; i < kProbeCount; ++i) {
      std::vector<double> v(8);
      for (auto& e : v) e = 3.0 * n01(gen) + 2.0;
      cc.probes.emplace_back(Vector(std::move(v)));
    }
    cases.push_back(std::move(cc));
  }
  {
    auto train = std::make_shared<InMemoryDataset>();
    for (int i = 0; i < 40; ++i) train->add(vector_sample({n01(gen), n01(gen)}, 0, "normal"));
    ConformanceCase cc{"ewma", {{"alpha", 0.3}, {"threshold", 1.5}}, train, {}, true};
    for (int i = 0; i < kProbeCount; ++i) {
      const double spike = i % 9 == 4 ? 6.0 : 0.0;
      cc.probes.emplace_back(Vector({n01(gen) + spike, n01(gen)}));
    }
    cases.push_back(std::move(cc));
  }
  {
    SphereBearingEnv env;
    Observation obs = env.reset(77);
    auto train = std::make_shared<InMemoryDataset>();
    std::vector<Data> probes;
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < kProbeCount; ++i) {
      if (env.done()) obs = env.reset(78 + static_cast<std::uint64_t>(i));
      const Data d = Vector({obs.intensity, obs.theta, obs.phi});
      train->add({d, {Bearing(env.hidden_direction())}});
      probes.push_back(d);
      const std::array<double, 2> a{u(gen), u(gen)};
      obs = env.step(Action::validate(a)).observation;
    }
    // Constructed ready to act: it has no trainable parameters.
    cases.push_back({"active_bearing", {{"probe_step", 0.25}}, train, probes, false});
  }
  return cases;
}

}  // namespace odr::testing
