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

#include "odr/active/episode.hpp"

#include <sstream>

#include "json.hpp"
#include "odr/error.hpp"

namespace odr {

double EpisodeTrace::final_angular_error() const {
  if (steps.empty()) throw Error(Errc::InvalidArgument, "empty trace");
  return steps.back().angular_error;
}

EpisodeTrace run_episode(SphereBearingEnv& env, LearnerActive& learner, std::size_t max_steps,
                         std::uint64_t seed) {
  EpisodeTrace trace;
  trace.seed = seed;
  Observation obs = env.reset(seed);
  trace.hidden_direction = env.hidden_direction();
  learner.reset();
  for (std::size_t k = 0; k < max_steps; ++k) {
    const auto result = learner.infer_active(Data{Vector({obs.intensity, obs.theta, obs.phi})});
    EpisodeStep rec;
    rec.step = k;
    if (const auto* b = std::get_if<Bearing>(&result.target)) {
      rec.estimate_error = angular_distance(b->direction, env.hidden_direction());
    }
    const StepResult out = env.step(result.action);
    obs = out.observation;
    rec.theta = obs.theta;
    rec.phi = obs.phi;
    rec.a1 = result.action[0];
    rec.a2 = result.action[1];
    rec.intensity = obs.intensity;
    rec.angular_error = env.angular_error();
    trace.steps.push_back(rec);
    if (out.done) break;
  }
  return trace;
}

void write_trace_jsonl(const EpisodeTrace& trace, std::ostream& out) {
  for (const auto& s : trace.steps) {
    const nlohmann::ordered_json line = {{"step", s.step},
                                         {"theta", s.theta},
                                         {"phi", s.phi},
                                         {"a1", s.a1},
                                         {"a2", s.a2},
                                         {"intensity", s.intensity},
                                         {"angular_error", s.angular_error}};
    out << line.dump() << '\n';
  }
}

std::string trace_to_jsonl(const EpisodeTrace& trace) {
  std::ostringstream out;
  write_trace_jsonl(trace, out);
  return out.str();
}

}  // namespace odr
