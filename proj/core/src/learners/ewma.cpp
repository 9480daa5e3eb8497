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

#include "odr/learners/ewma.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "json.hpp"
#include "odr/error.hpp"
#include "odr/learners/features.hpp"
#include "odr/package/package.hpp"

namespace odr {

namespace {

constexpr const char* kNormalName = "normal";
constexpr const char* kAnomalyName = "anomaly";

void check_alpha(double alpha, Errc code) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(code, fmt::format("alpha must be in (0, 1], got {}", alpha));
  }
}

void check_threshold(double threshold, Errc code) {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw Error(code, fmt::format("threshold must be positive, got {}", threshold));
  }
}

}  // namespace

EwmaLearner::EwmaLearner(const Hyperparams& hp) {
  hp.require_known({"alpha", "threshold"}, kName);
  alpha_ = hp.number("alpha", 0.5);
  threshold_ = hp.number("threshold", 2.0);
  check_alpha(alpha_, Errc::BadHyperparam);
  check_threshold(threshold_, Errc::BadHyperparam);
}

std::vector<double> EwmaLearner::input(const Data& data) const {
  const auto* v = std::get_if<Vector>(&data);
  if (v == nullptr) throw Error(Errc::InvalidArgument, "ewma expects a Vector");
  if (v->size() != dim_) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("input has {} values, model expects {}", v->size(), dim_));
  }
  return {v->values().begin(), v->values().end()};
}

EwmaLearner::Verdict EwmaLearner::step(std::optional<std::vector<double>>& mean,
                                       std::span<const double> x) const {
  if (!mean) {
    mean.emplace(x.begin(), x.end());
    return {Category(kNormal, kNormalName, 1.0), 0.0};
  }
  double deviation = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) deviation = std::max(deviation, std::abs(x[i] - (*mean)[i]));
  const bool anomaly = deviation > threshold_;
  for (std::size_t i = 0; i < x.size(); ++i) (*mean)[i] = (1.0 - alpha_) * (*mean)[i] + alpha_ * x[i];
  return {anomaly ? Category(kAnomaly, kAnomalyName, 1.0) : Category(kNormal, kNormalName, 1.0),
          deviation};
}

TrainStats EwmaLearner::fit(const DatasetIterator& train) {
  if (train.size() == 0) throw Error(Errc::EmptyDataset, "ewma fit");
  const Sample first = train.get(0);
  const auto* v = std::get_if<Vector>(&first.data);
  if (v == nullptr) throw Error(Errc::InvalidArgument, "ewma expects Vector samples");
  if (v->size() == 0) throw Error(Errc::DimensionMismatch, "samples have no values");
  dim_ = v->size();

  std::optional<std::vector<double>> mean;
  std::vector<double> deviations;
  std::size_t anomalies = 0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto verdict = step(mean, input(train.get(i).data));
    deviations.push_back(verdict.deviation);
    if (verdict.label.index == kAnomaly) ++anomalies;
  }
  mean_.reset();
  set_state(LearnerState::Trained);
  const auto n = static_cast<double>(train.size());
  return {{"n", n}, {"deviation", deviations}, {"anomaly_rate", static_cast<double>(anomalies) / n}};
}

TrainStats EwmaLearner::eval(const DatasetIterator& dataset) {
  require_trained("eval");
  if (dataset.size() == 0) throw Error(Errc::EmptyDataset, "ewma eval");
  std::optional<std::vector<double>> mean;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const Sample s = dataset.get(i);
    if (step(mean, input(s.data)).label.index == sample_label(s).index) ++correct;
  }
  const auto n = static_cast<double>(dataset.size());
  return {{"accuracy", static_cast<double>(correct) / n}, {"n", n}};
}

std::vector<AnyTarget> EwmaLearner::infer(const Data& data) {
  require_trained("infer");
  return {step(mean_, input(data)).label};
}

void EwmaLearner::optimize() {
  require_trained("optimize");
  set_state(LearnerState::Optimized);
}

void EwmaLearner::save(const std::filesystem::path& dir) const {
  require_trained("save");
  nlohmann::ordered_json payload = {{"alpha", alpha_}, {"threshold", threshold_}, {"dim", dim_}};
  const std::string text = payload.dump(2) + "\n";
  Manifest m;
  m.name = std::string(kName);
  m.model_format = ModelFormat::Native;
  m.model_paths = {std::string(kPayload)};
  m.classes = std::vector<std::string>{kNormalName, kAnomalyName};
  m.optimized = state() == LearnerState::Optimized;
  m.inference_params = {{"alpha", alpha_}, {"threshold", threshold_}};
  m.metadata = {{"learner", std::string(kName)}};
  package_write(std::move(m), {{std::string(kPayload), std::vector<std::uint8_t>(text.begin(), text.end())}},
                dir);
}

void EwmaLearner::load(const std::filesystem::path& dir) {
  const ModelPackage pkg = package_open(dir);
  const Manifest& m = pkg.manifest;
  const auto learner = m.metadata.find("learner");
  if (m.model_format != ModelFormat::Native || learner == m.metadata.end() || learner->second != kName ||
      std::find(m.model_paths.begin(), m.model_paths.end(), kPayload) == m.model_paths.end()) {
    throw Error(Errc::FormatMismatch, "package was not written by the ewma learner");
  }
  const auto bytes = pkg.read_payload(kPayload);
  double alpha = 0.0;
  double threshold = 0.0;
  std::size_t dim = 0;
  try {
    const auto j = nlohmann::json::parse(bytes.begin(), bytes.end());
    alpha = j.at("alpha").get<double>();
    threshold = j.at("threshold").get<double>();
    dim = j.at("dim").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::FormatMismatch, fmt::format("{}: {}", kPayload, e.what()));
  }
  check_alpha(alpha, Errc::FormatMismatch);
  check_threshold(threshold, Errc::FormatMismatch);
  if (dim == 0) throw Error(Errc::FormatMismatch, "dim must be positive");
  alpha_ = alpha;
  threshold_ = threshold;
  dim_ = dim;
  mean_.reset();
  set_state(m.optimized ? LearnerState::Optimized : LearnerState::Trained);
}

}  // namespace odr
