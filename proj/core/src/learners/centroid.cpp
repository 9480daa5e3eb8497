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

#include "odr/learners/centroid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "odr/error.hpp"
#include "odr/learners/features.hpp"
#include "odr/package/package.hpp"

namespace odr {

namespace {

constexpr std::string_view kMagic = "ODRC";
constexpr std::size_t kHeaderSize = 12;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[at + i]) << (8 * i);
  return v;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<std::uint8_t> encode_centroids(std::size_t rows, std::size_t cols,
                                           std::span<const double> values) {
  if (values.size() != rows * cols) {
    throw Error(Errc::LengthMismatch, fmt::format("{} values for {}x{}", values.size(), rows, cols));
  }
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kHeaderSize + 8 * values.size());
  put_u32(out, static_cast<std::uint32_t>(rows));
  put_u32(out, static_cast<std::uint32_t>(cols));
  for (double v : values) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  }
  return out;
}

std::vector<double> decode_centroids(std::span<const std::uint8_t> bytes, std::size_t& rows,
                                     std::size_t& cols) {
  if (bytes.size() < kHeaderSize || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(Errc::FormatMismatch, "centroid payload has no ODRC header");
  }
  rows = get_u32(bytes, 4);
  cols = get_u32(bytes, 8);
  if (rows == 0 || cols == 0 || (bytes.size() - kHeaderSize) / 8 / cols != rows ||
      (bytes.size() - kHeaderSize) != 8 * rows * cols) {
    throw Error(Errc::FormatMismatch,
                fmt::format("centroid payload size {} does not fit {}x{}", bytes.size(), rows, cols));
  }
  std::vector<double> values(rows * cols);
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
      bits |= static_cast<std::uint64_t>(bytes[kHeaderSize + 8 * k + i]) << (8 * i);
    }
    values[k] = std::bit_cast<double>(bits);
    if (!std::isfinite(values[k])) throw Error(Errc::NonFinite, "centroid payload value");
  }
  return values;
}

CentroidLearner::CentroidLearner(const Hyperparams& hp) {
  hp.require_known({"temperature"}, kName);
  temperature_ = hp.number("temperature", 1.0);
  if (!(temperature_ > 0.0) || !std::isfinite(temperature_)) {
    throw Error(Errc::BadHyperparam, fmt::format("temperature must be positive, got {}", temperature_));
  }
}

std::span<const double> CentroidLearner::centroid(std::size_t c) const {
  check_index(c, num_classes());
  return std::span<const double>(centroids_).subspan(c * dim_, dim_);
}

TrainStats CentroidLearner::fit(const DatasetIterator& train) {
  if (train.size() == 0) throw Error(Errc::EmptyDataset, "centroid fit");

  std::vector<std::vector<double>> features;
  std::vector<std::int64_t> labels;
  std::vector<std::optional<std::string>> descriptions;
  features.reserve(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    const Sample s = train.get(i);
    features.push_back(feature_vector(s.data));
    const Category& label = sample_label(s);
    if (label.index < 0) throw Error(Errc::InvalidArgument, fmt::format("sample {} has a negative label", i));
    labels.push_back(label.index);
    descriptions.push_back(label.description);
    if (features.back().size() != features.front().size()) {
      throw Error(Errc::DimensionMismatch,
                  fmt::format("sample {} has {} features, expected {}", i, features.back().size(),
                              features.front().size()));
    }
  }
  const std::size_t dim = features.front().size();
  if (dim == 0) throw Error(Errc::DimensionMismatch, "samples have no features");
  const auto classes = static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;

  std::vector<double> sums(classes * dim, 0.0);
  std::vector<double> counts(classes, 0.0);
  std::vector<std::string> names(classes);
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    if (counts[c] == 0.0) names[c] = descriptions[i].value_or(std::to_string(c));
    counts[c] += 1.0;
    for (std::size_t d = 0; d < dim; ++d) sums[c * dim + d] += features[i][d];
  }
  for (std::size_t c = 0; c < classes; ++c) {
    if (counts[c] == 0.0) throw Error(Errc::MissingClass, fmt::format("class {} has no samples", c));
    for (std::size_t d = 0; d < dim; ++d) sums[c * dim + d] /= counts[c];
  }

  dim_ = dim;
  centroids_ = std::move(sums);
  class_names_ = std::move(names);
  squared_norms_.clear();
  set_state(LearnerState::Trained);

  std::size_t correct = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (classify(features[i]).index == labels[i]) ++correct;
  }
  return {{"per_class_counts", counts},
          {"train_accuracy", static_cast<double>(correct) / static_cast<double>(features.size())}};
}

TrainStats CentroidLearner::eval(const DatasetIterator& dataset) {
  require_trained("eval");
  if (dataset.size() == 0) throw Error(Errc::EmptyDataset, "centroid eval");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const Sample s = dataset.get(i);
    if (classify(feature_vector(s.data)).index == sample_label(s).index) ++correct;
  }
  const auto n = static_cast<double>(dataset.size());
  return {{"accuracy", static_cast<double>(correct) / n}, {"n", n}};
}

void CentroidLearner::squared_distances(std::span<const double> x, std::vector<double>& out) const {
  out.resize(num_classes());
  if (!squared_norms_.empty()) {
    const double xx = dot(x, x);
    for (std::size_t c = 0; c < out.size(); ++c) {
      const double d = xx - 2.0 * dot(x, centroid(c)) + squared_norms_[c];
      out[c] = std::max(d, 0.0);
    }
    return;
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    const auto row = centroid(c);
    double s = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      const double diff = x[d] - row[d];
      s += diff * diff;
    }
    out[c] = s;
  }
}

Category CentroidLearner::classify(std::span<const double> features) const {
  require_trained("infer");
  if (features.size() != dim_) {
    throw Error(Errc::DimensionMismatch,
                fmt::format("input has {} features, model expects {}", features.size(), dim_));
  }
  std::vector<double> d2;
  squared_distances(features, d2);
  std::size_t best = 0;
  for (std::size_t c = 1; c < d2.size(); ++c) {
    if (d2[c] < d2[best]) best = c;
  }
  // Softmax of -d2/T evaluated relative to the winner so the largest term is 1.
  double denom = 0.0;
  for (double d : d2) denom += std::exp(-(d - d2[best]) / temperature_);
  return Category(static_cast<std::int64_t>(best), class_names_[best], 1.0 / denom);
}

std::vector<AnyTarget> CentroidLearner::infer(const Data& data) {
  require_trained("infer");
  return {classify(feature_vector(data))};
}

void CentroidLearner::optimize() {
  require_trained("optimize");
  if (state() == LearnerState::Optimized) return;
  squared_norms_.resize(num_classes());
  for (std::size_t c = 0; c < num_classes(); ++c) squared_norms_[c] = dot(centroid(c), centroid(c));
  set_state(LearnerState::Optimized);
}

void CentroidLearner::save(const std::filesystem::path& dir) const {
  require_trained("save");
  Manifest m;
  m.name = std::string(kName);
  m.model_format = ModelFormat::Native;
  m.model_paths = {std::string(kPayload)};
  m.classes = class_names_;
  m.optimized = state() == LearnerState::Optimized;
  if (m.optimized) m.optimizer_info = {{"distance", "norm_expansion"}};
  m.inference_params = {{"temperature", temperature_}};
  m.metadata = {{"learner", std::string(kName)}};
  package_write(std::move(m), {{std::string(kPayload), encode_centroids(num_classes(), dim_, centroids_)}},
                dir);
}

void CentroidLearner::load(const std::filesystem::path& dir) {
  const ModelPackage pkg = package_open(dir);
  const Manifest& m = pkg.manifest;
  if (m.model_format != ModelFormat::Native) {
    throw Error(Errc::FormatMismatch,
                fmt::format("centroid learner needs a native package, got {}", to_string(m.model_format)));
  }
  const auto learner = m.metadata.find("learner");
  if (learner == m.metadata.end() || learner->second != kName) {
    throw Error(Errc::FormatMismatch, "package was not written by the centroid learner");
  }
  if (std::find(m.model_paths.begin(), m.model_paths.end(), kPayload) == m.model_paths.end()) {
    throw Error(Errc::FormatMismatch, fmt::format("package has no {}", kPayload));
  }
  std::size_t rows = 0;
  std::size_t cols = 0;
  auto values = decode_centroids(pkg.read_payload(kPayload), rows, cols);

  std::vector<std::string> names;
  if (m.classes) {
    if (m.classes->size() != rows) {
      throw Error(Errc::FormatMismatch,
                  fmt::format("{} class names for {} centroids", m.classes->size(), rows));
    }
    names = *m.classes;
  } else {
    for (std::size_t c = 0; c < rows; ++c) names.push_back(std::to_string(c));
  }
  double temperature = temperature_;
  if (const auto t = m.inference_params.find("temperature"); t != m.inference_params.end()) {
    if (const auto* d = std::get_if<double>(&t->second)) {
      temperature = *d;
    } else if (const auto* i = std::get_if<std::int64_t>(&t->second)) {
      temperature = static_cast<double>(*i);
    } else {
      throw Error(Errc::FormatMismatch, "temperature is not numeric");
    }
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
      throw Error(Errc::FormatMismatch, "temperature must be positive");
    }
  }

  dim_ = cols;
  centroids_ = std::move(values);
  class_names_ = std::move(names);
  temperature_ = temperature;
  squared_norms_.clear();
  set_state(LearnerState::Trained);
  if (m.optimized) optimize();
}

}  // namespace odr
