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

#include <stdexcept>
#include <string>
#include <string_view>

namespace odr {

/// Error kinds raised across the library. The names are stable and appear
/// verbatim in CLI diagnostics ("ChecksumMismatch: model.bin").
enum class Errc {
  InvalidArgument,
  IoError,
  // engine
  LengthMismatch,
  ValueOutOfRange,
  BadChannels,
  FileNotFound,
  UnsupportedFormat,
  CorruptHeader,
  AxisCountInvalid,
  ComponentOutOfRange,
  NonFinite,
  UnknownTypeTag,
  SchemaViolation,
  IndexOutOfRange,
  // learner core
  DuplicateName,
  UnknownLearner,
  BadHyperparam,
  EmptyStats,
  NonFiniteMetric,
  EmptySeries,
  NotTrained,
  FormatMismatch,
  // model package
  PathEscape,
  DestNotEmpty,
  ChecksumMismatch,
  MissingManifest,
  MissingPayload,
  UnsupportedScheme,
  TransferFailed,
  DigestMismatch,
  InvalidArchive,
  // datasets
  EmptyDataset,
  UnreadableImage,
  DanglingReference,
  BadFractions,
  // reference learners
  MissingClass,
  DimensionMismatch,
  // active perception
  NotReset,
  EpisodeDone,
  // bench
  InferFailed,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace odr
