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

#include "odr/error.hpp"

#include <utility>

namespace odr {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::BadChannels: return "BadChannels";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::CorruptHeader: return "CorruptHeader";
    case Errc::AxisCountInvalid: return "AxisCountInvalid";
    case Errc::ComponentOutOfRange: return "ComponentOutOfRange";
    case Errc::NonFinite: return "NonFinite";
    case Errc::UnknownTypeTag: return "UnknownTypeTag";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::UnknownLearner: return "UnknownLearner";
    case Errc::BadHyperparam: return "BadHyperparam";
    case Errc::EmptyStats: return "EmptyStats";
    case Errc::NonFiniteMetric: return "NonFiniteMetric";
    case Errc::EmptySeries: return "EmptySeries";
    case Errc::NotTrained: return "NotTrained";
    case Errc::FormatMismatch: return "FormatMismatch";
    case Errc::PathEscape: return "PathEscape";
    case Errc::DestNotEmpty: return "DestNotEmpty";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::MissingManifest: return "MissingManifest";
    case Errc::MissingPayload: return "MissingPayload";
    case Errc::UnsupportedScheme: return "UnsupportedScheme";
    case Errc::TransferFailed: return "TransferFailed";
    case Errc::DigestMismatch: return "DigestMismatch";
    case Errc::InvalidArchive: return "InvalidArchive";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::UnreadableImage: return "UnreadableImage";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::BadFractions: return "BadFractions";
    case Errc::MissingClass: return "MissingClass";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotReset: return "NotReset";
    case Errc::EpisodeDone: return "EpisodeDone";
    case Errc::InferFailed: return "InferFailed";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& detail) {
  std::string msg(errc_name(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(Errc code, std::string detail)
    : std::runtime_error(format_message(code, detail)), code_(code), detail_(std::move(detail)) {}

}  // namespace odr
