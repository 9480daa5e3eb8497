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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odr/error.hpp"

namespace odr {

struct BenchConfig {
  std::size_t warmup_iters = 10;
  std::size_t measure_iters = 100;
  double min_fps = 25.0;
  std::uint64_t max_mem_bytes = std::uint64_t{1} << 30;

  /// InvalidArgument unless measure_iters >= 1 and both budgets are positive.
  void validate() const;
};

enum class MemMethod { AllocatorInstrumented, RssSampled, Unavailable };

std::string_view to_string(MemMethod method) noexcept;

struct BenchReport {
  std::vector<std::chrono::nanoseconds> latencies;
  std::chrono::nanoseconds total{0};
  double mean_latency_ns = 0.0;
  double median_latency_ns = 0.0;
  double p95_latency_ns = 0.0;
  double min_latency_ns = 0.0;
  double fps = 0.0;
  std::optional<std::uint64_t> peak_mem_bytes;
  MemMethod mem_method = MemMethod::Unavailable;
  bool pass_fps = false;
  bool pass_mem = false;
};

/// Raised by bench_run when the measured call throws. iteration() counts calls
/// from 0, warmup included.
class InferFailedError : public Error {
 public:
  InferFailedError(std::size_t iteration, std::string_view cause);
  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::size_t iteration_;
};

/// Builds a report from raw measurements. fps = latencies.size() / total; p95
/// is the nearest-rank percentile. A missing peak passes the memory budget.
BenchReport summarize(std::vector<std::chrono::nanoseconds> latencies, std::chrono::nanoseconds total,
                      std::optional<std::uint64_t> peak_mem_bytes, MemMethod method,
                      const BenchConfig& cfg);

/// Runs `fn` warmup_iters times unmeasured, then measure_iters times on a
/// monotonic clock while tracking peak memory.
BenchReport bench_run(const std::function<void()>& fn, const BenchConfig& cfg = {});

struct BudgetViolation {
  std::string metric;  // "fps" or "mem"
  double measured = 0.0;
  double budget = 0.0;

  bool operator==(const BudgetViolation&) const = default;
};

std::vector<BudgetViolation> budget_check(const BenchReport& report, const BenchConfig& cfg);

/// JSON object; durations in nanoseconds.
std::string report_to_json(const BenchReport& report);

/// Peak resident set size observer polling /proc/self/statm every 5 ms on a
/// background thread. available() is false where procfs is missing.
class RssSampler {
 public:
  RssSampler();
  ~RssSampler();
  RssSampler(const RssSampler&) = delete;
  RssSampler& operator=(const RssSampler&) = delete;

  bool available() const noexcept { return fd_ >= 0; }
  void start();
  /// Stops polling and returns the largest sample seen, including one taken
  /// at start and one at stop.
  std::uint64_t stop();

  /// Current resident bytes, or 0 when unavailable. Does not allocate.
  std::uint64_t sample() const noexcept;

 private:
  struct State;
  int fd_ = -1;
  std::uint64_t page_size_ = 0;
  State* state_ = nullptr;
};

}  // namespace odr
