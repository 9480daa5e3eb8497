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

#include "odr/bench/bench.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "odr/bench/alloc_tracking.hpp"

namespace odr {

using std::chrono::nanoseconds;

void BenchConfig::validate() const {
  if (measure_iters == 0) throw Error(Errc::InvalidArgument, "measure_iters must be at least 1");
  if (!(min_fps > 0.0) || !std::isfinite(min_fps)) {
    throw Error(Errc::InvalidArgument, "min_fps must be positive");
  }
  if (max_mem_bytes == 0) throw Error(Errc::InvalidArgument, "max_mem_bytes must be positive");
}

std::string_view to_string(MemMethod method) noexcept {
  switch (method) {
    case MemMethod::AllocatorInstrumented:
      return "allocator_instrumented";
    case MemMethod::RssSampled:
      return "rss_sampled";
    case MemMethod::Unavailable:
      return "unavailable";
  }
  return "unavailable";
}

InferFailedError::InferFailedError(std::size_t iteration, std::string_view cause)
    : Error(Errc::InferFailed, fmt::format("iteration {}: {}", iteration, cause)), iteration_(iteration) {}

BenchReport summarize(std::vector<nanoseconds> latencies, nanoseconds total,
                      std::optional<std::uint64_t> peak_mem_bytes, MemMethod method,
                      const BenchConfig& cfg) {
  if (latencies.empty()) throw Error(Errc::InvalidArgument, "no latencies to summarize");
  if (total.count() <= 0) throw Error(Errc::InvalidArgument, "total duration must be positive");
  BenchReport r;
  std::vector<double> sorted;
  sorted.reserve(latencies.size());
  for (auto l : latencies) sorted.push_back(static_cast<double>(l.count()));
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  r.mean_latency_ns = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  r.median_latency_ns = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(n)));
  r.p95_latency_ns = sorted[std::max<std::size_t>(rank, 1) - 1];
  r.min_latency_ns = sorted.front();
  r.fps = static_cast<double>(n) / (static_cast<double>(total.count()) * 1e-9);
  r.latencies = std::move(latencies);
  r.total = total;
  r.peak_mem_bytes = peak_mem_bytes;
  r.mem_method = method;
  r.pass_fps = r.fps >= cfg.min_fps;
  r.pass_mem = !peak_mem_bytes || *peak_mem_bytes <= cfg.max_mem_bytes;
  return r;
}

BenchReport bench_run(const std::function<void()>& fn, const BenchConfig& cfg) {
  cfg.validate();
  using Clock = std::chrono::steady_clock;
  std::size_t call = 0;
  auto invoke = [&] {
    try {
      fn();
    } catch (const std::exception& e) {
      throw InferFailedError(call, e.what());
    } catch (...) {
      throw InferFailedError(call, "unknown exception");
    }
    ++call;
  };
  for (std::size_t i = 0; i < cfg.warmup_iters; ++i) invoke();

  const bool heap_tracked = alloc_tracking::available();
  RssSampler rss;
  std::vector<nanoseconds> latencies(cfg.measure_iters);
  if (heap_tracked) {
    alloc_tracking::reset_peak();
  } else if (rss.available()) {
    rss.start();
  }
  const auto begin = Clock::now();
  try {
    for (std::size_t i = 0; i < cfg.measure_iters; ++i) {
      const auto t0 = Clock::now();
      invoke();
      latencies[i] = std::chrono::duration_cast<nanoseconds>(Clock::now() - t0);
    }
  } catch (...) {
    if (!heap_tracked && rss.available()) rss.stop();
    throw;
  }
  const auto total = std::chrono::duration_cast<nanoseconds>(Clock::now() - begin);

  std::optional<std::uint64_t> peak;
  MemMethod method = MemMethod::Unavailable;
  if (heap_tracked) {
    peak = alloc_tracking::peak_bytes();
    method = MemMethod::AllocatorInstrumented;
  } else if (rss.available()) {
    peak = rss.stop();
    method = MemMethod::RssSampled;
  }
  return summarize(std::move(latencies), std::max(total, nanoseconds(1)), peak, method, cfg);
}

std::vector<BudgetViolation> budget_check(const BenchReport& report, const BenchConfig& cfg) {
  std::vector<BudgetViolation> out;
  if (report.fps < cfg.min_fps) out.push_back({"fps", report.fps, cfg.min_fps});
  if (report.peak_mem_bytes && *report.peak_mem_bytes > cfg.max_mem_bytes) {
    out.push_back({"mem", static_cast<double>(*report.peak_mem_bytes),
                   static_cast<double>(cfg.max_mem_bytes)});
  }
  return out;
}

std::string report_to_json(const BenchReport& report) {
  nlohmann::ordered_json latencies = nlohmann::ordered_json::array();
  for (auto l : report.latencies) latencies.push_back(l.count());
  nlohmann::ordered_json j;
  j["latencies_ns"] = std::move(latencies);
  j["total_ns"] = report.total.count();
  j["mean_latency_ns"] = report.mean_latency_ns;
  j["median_latency_ns"] = report.median_latency_ns;
  j["p95_latency_ns"] = report.p95_latency_ns;
  j["min_latency_ns"] = report.min_latency_ns;
  j["fps"] = report.fps;
  j["peak_mem_bytes"] = report.peak_mem_bytes ? nlohmann::ordered_json(*report.peak_mem_bytes)
                                              : nlohmann::ordered_json(nullptr);
  j["mem_method"] = std::string(to_string(report.mem_method));
  j["pass_fps"] = report.pass_fps;
  j["pass_mem"] = report.pass_mem;
  return j.dump(2) + "\n";
}

struct RssSampler::State {
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> peak{0};
  std::thread worker;
};

RssSampler::RssSampler() {
  fd_ = ::open("/proc/self/statm", O_RDONLY | O_CLOEXEC);
  const long page = ::sysconf(_SC_PAGESIZE);
  page_size_ = page > 0 ? static_cast<std::uint64_t>(page) : 4096;
  state_ = new State();
}

RssSampler::~RssSampler() {
  if (state_->worker.joinable()) stop();
  delete state_;
  if (fd_ >= 0) ::close(fd_);
}

std::uint64_t RssSampler::sample() const noexcept {
  if (fd_ < 0) return 0;
  char buf[128];
  const ssize_t n = ::pread(fd_, buf, sizeof buf - 1, 0);
  if (n <= 0) return 0;
  // statm: size resident shared text lib data dt (pages)
  ssize_t i = 0;
  while (i < n && buf[i] != ' ') ++i;
  ++i;
  std::uint64_t pages = 0;
  for (; i < n && buf[i] >= '0' && buf[i] <= '9'; ++i) pages = pages * 10 + static_cast<std::uint64_t>(buf[i] - '0');
  return pages * page_size_;
}

void RssSampler::start() {
  if (!available() || state_->worker.joinable()) return;
  state_->stop.store(false);
  state_->peak.store(sample());
  state_->worker = std::thread([this] {
    while (!state_->stop.load(std::memory_order_relaxed)) {
      const std::uint64_t now = sample();
      std::uint64_t prev = state_->peak.load(std::memory_order_relaxed);
      while (now > prev && !state_->peak.compare_exchange_weak(prev, now)) {
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  });
}

std::uint64_t RssSampler::stop() {
  if (state_->worker.joinable()) {
    state_->stop.store(true);
    state_->worker.join();
  }
  return std::max(state_->peak.load(), sample());
}

}  // namespace odr
