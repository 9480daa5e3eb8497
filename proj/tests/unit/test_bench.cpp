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

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "odr/bench/alloc_tracking.hpp"
#include "odr/bench/bench.hpp"
#include "odr_gtest.hpp"

namespace odr {
namespace {

using std::chrono::milliseconds;
using std::chrono::nanoseconds;
constexpr std::uint64_t kGiB = std::uint64_t{1} << 30;

std::vector<nanoseconds> even_split(std::size_t n, nanoseconds total) {
  return std::vector<nanoseconds>(n, total / static_cast<long>(n));
}

TEST(BenchSummary, FpsArithmetic) {
  const BenchConfig cfg;
  const auto fast = summarize(even_split(100, milliseconds(500)), milliseconds(500), std::nullopt,
                              MemMethod::Unavailable, cfg);
  EXPECT_DOUBLE_EQ(fast.fps, 200.0);
  EXPECT_TRUE(fast.pass_fps);
  EXPECT_TRUE(fast.pass_mem);

  const auto slow = summarize(even_split(10, milliseconds(500)), milliseconds(500), std::nullopt,
                              MemMethod::Unavailable, cfg);
  EXPECT_DOUBLE_EQ(slow.fps, 20.0);
  EXPECT_FALSE(slow.pass_fps);
}

TEST(BenchSummary, OrderStatistics) {
  std::vector<nanoseconds> l;
  for (int i = 1; i <= 20; ++i) l.emplace_back(i * 10);
  std::shuffle(l.begin(), l.end(), std::mt19937(1));
  const auto r = summarize(l, nanoseconds(2100), std::uint64_t{5}, MemMethod::RssSampled, BenchConfig{});
  EXPECT_DOUBLE_EQ(r.mean_latency_ns, 105.0);
  EXPECT_DOUBLE_EQ(r.median_latency_ns, 105.0);
  EXPECT_DOUBLE_EQ(r.p95_latency_ns, 190.0);  // nearest rank ceil(0.95 * 20) = 19
  EXPECT_DOUBLE_EQ(r.min_latency_ns, 10.0);
  EXPECT_EQ(r.latencies, l);
  EXPECT_ODR_ERROR(summarize({}, nanoseconds(1), std::nullopt, MemMethod::Unavailable, BenchConfig{}),
                   InvalidArgument);
}

// Property: statistics recompute identically from any permutation of the raw list.
TEST(BenchSummary, OrderInsensitive) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<nanoseconds> l(1 + gen() % 300);
    for (auto& v : l) v = nanoseconds(1 + gen() % 1000000);
    const nanoseconds total = std::accumulate(l.begin(), l.end(), nanoseconds(0));
    const auto a = summarize(l, total, std::nullopt, MemMethod::Unavailable, BenchConfig{});
    std::shuffle(l.begin(), l.end(), gen);
    const auto b = summarize(l, total, std::nullopt, MemMethod::Unavailable, BenchConfig{});
    ASSERT_EQ(a.mean_latency_ns, b.mean_latency_ns);
    ASSERT_EQ(a.median_latency_ns, b.median_latency_ns);
    ASSERT_EQ(a.p95_latency_ns, b.p95_latency_ns);
    ASSERT_EQ(a.min_latency_ns, b.min_latency_ns);
    ASSERT_EQ(a.fps, b.fps);
    ASSERT_NEAR(a.fps * a.mean_latency_ns * 1e-9, 1.0, 1e-9);
  }
}

BenchReport report_with(double fps, std::uint64_t mem) {
  BenchReport r;
  r.fps = fps;
  r.peak_mem_bytes = mem;
  return r;
}

TEST(BudgetCheck, Examples) {
  const BenchConfig cfg;
  EXPECT_TRUE(budget_check(report_with(30, kGiB / 2), cfg).empty());
  const auto one = budget_check(report_with(30, kGiB + kGiB / 2), cfg);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (BudgetViolation{"mem", 1.5 * kGiB, static_cast<double>(kGiB)}));
  const auto two = budget_check(report_with(20, 2 * kGiB), cfg);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].metric, "fps");
  EXPECT_EQ(two[0].measured, 20.0);
  EXPECT_EQ(two[0].budget, 25.0);
  EXPECT_EQ(two[1].metric, "mem");
  BenchReport unmeasured;
  unmeasured.fps = 100;
  EXPECT_TRUE(budget_check(unmeasured, cfg).empty());
}

TEST(BenchRun, FailureReportsIterationIndex) {
  int calls = 0;
  const auto failing = [&] {
    if (calls++ == 3) throw std::runtime_error("boom");
  };
  try {
    bench_run(failing, BenchConfig{.warmup_iters = 0, .measure_iters = 10});
    FAIL() << "expected InferFailed";
  } catch (const InferFailedError& e) {
    EXPECT_EQ(e.code(), Errc::InferFailed);
    EXPECT_EQ(e.iteration(), 3u);
    EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
  }
}

TEST(BenchRun, RejectsBadConfig) {
  EXPECT_ODR_ERROR(bench_run([] {}, BenchConfig{.measure_iters = 0}), InvalidArgument);
  EXPECT_ODR_ERROR(bench_run([] {}, BenchConfig{.min_fps = 0}), InvalidArgument);
}

TEST(BenchRun, WarmupExcluded) {
  int calls = 0;
  const auto r = bench_run([&] { ++calls; }, BenchConfig{.warmup_iters = 7, .measure_iters = 13});
  EXPECT_EQ(calls, 20);
  EXPECT_EQ(r.latencies.size(), 13u);
}

TEST(BenchRun, SleepEnvelope) {
  const auto r = bench_run([] { std::this_thread::sleep_for(milliseconds(1)); },
                           BenchConfig{.warmup_iters = 5, .measure_iters = 200});
  EXPECT_GE(r.fps, 500.0);
  EXPECT_LE(r.fps, 1000.0);
  EXPECT_NEAR(r.fps * r.mean_latency_ns * 1e-9, 1.0, 0.2);
  EXPECT_TRUE(r.pass_fps);
}

TEST(BenchRun, MemoryMethodIsRecorded) {
  const auto r = bench_run([] {}, BenchConfig{.warmup_iters = 0, .measure_iters = 5});
  // This binary does not link the allocator hooks, so RSS sampling is used.
  EXPECT_FALSE(alloc_tracking::available());
  EXPECT_EQ(r.mem_method, MemMethod::RssSampled);
  ASSERT_TRUE(r.peak_mem_bytes.has_value());
  EXPECT_GT(*r.peak_mem_bytes, 0u);
}

TEST(RssSampler, SeesLargeResidentAllocation) {
  RssSampler sampler;
  ASSERT_TRUE(sampler.available());
  const auto before = sampler.sample();
  sampler.start();
  {
    std::vector<char> block(64 << 20, 1);
    std::this_thread::sleep_for(milliseconds(30));
    EXPECT_EQ(block[12345], 1);
  }
  const auto peak = sampler.stop();
  EXPECT_GE(peak, before + (48u << 20));
}

TEST(BenchReportJson, Fields) {
  const auto r = summarize({nanoseconds(10), nanoseconds(30)}, nanoseconds(40), std::nullopt,
                           MemMethod::Unavailable, BenchConfig{});
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j.at("latencies_ns"), nlohmann::json::array({10, 30}));
  EXPECT_EQ(j.at("total_ns"), 40);
  EXPECT_EQ(j.at("median_latency_ns"), 20.0);
  EXPECT_TRUE(j.at("peak_mem_bytes").is_null());
  EXPECT_EQ(j.at("mem_method"), "unavailable");
  EXPECT_EQ(j.at("pass_fps"), true);
  EXPECT_EQ(j.at("pass_mem"), true);
  for (const char* key : {"mean_latency_ns", "p95_latency_ns", "min_latency_ns", "fps"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(to_string(MemMethod::AllocatorInstrumented), "allocator_instrumented");
  EXPECT_EQ(to_string(MemMethod::RssSampled), "rss_sampled");
}

}  // namespace
}  // namespace odr
