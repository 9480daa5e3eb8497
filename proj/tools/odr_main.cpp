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

// odr: command-line front end for packaging, validation, inference,
// benchmarking, dataset inspection, training and the bearing simulation.
//
// Exit codes: 0 success, 1 operational error, 2 usage error, 3 budget
// violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "odr/active/bearing_learner.hpp"
#include "odr/active/episode.hpp"
#include "odr/active/sphere_env.hpp"
#include "odr/bench/bench.hpp"
#include "odr/datasets/dataset.hpp"
#include "odr/engine/draw.hpp"
#include "odr/engine/image.hpp"
#include "odr/error.hpp"
#include "odr/io.hpp"
#include "odr/learner/stats.hpp"
#include "odr/learners/builtin.hpp"
#include "odr/package/package.hpp"

namespace {

namespace fs = std::filesystem;

enum ExitCode : int { kOk = 0, kOperational = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

odr::Hyperparams parse_params(const std::vector<std::string>& assignments) {
  odr::Hyperparams hp;
  for (const auto& a : assignments) {
    try {
      auto [key, value] = odr::Hyperparams::parse_assignment(a);
      hp.set(std::move(key), std::move(value));
    } catch (const odr::Error& e) {
      throw UsageError(fmt::format("--param {}: {}", a, e.detail()));
    }
  }
  return hp;
}

bool has_extension(const fs::path& p, std::initializer_list<std::string_view> exts) {
  const std::string ext = p.extension().string();
  for (auto e : exts) {
    if (ext == e) return true;
  }
  return false;
}

// Images (.ppm/.pgm) yield one item; .json holds one vector or a list of them.
std::vector<odr::Data> load_inputs(const fs::path& path) {
  if (has_extension(path, {".ppm", ".pgm", ".pnm"})) return {odr::image_open(path)};
  if (has_extension(path, {".json"})) {
    const std::string text = odr::read_text_file(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw odr::Error(odr::Errc::SchemaViolation, fmt::format("{}: {}", path.string(), e.what()));
    }
    auto to_vector = [&](const nlohmann::json& row) {
      if (!row.is_array()) throw odr::Error(odr::Errc::SchemaViolation, path.string());
      std::vector<double> values;
      for (const auto& v : row) {
        if (!v.is_number()) throw odr::Error(odr::Errc::SchemaViolation, path.string());
        values.push_back(v.get<double>());
      }
      return odr::Data{odr::Vector(std::move(values))};
    };
    if (!j.is_array() || j.empty()) {
      throw odr::Error(odr::Errc::SchemaViolation, fmt::format("{}: expected a list", path.string()));
    }
    if (j.front().is_array()) {
      std::vector<odr::Data> out;
      for (const auto& row : j) out.push_back(to_vector(row));
      return out;
    }
    return {to_vector(j)};
  }
  if (!fs::exists(path)) throw odr::Error(odr::Errc::FileNotFound, path.string());
  throw odr::Error(odr::Errc::UnsupportedFormat,
                   fmt::format("{}: expected .ppm, .pgm or .json", path.string()));
}

std::unique_ptr<odr::Learner> load_learner(const std::string& name, const odr::Hyperparams& hp,
                                           const fs::path& model) {
  auto learner = odr::default_registry().create(name, hp);
  learner->load(model);
  return learner;
}

// ---- package ---------------------------------------------------------------

struct PackageArgs {
  std::string manifest;
  std::string payload_dir;
  std::string out;
};

int cmd_package(const PackageArgs& a) {
  odr::Manifest m = odr::manifest_from_json(odr::read_text_file(a.manifest));
  odr::Payloads payloads;
  for (const auto& p : m.model_paths) payloads[p] = odr::read_file(fs::path(a.payload_dir) / p);
  const auto pkg = odr::package_write(std::move(m), payloads, a.out);
  fmt::print("{}\n", pkg.root.string());
  return kOk;
}

// ---- validate --------------------------------------------------------------

int cmd_validate(const std::string& path) {
  const odr::Manifest m = odr::package_validate(path);
  fmt::print("name: {}\n", m.name);
  fmt::print("format: {}\n", odr::to_string(m.model_format));
  fmt::print("schema_version: {}\n", m.schema_version);
  fmt::print("optimized: {}\n", m.optimized);
  if (m.classes) fmt::print("classes: {}\n", fmt::join(*m.classes, ", "));
  fmt::print("paths:\n");
  for (const auto& p : m.model_paths) fmt::print("  {} {}\n", p, m.checksums.at(p));
  return kOk;
}

// ---- infer -----------------------------------------------------------------

struct InferArgs {
  std::string model;
  std::string learner;
  std::string input;
  std::string draw;
  std::vector<std::string> params;
};

int cmd_infer(const InferArgs& a) {
  const auto hp = parse_params(a.params);
  auto learner = load_learner(a.learner, hp, a.model);
  const auto inputs = load_inputs(a.input);
  std::vector<odr::AnyTarget> all;
  for (const auto& input : inputs) {
    for (auto& t : learner->infer(input)) {
      fmt::print("{}\n", odr::target_to_string(t));
      all.push_back(std::move(t));
    }
  }
  if (!a.draw.empty()) {
    std::vector<odr::BoundingBox> boxes;
    for (const auto& t : all) {
      const auto* b = std::get_if<odr::BoundingBox>(&t);
      if (b == nullptr) throw UsageError("--draw requires box outputs");
      boxes.push_back(*b);
    }
    const auto* image = inputs.size() == 1 ? std::get_if<odr::Image>(&inputs.front()) : nullptr;
    if (image == nullptr) throw UsageError("--draw requires an image input");
    const auto manifest = odr::package_validate(a.model);
    std::vector<std::string> names = manifest.classes.value_or(std::vector<std::string>{});
    odr::image_save(a.draw, odr::draw_bounding_boxes(*image, boxes, names));
  }
  return kOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string model;
  std::string learner;
  std::string input;
  std::string json;
  std::vector<std::string> params;
  double min_fps = 25.0;
  std::uint64_t max_mem = std::uint64_t{1} << 30;
  std::size_t warmup = 10;
  std::size_t iters = 100;
  std::string mem_policy = "strict";
};

int cmd_bench(const BenchArgs& a) {
  odr::BenchConfig cfg;
  cfg.min_fps = a.min_fps;
  cfg.max_mem_bytes = a.max_mem;
  cfg.warmup_iters = a.warmup;
  cfg.measure_iters = a.iters;
  try {
    cfg.validate();
  } catch (const odr::Error& e) {
    throw UsageError(e.detail());
  }
  auto learner = load_learner(a.learner, parse_params(a.params), a.model);
  const odr::Data input = load_inputs(a.input).front();
  const auto report = odr::bench_run([&] { learner->infer(input); }, cfg);
  odr::write_text_file(a.json, odr::report_to_json(report));
  const auto violations = odr::budget_check(report, cfg);

  bool fps_ok = true;
  bool mem_ok = true;
  for (const auto& v : violations) {
    std::cerr << fmt::format("budget violation: {} measured {} budget {}\n", v.metric, v.measured, v.budget);
    (v.metric == "fps" ? fps_ok : mem_ok) = false;
  }
  const bool warn_mem = a.mem_policy == "warn";
  fmt::print("report: {}\n", a.json);
  fmt::print("mem_method: {}\n", odr::to_string(report.mem_method));
  fmt::print("fps: {}\n", fps_ok ? "pass" : "fail");
  fmt::print("mem: {}\n", mem_ok ? "pass" : (warn_mem ? "warn" : "fail"));
  return (!fps_ok || (!mem_ok && !warn_mem)) ? kBudget : kOk;
}

// ---- sim -------------------------------------------------------------------

struct SimArgs {
  std::uint64_t seed = 0;
  std::size_t steps = 200;
  double noise = 0.0;
  double kappa = 1.0;
  double probe_step = 0.2;
  std::string trace;
};

int cmd_sim(const SimArgs& a) {
  odr::SphereBearingConfig cfg;
  cfg.kappa = a.kappa;
  cfg.noise_sigma = a.noise;
  cfg.max_steps = a.steps;
  odr::SphereBearingEnv env(cfg);
  odr::ActiveBearingLearner learner({{"probe_step", a.probe_step}, {"max_step", cfg.max_step}});
  const auto trace = odr::run_episode(env, learner, a.steps, a.seed);
  if (!a.trace.empty()) odr::write_text_file(a.trace, odr::trace_to_jsonl(trace));
  fmt::print("steps: {}\n", trace.steps.size());
  fmt::print("final_angular_error: {:.6f}\n", trace.final_angular_error());
  return kOk;
}

// ---- dataset ---------------------------------------------------------------

int cmd_dataset_inspect(const std::string& path, const std::string& type) {
  const auto opened = odr::open_external({path, odr::parse_dataset_type(type)});
  fmt::print("length: {}\n", opened.dataset->size());
  for (const auto& [index, name] : opened.classes) fmt::print("{} {}\n", index, name);
  return kOk;
}

// ---- fit -------------------------------------------------------------------

struct FitArgs {
  std::string learner;
  std::string dataset;
  std::string type = "image_folder";
  std::string out;
  std::vector<std::string> params;
  bool optimize = false;
};

int cmd_fit(const FitArgs& a) {
  auto learner = odr::default_registry().create(a.learner, parse_params(a.params));
  const auto opened = odr::open_external({a.dataset, odr::parse_dataset_type(a.type)});
  const auto stats = learner->fit(*opened.dataset);
  if (a.optimize) learner->optimize();
  learner->save(a.out);
  fmt::print("{}\n", odr::stats_to_json(stats));
  fmt::print("package: {}\n", a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odr: model packaging, inference and benchmarking"};
  app.require_subcommand(1);

  PackageArgs package_args;
  auto* package = app.add_subcommand("package", "Build a model package from a manifest and payloads");
  package->add_option("--manifest", package_args.manifest, "manifest JSON")->required();
  package->add_option("--payload-dir", package_args.payload_dir, "directory holding the payloads")->required();
  package->add_option("--out", package_args.out, "destination directory")->required();

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a package's manifest and checksums");
  validate->add_option("package", validate_path, "package directory")->required();

  InferArgs infer_args;
  auto* infer = app.add_subcommand("infer", "Run a packaged model on an input");
  infer->add_option("--model", infer_args.model, "package directory")->required();
  infer->add_option("--learner", infer_args.learner, "registered learner name")->required();
  infer->add_option("--input", infer_args.input, ".ppm/.pgm image or .json vector(s)")->required();
  infer->add_option("--draw", infer_args.draw, "write the image annotated with box outputs");
  infer->add_option("--param", infer_args.params, "hyperparameter key=value");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Measure latency, FPS and memory against budgets");
  bench->add_option("--model", bench_args.model, "package directory")->required();
  bench->add_option("--learner", bench_args.learner, "registered learner name")->required();
  bench->add_option("--input", bench_args.input, "input file")->required();
  bench->add_option("--json", bench_args.json, "report path")->required();
  bench->add_option("--min-fps", bench_args.min_fps, "FPS budget")->capture_default_str();
  bench->add_option("--max-mem", bench_args.max_mem, "memory budget in bytes")->capture_default_str();
  bench->add_option("--warmup", bench_args.warmup, "unmeasured iterations")->capture_default_str();
  bench->add_option("--iters", bench_args.iters, "measured iterations")->capture_default_str();
  bench->add_option("--mem-policy", bench_args.mem_policy, "strict: memory violation exits 3; warn: report only")
      ->check(CLI::IsMember({"strict", "warn"}))
      ->capture_default_str();
  bench->add_option("--param", bench_args.params, "hyperparameter key=value");

  SimArgs sim_args;
  auto* sim = app.add_subcommand("sim", "Run the bearing-search simulation");
  sim->add_option("--seed", sim_args.seed, "environment seed")->capture_default_str();
  sim->add_option("--steps", sim_args.steps, "maximum steps")->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--noise", sim_args.noise, "observation noise sigma")->check(CLI::NonNegativeNumber)->capture_default_str();
  sim->add_option("--kappa", sim_args.kappa, "signal decay rate")->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--probe-step", sim_args.probe_step, "probe action magnitude")->capture_default_str();
  sim->add_option("--trace", sim_args.trace, "JSON-lines trace output");

  std::string dataset_path;
  std::string dataset_type = "image_folder";
  auto* dataset = app.add_subcommand("dataset", "Dataset utilities");
  dataset->require_subcommand(1);
  auto* inspect = dataset->add_subcommand("inspect", "Print length and class table");
  inspect->add_option("--path", dataset_path, "dataset root or annotation file")->required();
  inspect->add_option("--type", dataset_type, "image_folder or coco_subset")
      ->check(CLI::IsMember({"image_folder", "coco_subset"}))
      ->capture_default_str();

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Train a learner on a dataset and save a package");
  fit->add_option("--learner", fit_args.learner, "registered learner name")->required();
  fit->add_option("--dataset", fit_args.dataset, "dataset root or annotation file")->required();
  fit->add_option("--type", fit_args.type, "image_folder or coco_subset")
      ->check(CLI::IsMember({"image_folder", "coco_subset"}))
      ->capture_default_str();
  fit->add_option("--out", fit_args.out, "package destination")->required();
  fit->add_option("--param", fit_args.params, "hyperparameter key=value");
  fit->add_flag("--optimize", fit_args.optimize, "optimize before saving");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // Report the problem followed by the usage of the innermost parsed command.
    const CLI::App* context = &app;
    while (!context->get_subcommands().empty()) context = context->get_subcommands().front();
    std::cerr << e.get_name() << ": " << e.what() << "\n\n" << context->help();
    return kUsage;
  }

  try {
    if (*package) return cmd_package(package_args);
    if (*validate) return cmd_validate(validate_path);
    if (*infer) return cmd_infer(infer_args);
    if (*bench) return cmd_bench(bench_args);
    if (*sim) return cmd_sim(sim_args);
    if (*inspect) return cmd_dataset_inspect(dataset_path, dataset_type);
    if (*fit) return cmd_fit(fit_args);
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const odr::Error& e) {
    std::cerr << e.what() << '\n';
    return kOperational;
  } catch (const std::exception& e) {
    std::cerr << "Internal: " << e.what() << '\n';
    return kOperational;
  }
  return kUsage;
}
