/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

// bench: command-line front end for the MAXCUT clustering workbench.
//
//   bench run --dataset data/cars.csv --algo all --seeds 1..10 --out out/
//   bench datasets
//
// Exit codes: 0 success, 1 validation error, 2 runtime failure.

#include "qcluster/bench.hpp"
#include "qcluster/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <sstream>

using namespace qcluster;

namespace {

std::vector<std::string> split_list(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::uint64_t parse_seed(const std::string &s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw input_error("invalid seed '" + s + "'");
  return v;
}

// Comma-separated seeds; "a..b" expands to the inclusive range.
std::vector<std::uint64_t> parse_seeds(const std::string &text) {
  std::vector<std::uint64_t> seeds;
  for (const auto &item : split_list(text)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(parse_seed(item));
      continue;
    }
    const auto lo = parse_seed(item.substr(0, dots));
    const auto hi = parse_seed(item.substr(dots + 2));
    if (hi < lo || hi - lo > 100000)
      throw input_error("invalid seed range '" + item + "'");
    for (auto s = lo; s <= hi; ++s)
      seeds.push_back(s);
  }
  return seeds;
}

std::vector<algorithm> parse_algorithms(const std::string &text) {
  std::vector<algorithm> out;
  for (const auto &name : split_list(text)) {
    if (name == "all")
      return {std::begin(all_algorithms), std::end(all_algorithms)};
    out.push_back(parse_algorithm(name));
  }
  return out;
}

void print_summary(const BenchmarkReport &report) {
  const auto &exact = report.problem.exact;
  std::cout << "rows " << report.problem.dataset.size() << ", ground energy "
            << format_number(exact.ground_energy) << ", max cut "
            << format_number(exact.max_cut) << "\n";
  for (const auto &s : report.summaries) {
    std::cout << "  " << to_string(s.algo) << ": " << s.completed << " ok, "
              << s.failed << " failed";
    if (s.representative)
      std::cout << ", median energy " << format_number(s.median_energy)
                << ", median objective "
                << format_number(s.median_solution_objective)
                << ", median ground-state mass "
                << format_number(s.median_ground_state_mass);
    if (s.median_accuracy_vs_exact)
      std::cout << ", median accuracy "
                << format_number(*s.median_accuracy_vs_exact);
    std::cout << "\n";
  }
  for (const auto &r : report.runs)
    if (r.error)
      std::cerr << "run " << to_string(r.algo) << " seed " << r.seed
                << " failed: " << *r.error << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"MAXCUT clustering with simulated QAOA, warm-start QAOA and VQE"};
  app.require_subcommand(1);

  RunConfig config;
  std::string columns, algos = "all", seeds = "1", formats = "json,csv,md";
  std::string dataset, out_dir = "bench_out";
  bool no_normalize = false;
  bool shot_objective = false;

  auto *run = app.add_subcommand("run", "Run the benchmark on one dataset");
  run->add_option("--dataset", dataset, "CSV dataset path")->required();
  run->add_option("--columns", columns,
                  "Comma-separated feature columns (default: all numeric)");
  run->add_flag("--no-normalize", no_normalize, "Skip per-column z-scoring");
  run->add_option("--algo", algos, "all|exact|vqe|qaoa|ws-qaoa (comma list)");
  run->add_option("--p", config.p, "QAOA depth");
  run->add_option("--vqe-reps", config.vqe_reps, "VQE repetitions");
  run->add_option("--shots", config.shots, "Shots for final-state sampling");
  run->add_flag("--shot-objective", shot_objective,
                "Optimize the finite-shot energy estimate");
  run->add_option("--epsilon", config.relax.epsilon, "Warm-start clip margin");
  run->add_option("--restarts", config.relax.restarts, "Relaxation restarts");
  run->add_option("--seeds", seeds, "Seeds, e.g. 1,2,3 or 1..10");
  run->add_option("--spsa-iters", config.spsa.max_iters, "SPSA iterations");
  run->add_option("--jobs", config.jobs, "Concurrent runs");
  run->add_option("--qubit-cap", config.qubit_cap, "Maximum qubit count");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--format", formats, "Comma list of json,csv,md");

  auto *list = app.add_subcommand("datasets", "List shipped datasets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  if (list->parsed()) {
    for (const auto &path : shipped_datasets()) {
      try {
        const Dataset ds = load_dataset(path, {}, false);
        std::cout << path.string() << "  rows=" << ds.size() << "  features=";
        for (std::size_t k = 0; k < ds.columns.size(); ++k)
          std::cout << (k ? "," : "") << ds.columns[k];
        std::cout << "\n";
      } catch (const std::exception &e) {
        std::cout << path.string() << "  (unreadable: " << e.what() << ")\n";
      }
    }
    return 0;
  }

  BenchmarkReport report;
  try {
    config.dataset_path = dataset;
    config.columns = split_list(columns);
    config.normalize = !no_normalize;
    config.shot_objective = shot_objective;
    config.algorithms = parse_algorithms(algos);
    config.seeds = parse_seeds(seeds);
    config.formats = split_list(formats);
    config.out_dir = out_dir;
    report = run_benchmark(config);
  } catch (const input_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 2;
  }

  try {
    for (const auto &path : emit_report(report, config.out_dir, config.formats))
      std::cout << "wrote " << path.string() << "\n";
  } catch (const std::exception &e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 2;
  }
  print_summary(report);

  for (const auto &r : report.runs)
    if (r.error)
      return 2;
  return 0;
}
