/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcluster/dataset.hpp"
#include "qcluster/optimizer.hpp"
#include "qcluster/relaxation.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcluster {

/// Algorithms in report column order.
enum class algorithm { exact, vqe, qaoa, ws_qaoa };

inline constexpr algorithm all_algorithms[] = {
    algorithm::exact, algorithm::vqe, algorithm::qaoa, algorithm::ws_qaoa};

std::string to_string(algorithm algo);
/// Accepts exact, vqe, qaoa, ws-qaoa. Throws input_error otherwise.
algorithm parse_algorithm(const std::string &name);

/// A run failed inside a named pipeline stage.
class run_error : public std::runtime_error {
public:
  run_error(std::string stage, const std::string &what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string &stage() const { return stage_; }

private:
  std::string stage_;
};

struct RunConfig {
  std::filesystem::path dataset_path;
  std::vector<std::string> columns;
  bool normalize = true;
  std::vector<algorithm> algorithms;
  std::size_t p = 1;
  std::size_t vqe_reps = default_vqe_reps;
  std::size_t shots = 4096;
  /// Use the finite-shot energy estimate inside the optimizer loop.
  bool shot_objective = false;
  std::vector<std::uint64_t> seeds{1};
  RelaxConfig relax;
  SpsaConfig spsa;
  std::size_t qubit_cap = default_qubit_cap;
  std::size_t jobs = 1;
  std::filesystem::path out_dir;
  std::vector<std::string> formats{"json", "csv", "md"};

  void validate() const;
};

/// Wall-clock seconds per stage; kept apart from deterministic outputs.
struct StageTimings {
  double graph_build = 0.0;
  double relaxation = 0.0;
  double optimization = 0.0;
  double sampling = 0.0;

  double total() const {
    return graph_build + relaxation + optimization + sampling;
  }
};

/// Outcome of one (algorithm, seed) run.
struct RunRecord {
  algorithm algo = algorithm::exact;
  std::uint64_t seed = 0;
  std::optional<std::string> error;

  std::size_t n = 0;
  /// Most probable bitstring of the final state (exact: selected ground state).
  basis_index bitstring = 0;
  std::vector<std::uint8_t> labels;
  /// <H_C> of the final state.
  double energy = 0.0;
  /// Best value seen by the optimizer (equals `energy` in exact mode).
  double optimizer_value = 0.0;
  /// H_C of the most probable bitstring.
  double bitstring_energy = 0.0;
  /// Mean energy over the final `shots` samples.
  double sampled_energy = 0.0;
  /// cut_value of `bitstring`.
  double solution_objective = 0.0;
  /// Probability on the exact ground-state set.
  double ground_state_mass = 0.0;
  std::optional<double> accuracy_vs_exact;
  std::optional<double> accuracy_vs_truth;

  std::vector<double> probabilities;
  std::map<basis_index, std::size_t> counts;
  std::vector<double> params;
  std::size_t evaluations = 0;
  double spsa_a = 0.0;

  // Warm-start path only.
  std::vector<double> relaxed;
  double relaxed_objective = 0.0;
  bool relax_capped = false;
  std::vector<double> warm_start_c;

  StageTimings timings;
};

/// Inputs shared by every run of one benchmark.
struct Problem {
  Dataset dataset;
  WeightedGraph graph;
  IsingDiagonal ising;
  ExactSolution exact;
  /// Bits of `exact`'s selected ground state.
  basis_index exact_bitstring = 0;
  std::optional<std::vector<std::uint8_t>> truth;
};

Problem prepare_problem(const Dataset &dataset,
                        std::size_t qubit_cap = default_qubit_cap);

std::vector<std::uint8_t> assign_clusters(basis_index bitstring, std::size_t n);

/// max(matches, N - matches) / N: cluster identity is defined up to a flip.
double cluster_accuracy(std::span<const std::uint8_t> labels,
                        std::span<const std::uint8_t> truth);

/// Argmax of `probs` with ties (|p - max| <= tie_tolerance) broken toward the
/// lowest index, then toward the qubit-0 = 0 member of a tied complementary
/// pair.
basis_index most_probable(std::span<const double> probs, std::size_t n);

inline constexpr double tie_tolerance = 1e-12;

/// Seeds derived from the run seed for each random stream.
struct RunSeeds {
  std::uint64_t init;
  std::uint64_t spsa;
  std::uint64_t relax;
  std::uint64_t sampling;
  std::uint64_t shot_objective;
};
RunSeeds derive_seeds(std::uint64_t seed);

/// Full pipeline for one algorithm and seed on a prepared problem. Stage
/// failures surface as run_error.
RunRecord run_algorithm(const Problem &problem, const RunConfig &config,
                        algorithm algo, std::uint64_t seed);

/// Loads the configured dataset, then runs the pipeline.
RunRecord run_algorithm(const RunConfig &config, algorithm algo,
                        std::uint64_t seed);

struct AlgorithmSummary {
  algorithm algo;
  std::size_t completed = 0;
  std::size_t failed = 0;
  double median_energy = 0.0;
  double median_solution_objective = 0.0;
  double median_ground_state_mass = 0.0;
  std::optional<double> median_accuracy_vs_exact;
  double median_total_time = 0.0;
  /// Index into BenchmarkReport::runs of the lower-median-energy run.
  std::optional<std::size_t> representative;
};

struct BenchmarkReport {
  RunConfig config;
  Problem problem;
  /// Ordered by (algorithm column order, seed position).
  std::vector<RunRecord> runs;
  std::vector<AlgorithmSummary> summaries;

  const AlgorithmSummary *summary(algorithm algo) const;
};

/// Throws input_error if the configuration or dataset is invalid; failures
/// inside individual runs are recorded on the run.
BenchmarkReport run_benchmark(const RunConfig &config);

/// Lower median (element floor((k-1)/2) of the sorted values).
double lower_median(std::vector<double> values);
/// Conventional median (mean of the two middle values for even k).
double median(std::vector<double> values);

} // namespace qcluster
