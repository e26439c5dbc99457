/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

namespace qcluster {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <typename F> auto in_stage(const char *stage, F &&body) {
  try {
    return body();
  } catch (const run_error &) {
    throw;
  } catch (const std::exception &e) {
    throw run_error(stage, e.what());
  }
}

std::vector<double> initial_params(algorithm algo, std::size_t count,
                                   std::uint64_t seed) {
  rng_engine rng(seed);
  std::vector<double> init(count);
  const double half_width = algo == algorithm::vqe ? std::numbers::pi : 0.1;
  for (auto &v : init)
    v = uniform(rng, -half_width, half_width);
  return init;
}

ansatz_kind kind_of(algorithm algo) {
  switch (algo) {
  case algorithm::vqe:
    return ansatz_kind::vqe;
  case algorithm::qaoa:
    return ansatz_kind::qaoa;
  case algorithm::ws_qaoa:
    return ansatz_kind::ws_qaoa;
  case algorithm::exact:
    break;
  }
  throw input_error("exact algorithm has no ansatz");
}

void finish_record(RunRecord &rec, const Problem &problem) {
  rec.labels = assign_clusters(rec.bitstring, rec.n);
  rec.bitstring_energy = problem.ising.energies[rec.bitstring];
  rec.solution_objective = cut_value(problem.graph, rec.bitstring);
  rec.ground_state_mass = 0.0;
  for (basis_index g : problem.exact.ground_states)
    rec.ground_state_mass += rec.probabilities[g];
  rec.accuracy_vs_exact = cluster_accuracy(
      rec.labels, assign_clusters(problem.exact_bitstring, rec.n));
  if (problem.truth)
    rec.accuracy_vs_truth = cluster_accuracy(rec.labels, *problem.truth);
}

} // namespace

std::string to_string(algorithm algo) {
  switch (algo) {
  case algorithm::exact:
    return "exact";
  case algorithm::vqe:
    return "vqe";
  case algorithm::qaoa:
    return "qaoa";
  case algorithm::ws_qaoa:
    return "ws-qaoa";
  }
  return "unknown";
}

algorithm parse_algorithm(const std::string &name) {
  for (algorithm a : all_algorithms)
    if (to_string(a) == name)
      return a;
  throw input_error("unknown algorithm '" + name +
                    "' (expected exact, vqe, qaoa, ws-qaoa or all)");
}

void RunConfig::validate() const {
  if (algorithms.empty())
    throw input_error("no algorithm selected");
  if (seeds.empty())
    throw input_error("seed list is empty");
  if (p == 0)
    throw input_error("qaoa depth p must be >= 1");
  if (shots == 0)
    throw input_error("shots must be >= 1");
  if (jobs == 0)
    throw input_error("jobs must be >= 1");
  for (const auto &f : formats)
    if (f != "json" && f != "csv" && f != "md")
      throw input_error("unknown output format '" + f + "'");
  relax.validate();
  spsa.validate();
}

Problem prepare_problem(const Dataset &dataset, std::size_t qubit_cap) {
  Problem pb;
  pb.dataset = dataset;
  pb.graph = euclidean_weights(dataset);
  pb.ising = ising_from_graph(pb.graph, qubit_cap);
  pb.exact = exact_solve(pb.ising, qubit_cap);
  std::vector<double> indicator(pb.ising.dimension(), 0.0);
  for (basis_index g : pb.exact.ground_states)
    indicator[g] = 1.0;
  pb.exact_bitstring = most_probable(indicator, pb.ising.n);
  pb.truth = truth_bits(dataset.labels);
  if (pb.truth && pb.truth->size() != dataset.size())
    pb.truth.reset();
  return pb;
}

std::vector<std::uint8_t> assign_clusters(basis_index bitstring, std::size_t n) {
  return bits_from_index(bitstring, n);
}

double cluster_accuracy(std::span<const std::uint8_t> labels,
                        std::span<const std::uint8_t> truth) {
  if (labels.size() != truth.size())
    throw input_error("label vector has " + std::to_string(labels.size()) +
                      " entries, truth has " + std::to_string(truth.size()));
  if (labels.empty())
    throw input_error("cannot score an empty labelling");
  std::size_t matches = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    matches += labels[i] == truth[i];
  const std::size_t n = labels.size();
  return static_cast<double>(std::max(matches, n - matches)) /
         static_cast<double>(n);
}

basis_index most_probable(std::span<const double> probs, std::size_t n) {
  if (probs.size() != (std::size_t{1} << n))
    throw input_error("probability vector length does not match 2^n");
  const double best = *std::max_element(probs.begin(), probs.end());
  basis_index pick = 0;
  for (basis_index x = 0; x < probs.size(); ++x)
    if (best - probs[x] <= tie_tolerance) {
      pick = x;
      break;
    }
  const basis_index flip = complement(pick, n);
  if ((pick & 1u) && best - probs[flip] <= tie_tolerance)
    pick = flip;
  return pick;
}

RunSeeds derive_seeds(std::uint64_t seed) {
  return {mix_seed(seed, 1), mix_seed(seed, 2), mix_seed(seed, 3),
          mix_seed(seed, 4), mix_seed(seed, 5)};
}

RunRecord run_algorithm(const Problem &problem, const RunConfig &config,
                        algorithm algo, std::uint64_t seed) {
  RunRecord rec;
  rec.algo = algo;
  rec.seed = seed;
  const RunSeeds seeds = derive_seeds(seed);

  auto t0 = clock_type::now();
  WeightedGraph graph;
  IsingDiagonal ising;
  in_stage("graph build", [&] {
    graph = euclidean_weights(problem.dataset);
    ising = ising_from_graph(graph, config.qubit_cap);
    return 0;
  });
  rec.timings.graph_build = seconds_since(t0);
  rec.n = ising.n;

  if (algo == algorithm::exact) {
    t0 = clock_type::now();
    const ExactSolution sol =
        in_stage("optimization", [&] { return exact_solve(ising, config.qubit_cap); });
    rec.timings.optimization = seconds_since(t0);
    rec.energy = rec.optimizer_value = sol.ground_energy;
    rec.probabilities.assign(ising.dimension(), 0.0);
    rec.bitstring = problem.exact_bitstring;
    rec.probabilities[rec.bitstring] = 1.0;
    rec.counts[rec.bitstring] = config.shots;
    rec.sampled_energy = sol.ground_energy;
    finish_record(rec, problem);
    return rec;
  }

  AnsatzContext context;
  context.p = config.p;
  context.vqe_reps = config.vqe_reps;

  if (algo == algorithm::ws_qaoa) {
    t0 = clock_type::now();
    in_stage("relaxation", [&] {
      RelaxConfig rc = config.relax;
      rc.seed = seeds.relax;
      const RelaxResult relaxed = relax_qubo(qubo_from_graph(graph), rc);
      rec.relaxed = relaxed.c_star;
      rec.relaxed_objective = relaxed.objective;
      rec.relax_capped = relaxed.capped;
      context.warm_start = make_warm_start(relaxed.c_star, rc.epsilon);
      rec.warm_start_c = context.warm_start->c_star;
      return 0;
    });
    rec.timings.relaxation = seconds_since(t0);
  }

  const ansatz_kind kind = kind_of(algo);
  t0 = clock_type::now();
  const Statevector final_state = in_stage("optimization", [&] {
    const ObjectiveMode mode =
        config.shot_objective
            ? ObjectiveMode::shot_estimate(config.shots, seeds.shot_objective)
            : ObjectiveMode::exact();
    const objective_fn objective = make_objective(kind, ising, context, mode);
    const auto init =
        initial_params(algo, parameter_count(kind, ising.n, context), seeds.init);
    SpsaConfig sc = config.spsa;
    sc.seed = seeds.spsa;
    const OptimizerResult opt = spsa_minimize(objective, init, sc);
    rec.params = opt.best_params;
    rec.optimizer_value = opt.best_value;
    rec.evaluations = opt.evaluations + opt.calibration_evaluations;
    rec.spsa_a = opt.a_used;
    return build_ansatz_state(kind, ising, context, opt.best_params);
  });
  rec.timings.optimization = seconds_since(t0);
  rec.energy = expectation_diagonal(final_state, ising);
  rec.probabilities = probabilities(final_state);

  t0 = clock_type::now();
  in_stage("sampling", [&] {
    rec.counts = sample_counts(final_state, config.shots, seeds.sampling);
    double total = 0.0;
    for (const auto &[x, count] : rec.counts)
      total += static_cast<double>(count) * ising.energies[x];
    rec.sampled_energy = total / static_cast<double>(config.shots);
    return 0;
  });
  rec.timings.sampling = seconds_since(t0);

  rec.bitstring = most_probable(rec.probabilities, rec.n);
  finish_record(rec, problem);
  return rec;
}

RunRecord run_algorithm(const RunConfig &config, algorithm algo,
                        std::uint64_t seed) {
  config.validate();
  const Dataset ds =
      load_dataset(config.dataset_path, config.columns, config.normalize);
  return run_algorithm(prepare_problem(ds, config.qubit_cap), config, algo,
                       seed);
}

double lower_median(std::vector<double> values) {
  if (values.empty())
    throw input_error("median of empty set");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

double median(std::vector<double> values) {
  if (values.empty())
    throw input_error("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  return k % 2 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

const AlgorithmSummary *BenchmarkReport::summary(algorithm algo) const {
  for (const auto &s : summaries)
    if (s.algo == algo)
      return &s;
  return nullptr;
}

BenchmarkReport run_benchmark(const RunConfig &config) {
  config.validate();
  BenchmarkReport report;
  report.config = config;
  const Dataset ds =
      load_dataset(config.dataset_path, config.columns, config.normalize);
  report.problem = prepare_problem(ds, config.qubit_cap);

  std::vector<algorithm> algos;
  for (algorithm a : all_algorithms)
    if (std::find(config.algorithms.begin(), config.algorithms.end(), a) !=
        config.algorithms.end())
      algos.push_back(a);

  struct Task {
    algorithm algo;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (algorithm a : algos)
    for (std::uint64_t s : config.seeds)
      tasks.push_back({a, s});

  report.runs.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        report.runs[i] =
            run_algorithm(report.problem, config, tasks[i].algo, tasks[i].seed);
      } catch (const std::exception &e) {
        RunRecord failed;
        failed.algo = tasks[i].algo;
        failed.seed = tasks[i].seed;
        failed.error = e.what();
        report.runs[i] = std::move(failed);
      }
    }
  };
  const std::size_t threads = std::min(config.jobs, tasks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  for (algorithm a : algos) {
    AlgorithmSummary s;
    s.algo = a;
    std::vector<double> energy, objective, mass, accuracy, time;
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
      const auto &r = report.runs[i];
      if (r.algo != a)
        continue;
      if (r.error) {
        ++s.failed;
        continue;
      }
      ++s.completed;
      ok.push_back(i);
      energy.push_back(r.energy);
      objective.push_back(r.solution_objective);
      mass.push_back(r.ground_state_mass);
      if (r.accuracy_vs_exact)
        accuracy.push_back(*r.accuracy_vs_exact);
      time.push_back(r.timings.total());
    }
    if (!ok.empty()) {
      s.median_energy = median(energy);
      s.median_solution_objective = median(objective);
      s.median_ground_state_mass = median(mass);
      if (!accuracy.empty())
        s.median_accuracy_vs_exact = median(accuracy);
      s.median_total_time = median(time);
      // Stable sort keeps seed order among equal energies.
      std::stable_sort(ok.begin(), ok.end(), [&](std::size_t x, std::size_t y) {
        return report.runs[x].energy < report.runs[y].energy;
      });
      s.representative = ok[(ok.size() - 1) / 2];
    }
    report.summaries.push_back(s);
  }
  return report;
}

} // namespace qcluster
