/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcluster/ansatz.hpp"
#include "qcluster/graph_model.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcluster {

using objective_fn = std::function<double(std::span<const double>)>;

/// SPSA gain schedule:
///   a_k = a / (A + k + 1)^alpha,   c_k = c / (k + 1)^gamma_exp.
/// With `calibrate` set, `a` is replaced before the first iteration so that
/// the mean first-step magnitude equals `target_step`.
struct SpsaConfig {
  std::size_t max_iters = 250;
  double a = 0.1;
  double c = 0.1;
  /// Stability offset; unset means 0.1 * max_iters.
  std::optional<double> A;
  double alpha = 0.602;
  double gamma_exp = 0.101;
  bool calibrate = true;
  double target_step = 0.1;
  std::size_t calibration_samples = 25;
  /// Stop once an update moves the iterate by less than this (0 disables).
  double param_tol = 0.0;
  std::uint64_t seed = 0;

  double stability() const { return A ? *A : 0.1 * static_cast<double>(max_iters); }
  void validate() const;
};

struct OptimizerResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  /// Iterate after the last update (not necessarily the best point).
  std::vector<double> final_params;
  /// trace[k] = min(f(theta_k + c_k D), f(theta_k - c_k D)) for each
  /// iteration; the last entry is f(final_params).
  std::vector<double> trace;
  std::size_t iterations = 0;
  /// Objective calls made by the update loop: 2 * iterations + 1.
  std::size_t evaluations = 0;
  std::size_t calibration_evaluations = 0;
  /// Step numerator actually used (after calibration).
  double a_used = 0.0;
  bool capped = false;
};

/// Minimises `objective` from `initial`; best-seen parameters are returned.
/// Throws numeric_error if the objective yields a non-finite value.
OptimizerResult spsa_minimize(const objective_fn &objective,
                              std::span<const double> initial,
                              const SpsaConfig &config);

/// One simultaneous-perturbation gradient estimate at `theta` with
/// perturbation size `ck`, drawing Rademacher directions from `rng`.
std::vector<double> spsa_gradient(const objective_fn &objective,
                                  std::span<const double> theta, double ck,
                                  rng_engine &rng);

/// Brute-force scan of the diagonal: the exact ground energy and every
/// bitstring attaining it.
struct ExactSolution {
  double ground_energy = 0.0;
  std::vector<basis_index> ground_states;
  double max_cut = 0.0;
};

ExactSolution exact_solve(const IsingDiagonal &ising,
                          std::size_t qubit_cap = default_qubit_cap);

enum class ansatz_kind { qaoa, ws_qaoa, vqe };

std::string to_string(ansatz_kind kind);

/// Circuit shape bound into an objective.
struct AnsatzContext {
  /// QAOA depth (qaoa / ws_qaoa).
  std::size_t p = 1;
  /// Required for ws_qaoa.
  std::optional<WarmStart> warm_start;
  /// VQE repetitions.
  std::size_t vqe_reps = default_vqe_reps;
};

/// Exact expectation, or the sample-mean energy over `shots` draws. Each
/// shot-mode call uses seed mix_seed(seed, call index), so a sequence of
/// calls is reproducible.
struct ObjectiveMode {
  bool sampled = false;
  std::size_t shots = 4096;
  std::uint64_t seed = 0;

  static ObjectiveMode exact() { return {}; }
  static ObjectiveMode shot_estimate(std::size_t shots, std::uint64_t seed) {
    return {true, shots, seed};
  }
};

/// Number of free parameters for `kind` on n qubits.
std::size_t parameter_count(ansatz_kind kind, std::size_t n,
                            const AnsatzContext &context);

/// Builds the state for flat parameter vector `params`.
Statevector build_ansatz_state(ansatz_kind kind, const IsingDiagonal &ising,
                               const AnsatzContext &context,
                               std::span<const double> params);

/// Objective params -> energy. The returned callable owns copies of its
/// inputs.
objective_fn make_objective(ansatz_kind kind, const IsingDiagonal &ising,
                            const AnsatzContext &context, ObjectiveMode mode);

} // namespace qcluster
