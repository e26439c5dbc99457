/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/optimizer.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace qcluster {

namespace {

double checked(const objective_fn &f, std::span<const double> params) {
  const double v = f(params);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "objective returned " << v << " at params [";
    for (std::size_t i = 0; i < params.size(); ++i)
      os << (i ? ", " : "") << params[i];
    os << "]";
    throw numeric_error(os.str());
  }
  return v;
}

} // namespace

void SpsaConfig::validate() const {
  if (!(a > 0.0) || !(c > 0.0))
    throw input_error("spsa gains a and c must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw input_error("spsa alpha must lie in (0, 1]");
  if (!(gamma_exp > 0.0 && gamma_exp <= 1.0))
    throw input_error("spsa gamma_exp must lie in (0, 1]");
  if (stability() < 0.0)
    throw input_error("spsa stability offset must be >= 0");
  if (calibrate && (!(target_step > 0.0) || calibration_samples == 0))
    throw input_error("spsa calibration needs target_step > 0 and samples");
}

std::vector<double> spsa_gradient(const objective_fn &objective,
                                  std::span<const double> theta, double ck,
                                  rng_engine &rng) {
  const std::size_t d = theta.size();
  std::vector<double> delta(d), plus(d), minus(d);
  for (std::size_t i = 0; i < d; ++i) {
    delta[i] = rademacher(rng);
    plus[i] = theta[i] + ck * delta[i];
    minus[i] = theta[i] - ck * delta[i];
  }
  const double diff = checked(objective, plus) - checked(objective, minus);
  std::vector<double> g(d);
  for (std::size_t i = 0; i < d; ++i)
    g[i] = diff / (2.0 * ck * delta[i]);
  return g;
}

OptimizerResult spsa_minimize(const objective_fn &objective,
                              std::span<const double> initial,
                              const SpsaConfig &config) {
  config.validate();
  for (double v : initial)
    if (!std::isfinite(v))
      throw input_error("spsa initial point must be finite");

  const std::size_t d = initial.size();
  const double A = config.stability();
  rng_engine rng(config.seed);

  OptimizerResult result;
  result.a_used = config.a;

  if (config.calibrate) {
    // Mean |f(+) - f(-)| / (2c) at the start point sets the first step size.
    double mean_mag = 0.0;
    for (std::size_t s = 0; s < config.calibration_samples; ++s) {
      const auto g = spsa_gradient(objective, initial, config.c, rng);
      mean_mag += d ? std::abs(g[0]) : 0.0;
    }
    mean_mag /= static_cast<double>(config.calibration_samples);
    result.calibration_evaluations = 2 * config.calibration_samples;
    if (mean_mag > 0.0)
      result.a_used =
          config.target_step * std::pow(A + 1.0, config.alpha) / mean_mag;
  }

  std::vector<double> theta(initial.begin(), initial.end());
  std::vector<double> delta(d), plus(d), minus(d);
  result.best_params = theta;
  bool have_best = false;
  result.capped = true;

  auto consider = [&](const std::vector<double> &point, double value) {
    if (!have_best || value < result.best_value) {
      result.best_value = value;
      result.best_params = point;
      have_best = true;
    }
  };

  for (std::size_t k = 0; k < config.max_iters; ++k) {
    const double kk = static_cast<double>(k);
    const double ak = result.a_used / std::pow(A + kk + 1.0, config.alpha);
    const double ck = config.c / std::pow(kk + 1.0, config.gamma_exp);

    for (std::size_t i = 0; i < d; ++i) {
      delta[i] = rademacher(rng);
      plus[i] = theta[i] + ck * delta[i];
      minus[i] = theta[i] - ck * delta[i];
    }
    const double f_plus = checked(objective, plus);
    const double f_minus = checked(objective, minus);
    result.evaluations += 2;

    if (f_plus <= f_minus) {
      consider(plus, f_plus);
      result.trace.push_back(f_plus);
    } else {
      consider(minus, f_minus);
      result.trace.push_back(f_minus);
    }

    const double scale = (f_plus - f_minus) / (2.0 * ck);
    double moved = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double step = ak * scale / delta[i];
      theta[i] -= step;
      moved += step * step;
    }
    ++result.iterations;
    if (config.param_tol > 0.0 && std::sqrt(moved) < config.param_tol) {
      result.capped = false;
      break;
    }
  }

  const double f_final = checked(objective, theta);
  ++result.evaluations;
  result.trace.push_back(f_final);
  consider(theta, f_final);
  result.final_params = std::move(theta);
  return result;
}

ExactSolution exact_solve(const IsingDiagonal &ising, std::size_t qubit_cap) {
  if (ising.n > qubit_cap)
    throw resource_error("exact solve on " + std::to_string(ising.n) +
                         " qubits exceeds cap " + std::to_string(qubit_cap));
  if (ising.dimension() != (std::size_t{1} << ising.n))
    throw input_error("ising diagonal length does not match 2^n");
  ExactSolution sol;
  sol.ground_energy = ising.min_energy();
  for (basis_index x = 0; x < ising.dimension(); ++x)
    if (ising.energies[x] == sol.ground_energy)
      sol.ground_states.push_back(x);
  sol.max_cut = -sol.ground_energy;
  return sol;
}

std::string to_string(ansatz_kind kind) {
  switch (kind) {
  case ansatz_kind::qaoa:
    return "qaoa";
  case ansatz_kind::ws_qaoa:
    return "ws-qaoa";
  case ansatz_kind::vqe:
    return "vqe";
  }
  return "unknown";
}

std::size_t parameter_count(ansatz_kind kind, std::size_t n,
                            const AnsatzContext &context) {
  if (kind == ansatz_kind::vqe)
    return vqe_param_count(n, context.vqe_reps);
  return 2 * context.p;
}

Statevector build_ansatz_state(ansatz_kind kind, const IsingDiagonal &ising,
                               const AnsatzContext &context,
                               std::span<const double> params) {
  const std::size_t expected = parameter_count(kind, ising.n, context);
  if (params.size() != expected)
    throw input_error(to_string(kind) + " objective expects " +
                      std::to_string(expected) + " parameters, got " +
                      std::to_string(params.size()));
  switch (kind) {
  case ansatz_kind::qaoa:
    return build_qaoa_state(ising, QaoaParams::unflatten(params));
  case ansatz_kind::ws_qaoa:
    return build_ws_qaoa_state(ising, *context.warm_start,
                               QaoaParams::unflatten(params));
  case ansatz_kind::vqe:
    return build_vqe_state(
        ising.n, VqeParams{{params.begin(), params.end()}, context.vqe_reps},
        std::max(ising.n, default_qubit_cap));
  }
  throw input_error("unknown ansatz kind");
}

objective_fn make_objective(ansatz_kind kind, const IsingDiagonal &ising,
                            const AnsatzContext &context, ObjectiveMode mode) {
  if (kind == ansatz_kind::ws_qaoa) {
    if (!context.warm_start)
      throw input_error("ws-qaoa objective requires a warm start");
    if (context.warm_start->size() != ising.n)
      throw input_error("warm start size does not match ising qubit count");
  }
  if (kind != ansatz_kind::vqe && context.p == 0)
    throw input_error("qaoa depth p must be >= 1");
  if (mode.sampled && mode.shots == 0)
    throw input_error("shots must be >= 1");

  if (!mode.sampled)
    return [kind, ising, context](std::span<const double> params) {
      return expectation_diagonal(
          build_ansatz_state(kind, ising, context, params), ising);
    };

  auto calls = std::make_shared<std::uint64_t>(0);
  return [kind, ising, context, mode, calls](std::span<const double> params) {
    const Statevector state = build_ansatz_state(kind, ising, context, params);
    const auto counts =
        sample_counts(state, mode.shots, mix_seed(mode.seed, (*calls)++));
    double total = 0.0;
    for (const auto &[x, count] : counts)
      total += static_cast<double>(count) * ising.energies[x];
    return total / static_cast<double>(mode.shots);
  };
}

} // namespace qcluster
