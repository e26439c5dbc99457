/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcluster {

namespace {

constexpr double armijo_fraction = 1e-4;
constexpr double min_step = 1e-14;

void project_step(std::span<const double> x, std::span<const double> grad,
                  double t, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = std::clamp(x[i] + t * grad[i], 0.0, 1.0);
}

double projected_gradient_norm(std::span<const double> x,
                               std::span<const double> grad) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = std::clamp(x[i] + grad[i], 0.0, 1.0) - x[i];
    s += d * d;
  }
  return std::sqrt(s);
}

struct AscentRun {
  std::vector<double> x;
  double value;
  std::size_t iterations;
  bool capped;
};

AscentRun ascend(const QuboProblem &qubo, std::vector<double> x,
                 const RelaxConfig &config) {
  const std::size_t n = qubo.n;
  std::vector<double> grad(n), trial(n);
  double value = qubo.objective(x);
  double t = config.step;

  for (std::size_t it = 0; it < config.max_iters; ++it) {
    qubo.gradient(x, grad);
    if (projected_gradient_norm(x, grad) < config.tol)
      return {std::move(x), value, it, false};

    bool accepted = false;
    while (t >= min_step) {
      project_step(x, grad, t, trial);
      double predicted = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        predicted += grad[i] * (trial[i] - x[i]);
      const double trial_value = qubo.objective(trial);
      if (trial_value >= value + armijo_fraction * predicted) {
        accepted = predicted > 0.0 || trial_value > value;
        x.swap(trial);
        value = trial_value;
        break;
      }
      t *= 0.5;
    }
    // No ascent direction survives the line search: numerically stationary.
    if (!accepted)
      return {std::move(x), value, it + 1, false};
    t = std::min(2.0 * t, config.step);
  }
  qubo.gradient(x, grad);
  const bool stationary = projected_gradient_norm(x, grad) < config.tol;
  return {std::move(x), value, config.max_iters, !stationary};
}

} // namespace

void RelaxConfig::validate() const {
  if (restarts == 0)
    throw input_error("relaxation restarts must be >= 1");
  if (!(epsilon >= 0.0 && epsilon < 0.5))
    throw input_error("clip epsilon must lie in [0, 0.5)");
  if (!(step > 0.0) || !(tol > 0.0))
    throw input_error("relaxation step and tol must be > 0");
}

RelaxResult relax_qubo(const QuboProblem &qubo, const RelaxConfig &config) {
  qubo.validate();
  config.validate();

  RelaxResult best;
  bool have_best = false;
  for (std::size_t r = 0; r < config.restarts; ++r) {
    rng_engine rng(mix_seed(config.seed, r));
    std::vector<double> start(qubo.n);
    for (auto &v : start)
      v = uniform01(rng);
    AscentRun run = ascend(qubo, std::move(start), config);
    if (!have_best || run.value > best.objective) {
      best.c_star = std::move(run.x);
      best.objective = run.value;
      best.capped = run.capped;
      best.iterations = run.iterations;
      have_best = true;
    }
  }
  return best;
}

std::vector<double> clip_cstar(std::span<const double> c_star, double epsilon) {
  std::vector<double> out(c_star.begin(), c_star.end());
  for (auto &c : out)
    c = std::min(std::max(c, epsilon), 1.0 - epsilon);
  return out;
}

std::vector<double> thetas_from_cstar(std::span<const double> c_star) {
  std::vector<double> thetas(c_star.size());
  for (std::size_t i = 0; i < c_star.size(); ++i) {
    const double c = c_star[i];
    if (!(c >= 0.0 && c <= 1.0))
      throw input_error("relaxed value " + std::to_string(i) + " = " +
                        std::to_string(c) + " outside [0, 1]");
    thetas[i] = 2.0 * std::asin(std::sqrt(c));
  }
  return thetas;
}

WarmStart make_warm_start(std::span<const double> c_star, double epsilon) {
  WarmStart ws;
  ws.c_star = clip_cstar(c_star, epsilon);
  ws.thetas = thetas_from_cstar(ws.c_star);
  return ws;
}

} // namespace qcluster
