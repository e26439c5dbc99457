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
#include <span>
#include <vector>

namespace qcluster {

/// Multi-start projected gradient ascent settings for the box relaxation.
struct RelaxConfig {
  std::size_t restarts = 32;
  std::size_t max_iters = 2000;
  /// Initial trial step of the backtracking line search.
  double step = 1.0;
  /// Stationarity threshold on the projected-gradient norm.
  double tol = 1e-8;
  /// Clip margin applied when building a warm start.
  double epsilon = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct RelaxResult {
  std::vector<double> c_star;
  double objective = 0.0;
  /// True when the best restart stopped on the iteration cap rather than on
  /// stationarity.
  bool capped = false;
  std::size_t iterations = 0;
};

/// Maximises the QUBO objective over [0,1]^n. Each restart begins at a
/// uniformly random interior point (seeded by mix_seed(seed, restart)) and
/// iterates x <- clamp(x + t grad f) with Armijo backtracking on t. The best
/// restart wins; ties keep the lowest restart index.
RelaxResult relax_qubo(const QuboProblem &qubo, const RelaxConfig &config);

/// min(max(c, eps), 1 - eps) entrywise.
std::vector<double> clip_cstar(std::span<const double> c_star, double epsilon);

/// theta_i = 2 asin(sqrt(c_i)). Throws input_error outside [0, 1].
std::vector<double> thetas_from_cstar(std::span<const double> c_star);

/// Clip then convert: the warm start consumed by build_ws_qaoa_state.
WarmStart make_warm_start(std::span<const double> c_star, double epsilon);

} // namespace qcluster
