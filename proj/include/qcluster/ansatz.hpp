/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcluster/graph_model.hpp"
#include "qcluster/simulator.hpp"

#include <span>
#include <vector>

namespace qcluster {

/// Angles for a depth-p QAOA circuit.
struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  std::size_t depth() const { return betas.size(); }
  void validate() const;

  /// Flat layout used by the optimizer: betas followed by gammas.
  std::vector<double> flatten() const;
  static QaoaParams unflatten(std::span<const double> flat);
};

/// Relaxed solution c* (already clipped) and the matching initial-state
/// angles theta_i = 2 asin(sqrt(c*_i)).
struct WarmStart {
  std::vector<double> c_star;
  std::vector<double> thetas;

  std::size_t size() const { return c_star.size(); }
};

/// Hardware-efficient R_y / linear-CNOT circuit angles: one R_y layer
/// followed by `reps` x (CNOT chain, R_y layer). Rotation angles are stored
/// layer-major, qubit-minor.
struct VqeParams {
  std::vector<double> angles;
  std::size_t reps = 5;
};

inline constexpr std::size_t default_vqe_reps = 5;

/// Number of R_y angles in the VQE circuit on n qubits with `reps` layers.
constexpr std::size_t vqe_param_count(std::size_t n, std::size_t reps) {
  return n * (reps + 1);
}

/// |psi> = prod_a exp(-i beta_a sum X) exp(-i gamma_a H_C) |+>^n, with the
/// mixer realised as R_x(2 beta) on each qubit.
Statevector build_qaoa_state(const IsingDiagonal &ising,
                             const QaoaParams &params);

/// exp(-i beta H) for the warm-start mixer
///   H = [[2c-1, -2 sqrt(c(1-c))], [-2 sqrt(c(1-c)), 1-2c]].
/// H^2 = I, so the exponential is cos(beta) I - i sin(beta) H.
/// Requires 0 < c < 1.
Unitary2 ws_mixer_unitary(double c, double beta);

/// The warm-start mixer Hamiltonian matrix itself (real symmetric).
Unitary2 ws_mixer_hamiltonian(double c);

/// Starts from prod_i R_y(theta_i)|0>, then per layer applies the cost phase
/// and the per-qubit warm-start mixer built from c*_i.
Statevector build_ws_qaoa_state(const IsingDiagonal &ising, const WarmStart &ws,
                                const QaoaParams &params);

Statevector build_vqe_state(std::size_t n, const VqeParams &params,
                            std::size_t qubit_cap = default_qubit_cap);

} // namespace qcluster
