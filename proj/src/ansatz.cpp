/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/ansatz.hpp"

#include <cmath>
#include <string>

namespace qcluster {

void QaoaParams::validate() const {
  if (betas.empty())
    throw input_error("qaoa depth p must be >= 1");
  if (betas.size() != gammas.size())
    throw input_error("qaoa betas and gammas differ in length");
}

std::vector<double> QaoaParams::flatten() const {
  std::vector<double> flat(betas);
  flat.insert(flat.end(), gammas.begin(), gammas.end());
  return flat;
}

QaoaParams QaoaParams::unflatten(std::span<const double> flat) {
  if (flat.empty() || flat.size() % 2 != 0)
    throw input_error("flat qaoa parameter vector must have even length >= 2");
  const std::size_t p = flat.size() / 2;
  return {{flat.begin(), flat.begin() + p}, {flat.begin() + p, flat.end()}};
}

Statevector build_qaoa_state(const IsingDiagonal &ising,
                             const QaoaParams &params) {
  params.validate();
  Statevector state(ising.n, initial_state::uniform_plus,
                    std::max(ising.n, default_qubit_cap));
  for (std::size_t layer = 0; layer < params.depth(); ++layer) {
    state.apply_diagonal_phase(params.gammas[layer], ising);
    const Unitary2 mixer = rx(2.0 * params.betas[layer]);
    for (std::size_t q = 0; q < ising.n; ++q)
      state.apply_1q(q, mixer);
  }
  return state;
}

Unitary2 ws_mixer_hamiltonian(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw input_error("warm-start value must lie in (0, 1), got " +
                      std::to_string(c));
  const double off = -2.0 * std::sqrt(c * (1.0 - c));
  return {{2.0 * c - 1.0, off, off, 1.0 - 2.0 * c}};
}

Unitary2 ws_mixer_unitary(double c, double beta) {
  const Unitary2 h = ws_mixer_hamiltonian(c);
  const double cb = std::cos(beta), sb = std::sin(beta);
  Unitary2 u;
  for (std::size_t k = 0; k < 4; ++k)
    u.m[k] = complex(k == 0 || k == 3 ? cb : 0.0, 0.0) -
             complex(0.0, sb) * h.m[k];
  return u;
}

Statevector build_ws_qaoa_state(const IsingDiagonal &ising, const WarmStart &ws,
                                const QaoaParams &params) {
  params.validate();
  if (ws.size() != ising.n || ws.thetas.size() != ising.n)
    throw input_error("warm start has " + std::to_string(ws.size()) +
                      " entries, ising has " + std::to_string(ising.n) +
                      " qubits");
  Statevector state(ising.n, initial_state::all_zeros,
                    std::max(ising.n, default_qubit_cap));
  for (std::size_t q = 0; q < ising.n; ++q)
    state.apply_1q(q, ry(ws.thetas[q]));

  const std::vector<double> &c = ws.c_star;
  for (std::size_t layer = 0; layer < params.depth(); ++layer) {
    state.apply_diagonal_phase(params.gammas[layer], ising);
    for (std::size_t q = 0; q < ising.n; ++q)
      state.apply_1q(q, ws_mixer_unitary(c[q], params.betas[layer]));
  }
  return state;
}

Statevector build_vqe_state(std::size_t n, const VqeParams &params,
                            std::size_t qubit_cap) {
  const std::size_t expected = vqe_param_count(n, params.reps);
  if (params.angles.size() != expected)
    throw input_error("vqe circuit on " + std::to_string(n) + " qubits with " +
                      std::to_string(params.reps) + " reps expects " +
                      std::to_string(expected) + " angles, got " +
                      std::to_string(params.angles.size()));
  Statevector state(n, initial_state::all_zeros, qubit_cap);
  std::size_t k = 0;
  for (std::size_t q = 0; q < n; ++q)
    state.apply_1q(q, ry(params.angles[k++]));
  for (std::size_t rep = 0; rep < params.reps; ++rep) {
    for (std::size_t q = 0; q + 1 < n; ++q)
      state.apply_cnot(q, q + 1);
    for (std::size_t q = 0; q < n; ++q)
      state.apply_1q(q, ry(params.angles[k++]));
  }
  return state;
}

} // namespace qcluster
