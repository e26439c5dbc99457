/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcluster/common.hpp"
#include "qcluster/graph_model.hpp"

#include <array>
#include <complex>
#include <map>
#include <span>
#include <vector>

namespace qcluster {

using complex = std::complex<double>;

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
struct Unitary2 {
  std::array<complex, 4> m{};

  complex operator()(std::size_t r, std::size_t c) const { return m[2 * r + c]; }
  Unitary2 adjoint() const;
  /// max |(U^dagger U - I)_rc|
  double unitarity_error() const;
};

Unitary2 operator*(const Unitary2 &a, const Unitary2 &b);

Unitary2 identity2();
/// exp(-i theta X / 2)
Unitary2 rx(double theta);
/// exp(-i theta Y / 2) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
Unitary2 ry(double theta);
/// exp(-i theta Z / 2)
Unitary2 rz(double theta);

enum class initial_state { all_zeros, uniform_plus };

/// Dense n-qubit pure state. Amplitude index bit q is qubit q.
class Statevector {
public:
  Statevector(std::size_t n, initial_state init,
              std::size_t qubit_cap = default_qubit_cap);

  std::size_t qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const complex> amplitudes() const { return amps_; }
  complex operator[](basis_index x) const { return amps_[x]; }

  double norm_squared() const;

  Statevector &apply_1q(std::size_t qubit, const Unitary2 &u);
  Statevector &apply_cnot(std::size_t control, std::size_t target);
  /// amplitude[x] *= exp(-i gamma energies[x])
  Statevector &apply_diagonal_phase(double gamma, const IsingDiagonal &ising);

private:
  std::size_t n_;
  std::vector<complex> amps_;
};

Statevector new_state(std::size_t n, initial_state init,
                      std::size_t qubit_cap = default_qubit_cap);

/// Value-returning forms of the in-place gate methods.
Statevector apply_1q(Statevector state, std::size_t qubit, const Unitary2 &u);
Statevector apply_cnot(Statevector state, std::size_t control,
                       std::size_t target);
Statevector apply_diagonal_phase(Statevector state, double gamma,
                                 const IsingDiagonal &ising);

/// sum_x |amp[x]|^2 energies[x]
double expectation_diagonal(const Statevector &state,
                            const IsingDiagonal &ising);

std::vector<double> probabilities(const Statevector &state);

/// Draws `shots` i.i.d. basis indices from probabilities(state) by inverse
/// CDF on mt19937_64 outputs. Deterministic for a given seed.
std::map<basis_index, std::size_t> sample_counts(const Statevector &state,
                                                 std::size_t shots,
                                                 std::uint64_t seed);

} // namespace qcluster
