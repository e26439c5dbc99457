/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace qcluster {

Unitary2 Unitary2::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

double Unitary2::unitarity_error() const {
  const Unitary2 p = adjoint() * *this;
  double err = 0.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      err = std::max(err, std::abs(p(r, c) - complex(r == c ? 1.0 : 0.0)));
  return err;
}

Unitary2 operator*(const Unitary2 &a, const Unitary2 &b) {
  Unitary2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      out.m[2 * r + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

Unitary2 identity2() { return {{1.0, 0.0, 0.0, 1.0}}; }

Unitary2 rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{c, complex(0, -s), complex(0, -s), c}};
}

Unitary2 ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{c, -s, s, c}};
}

Unitary2 rz(double theta) {
  const complex lo = std::polar(1.0, -theta / 2);
  return {{lo, 0.0, 0.0, std::conj(lo)}};
}

Statevector::Statevector(std::size_t n, initial_state init,
                         std::size_t qubit_cap)
    : n_(n) {
  if (n == 0)
    throw input_error("statevector needs at least one qubit");
  if (n > qubit_cap)
    throw resource_error("requested " + std::to_string(n) +
                         " qubits, cap is " + std::to_string(qubit_cap));
  const std::size_t dim = std::size_t{1} << n;
  if (init == initial_state::all_zeros) {
    amps_.assign(dim, 0.0);
    amps_[0] = 1.0;
  } else {
    amps_.assign(dim, std::pow(2.0, -0.5 * static_cast<double>(n)));
  }
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto &a : amps_)
    s += std::norm(a);
  return s;
}

Statevector &Statevector::apply_1q(std::size_t qubit, const Unitary2 &u) {
  if (qubit >= n_)
    throw input_error("qubit index " + std::to_string(qubit) +
                      " out of range for " + std::to_string(n_) + " qubits");
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride)
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off, i1 = i0 + stride;
      const complex a0 = amps_[i0], a1 = amps_[i1];
      amps_[i0] = u.m[0] * a0 + u.m[1] * a1;
      amps_[i1] = u.m[2] * a0 + u.m[3] * a1;
    }
  return *this;
}

Statevector &Statevector::apply_cnot(std::size_t control, std::size_t target) {
  if (control >= n_ || target >= n_)
    throw input_error("cnot qubit index out of range");
  if (control == target)
    throw input_error("cnot control and target must differ");
  const basis_index cmask = basis_index{1} << control;
  const basis_index tmask = basis_index{1} << target;
  for (basis_index x = 0; x < amps_.size(); ++x)
    if ((x & cmask) && !(x & tmask))
      std::swap(amps_[x], amps_[x | tmask]);
  return *this;
}

Statevector &Statevector::apply_diagonal_phase(double gamma,
                                               const IsingDiagonal &ising) {
  if (ising.n != n_ || ising.dimension() != amps_.size())
    throw input_error("ising diagonal has " + std::to_string(ising.n) +
                      " qubits, state has " + std::to_string(n_));
  if (gamma == 0.0)
    return *this;
  for (std::size_t x = 0; x < amps_.size(); ++x)
    amps_[x] *= std::polar(1.0, -gamma * ising.energies[x]);
  return *this;
}

Statevector new_state(std::size_t n, initial_state init, std::size_t qubit_cap) {
  return Statevector(n, init, qubit_cap);
}

Statevector apply_1q(Statevector state, std::size_t qubit, const Unitary2 &u) {
  state.apply_1q(qubit, u);
  return state;
}

Statevector apply_cnot(Statevector state, std::size_t control,
                       std::size_t target) {
  state.apply_cnot(control, target);
  return state;
}

Statevector apply_diagonal_phase(Statevector state, double gamma,
                                 const IsingDiagonal &ising) {
  state.apply_diagonal_phase(gamma, ising);
  return state;
}

double expectation_diagonal(const Statevector &state,
                            const IsingDiagonal &ising) {
  if (ising.n != state.qubits() || ising.dimension() != state.dimension())
    throw input_error("ising diagonal and state dimensions differ");
  const auto amps = state.amplitudes();
  double e = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x)
    e += std::norm(amps[x]) * ising.energies[x];
  return e;
}

std::vector<double> probabilities(const Statevector &state) {
  const auto amps = state.amplitudes();
  std::vector<double> p(amps.size());
  for (std::size_t x = 0; x < amps.size(); ++x)
    p[x] = std::norm(amps[x]);
  return p;
}

std::map<basis_index, std::size_t> sample_counts(const Statevector &state,
                                                 std::size_t shots,
                                                 std::uint64_t seed) {
  if (shots == 0)
    throw input_error("shots must be >= 1");
  const std::vector<double> p = probabilities(state);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x)
    cdf[x] = (acc += p[x]);

  rng_engine rng(seed);
  std::map<basis_index, std::size_t> counts;
  for (std::size_t s = 0; s < shots; ++s) {
    // Scale by the accumulated total so rounding in the norm cannot push a
    // draw past the end of the table.
    const double u = uniform01(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t x = static_cast<std::size_t>(it - cdf.begin());
    if (x >= p.size()) {
      x = p.size() - 1;
      while (p[x] == 0.0 && x > 0)
        --x;
    }
    ++counts[x];
  }
  return counts;
}

} // namespace qcluster
