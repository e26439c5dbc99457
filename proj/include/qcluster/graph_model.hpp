/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcluster/common.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcluster {

/// Tabular input: N rows of d real features, plus optional row names and
/// ground-truth labels (labels are used only for accuracy reporting).
struct Dataset {
  std::vector<std::vector<double>> points;
  std::vector<std::string> columns;
  std::vector<std::string> names;
  std::vector<std::string> labels;

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }

  /// Throws input_error unless N >= 2, every row has the same d >= 1 and all
  /// features are finite.
  void validate() const;
};

/// Z-score each feature column (population standard deviation). Columns with
/// zero spread are centred but not scaled.
Dataset standardize(const Dataset &dataset);

/// Symmetric, zero-diagonal, nonnegative edge weights over n nodes.
class WeightedGraph {
public:
  WeightedGraph() = default;
  /// `weights` is row-major n*n. Validates all invariants.
  WeightedGraph(std::size_t n, std::vector<double> weights);

  std::size_t size() const { return n_; }
  double weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  std::span<const double> weights() const { return w_; }

  /// Copy with every weight multiplied by `factor` (> 0).
  WeightedGraph scaled(double factor) const;

private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

/// Diagonal of the MAXCUT cost Hamiltonian: energies[x] = H_C(x) for every
/// basis index x (bit i = qubit i).
struct IsingDiagonal {
  std::size_t n = 0;
  std::vector<double> energies;

  std::size_t dimension() const { return energies.size(); }
  double min_energy() const;
  double max_energy() const;
};

/// Quadratic objective over x in {0,1}^n or [0,1]^n, maximised:
///   f(x) = sum_i linear[i] x_i + sum_i sum_j quadratic[i][j] x_i x_j
/// `quadratic` is symmetric, stored row-major.
struct QuboProblem {
  std::size_t n = 0;
  std::vector<double> linear;
  std::vector<double> quadratic;

  double q(std::size_t i, std::size_t j) const { return quadratic[i * n + j]; }
  double objective(std::span<const double> x) const;
  /// Gradient of `objective` at x, written into `out` (size n).
  void gradient(std::span<const double> x, std::span<double> out) const;
  /// Throws input_error on size mismatch, asymmetry or non-finite entries.
  void validate() const;
};

/// Pairwise Euclidean distances over all d features.
WeightedGraph euclidean_weights(const Dataset &dataset);

/// E(x) = -sum_{i<j} w_ij [x_i != x_j] for all 2^n bitstrings.
/// Throws resource_error when n exceeds `qubit_cap`.
IsingDiagonal ising_from_graph(const WeightedGraph &graph,
                               std::size_t qubit_cap = default_qubit_cap);

/// f(x) = sum_{i<j} w_ij (x_i + x_j - 2 x_i x_j), which equals cut(x) on
/// binary points.
QuboProblem qubo_from_graph(const WeightedGraph &graph);

/// Total weight of edges crossing the partition given by `assignment`.
double cut_value(const WeightedGraph &graph,
                 std::span<const std::uint8_t> assignment);
double cut_value(const WeightedGraph &graph, basis_index assignment);

std::vector<std::uint8_t> bits_from_index(basis_index index, std::size_t n);
basis_index index_from_bits(std::span<const std::uint8_t> bits);

/// Bitwise complement restricted to the low n bits.
inline basis_index complement(basis_index index, std::size_t n) {
  return ~index & ((basis_index{1} << n) - 1);
}

} // namespace qcluster
