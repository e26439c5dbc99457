/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcluster/graph_model.hpp"

#include <algorithm>
#include <cmath>

namespace qcluster {

std::string bitstring_text(basis_index index, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t q = 0; q < n; ++q)
    if ((index >> q) & 1u)
      out[n - 1 - q] = '1';
  return out;
}

void Dataset::validate() const {
  if (points.size() < 2)
    throw input_error("dataset needs at least 2 rows, got " +
                      std::to_string(points.size()));
  const std::size_t d = points.front().size();
  if (d == 0)
    throw input_error("dataset rows have no features");
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].size() != d)
      throw input_error("row " + std::to_string(r) + " has " +
                        std::to_string(points[r].size()) +
                        " features, expected " + std::to_string(d));
    for (std::size_t k = 0; k < d; ++k)
      if (!std::isfinite(points[r][k]))
        throw input_error("non-finite feature in row " + std::to_string(r) +
                          ", column " + std::to_string(k));
  }
  if (!names.empty() && names.size() != points.size())
    throw input_error("names length does not match row count");
  if (!labels.empty() && labels.size() != points.size())
    throw input_error("labels length does not match row count");
}

Dataset standardize(const Dataset &dataset) {
  dataset.validate();
  Dataset out = dataset;
  const std::size_t rows = dataset.size();
  for (std::size_t k = 0; k < dataset.dim(); ++k) {
    double mean = 0.0;
    for (const auto &row : dataset.points)
      mean += row[k];
    mean /= static_cast<double>(rows);
    double var = 0.0;
    for (const auto &row : dataset.points)
      var += (row[k] - mean) * (row[k] - mean);
    var /= static_cast<double>(rows);
    const double sd = std::sqrt(var);
    for (std::size_t r = 0; r < rows; ++r)
      out.points[r][k] = sd > 0.0 ? (dataset.points[r][k] - mean) / sd
                                  : dataset.points[r][k] - mean;
  }
  return out;
}

WeightedGraph::WeightedGraph(std::size_t n, std::vector<double> weights)
    : n_(n), w_(std::move(weights)) {
  if (w_.size() != n_ * n_)
    throw input_error("weight matrix has " + std::to_string(w_.size()) +
                      " entries, expected " + std::to_string(n_ * n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (weight(i, i) != 0.0)
      throw input_error("nonzero diagonal weight at node " + std::to_string(i));
    for (std::size_t j = 0; j < n_; ++j) {
      const double w = weight(i, j);
      if (!std::isfinite(w) || w < 0.0)
        throw input_error("weight (" + std::to_string(i) + "," +
                          std::to_string(j) + ") must be finite and >= 0");
      if (w != weight(j, i))
        throw input_error("weight matrix is not symmetric at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

WeightedGraph WeightedGraph::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw input_error("scale factor must be finite and > 0");
  std::vector<double> w = w_;
  for (auto &v : w)
    v *= factor;
  return WeightedGraph(n_, std::move(w));
}

double IsingDiagonal::min_energy() const {
  return *std::min_element(energies.begin(), energies.end());
}

double IsingDiagonal::max_energy() const {
  return *std::max_element(energies.begin(), energies.end());
}

double QuboProblem::objective(std::span<const double> x) const {
  if (x.size() != n)
    throw input_error("qubo point has " + std::to_string(x.size()) +
                      " entries, expected " + std::to_string(n));
  double f = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      row += q(i, j) * x[j];
    f += x[i] * (linear[i] + row);
  }
  return f;
}

void QuboProblem::gradient(std::span<const double> x,
                           std::span<double> out) const {
  if (x.size() != n || out.size() != n)
    throw input_error("qubo gradient size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      row += q(i, j) * x[j];
    out[i] = linear[i] + 2.0 * row;
  }
}

void QuboProblem::validate() const {
  if (linear.size() != n || quadratic.size() != n * n)
    throw input_error("qubo coefficient sizes do not match n = " +
                      std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(linear[i]))
      throw input_error("non-finite linear coefficient " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(q(i, j)))
        throw input_error("non-finite quadratic coefficient");
      if (q(i, j) != q(j, i))
        throw input_error("quadratic matrix is not symmetric");
    }
  }
}

WeightedGraph euclidean_weights(const Dataset &dataset) {
  for (std::size_t r = 0; r < dataset.points.size(); ++r)
    for (double v : dataset.points[r])
      if (!std::isfinite(v))
        throw input_error("non-finite feature in row " + std::to_string(r) +
                          (r < dataset.names.size()
                               ? " (" + dataset.names[r] + ")"
                               : std::string{}));
  dataset.validate();

  const std::size_t n = dataset.size();
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < dataset.dim(); ++k) {
        const double diff = dataset.points[i][k] - dataset.points[j][k];
        sq += diff * diff;
      }
      w[i * n + j] = w[j * n + i] = std::sqrt(sq);
    }
  return WeightedGraph(n, std::move(w));
}

IsingDiagonal ising_from_graph(const WeightedGraph &graph,
                               std::size_t qubit_cap) {
  const std::size_t n = graph.size();
  if (n > qubit_cap)
    throw resource_error("graph has " + std::to_string(n) +
                         " nodes, qubit cap is " + std::to_string(qubit_cap));
  IsingDiagonal out;
  out.n = n;
  out.energies.resize(std::size_t{1} << n);
  for (basis_index x = 0; x < out.energies.size(); ++x)
    out.energies[x] = -cut_value(graph, x);
  return out;
}

QuboProblem qubo_from_graph(const WeightedGraph &graph) {
  const std::size_t n = graph.size();
  QuboProblem qubo;
  qubo.n = n;
  qubo.linear.assign(n, 0.0);
  qubo.quadratic.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      qubo.linear[i] += graph.weight(i, j);
      // Symmetric split of -2 w_ij x_i x_j over the (i,j) and (j,i) slots.
      qubo.quadratic[i * n + j] = -graph.weight(i, j);
    }
  return qubo;
}

double cut_value(const WeightedGraph &graph,
                 std::span<const std::uint8_t> assignment) {
  if (assignment.size() != graph.size())
    throw input_error("assignment has " + std::to_string(assignment.size()) +
                      " bits, graph has " + std::to_string(graph.size()) +
                      " nodes");
  return cut_value(graph, index_from_bits(assignment));
}

double cut_value(const WeightedGraph &graph, basis_index assignment) {
  const std::size_t n = graph.size();
  double cut = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (((assignment >> i) ^ (assignment >> j)) & 1u)
        cut += graph.weight(i, j);
  return cut;
}

std::vector<std::uint8_t> bits_from_index(basis_index index, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i)
    bits[i] = static_cast<std::uint8_t>((index >> i) & 1u);
  return bits;
}

basis_index index_from_bits(std::span<const std::uint8_t> bits) {
  if (bits.size() > 63)
    throw input_error("bitstring too long");
  basis_index index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1)
      throw input_error("bit values must be 0 or 1");
    index |= basis_index{bits[i]} << i;
  }
  return index;
}

} // namespace qcluster
