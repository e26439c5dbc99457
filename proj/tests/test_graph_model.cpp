/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "oracles.hpp"
#include "qcluster/graph_model.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace qcluster;

namespace {

WeightedGraph single_edge(double w) { return WeightedGraph(2, {0, w, w, 0}); }

WeightedGraph triangle() {
  return WeightedGraph(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
}

WeightedGraph random_graph(std::size_t n, std::mt19937_64 &rng) {
  return WeightedGraph(n, oracle::random_weights(n, 10.0, rng));
}

} // namespace

TEST_CASE("euclidean weights") {
  SUBCASE("identical points have zero distance") {
    Dataset ds{{{1.0, 2.0}, {1.0, 2.0}}};
    CHECK(euclidean_weights(ds).weight(0, 1) == 0.0);
  }
  SUBCASE("3-4-5 triangle") {
    Dataset ds{{{0.0, 0.0}, {3.0, 4.0}}};
    CHECK(euclidean_weights(ds).weight(0, 1) == 5.0);
  }
  SUBCASE("d-dimensional rows give a symmetric zero-diagonal matrix") {
    Dataset ds{{{0, 1, 2}, {3, -1, 0.5}, {7, 7, 7}, {-2, 0, 1}}};
    const auto g = euclidean_weights(ds);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(g.weight(i, i) == 0.0);
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(g.weight(i, j) == g.weight(j, i));
    }
    CHECK(g.weight(0, 2) == doctest::Approx(std::sqrt(49.0 + 36.0 + 25.0)));
  }
  SUBCASE("non-finite feature names the row") {
    Dataset ds{{{0.0}, {std::numeric_limits<double>::quiet_NaN()}},
               {"x"},
               {"alpha", "beta"}};
    CHECK_THROWS_WITH_AS(euclidean_weights(ds),
                         doctest::Contains("row 1 (beta)"), input_error);
  }
  SUBCASE("fewer than two rows is rejected") {
    Dataset ds{{{1.0}}};
    CHECK_THROWS_AS(euclidean_weights(ds), input_error);
  }
  SUBCASE("ragged rows are rejected") {
    Dataset ds{{{1.0, 2.0}, {1.0}}};
    CHECK_THROWS_AS(euclidean_weights(ds), input_error);
  }
}

TEST_CASE("weighted graph invariants are enforced") {
  CHECK_THROWS_AS(WeightedGraph(2, {0, 1, 2, 0}), input_error);
  CHECK_THROWS_AS(WeightedGraph(2, {1, 1, 1, 0}), input_error);
  CHECK_THROWS_AS(WeightedGraph(2, {0, -1, -1, 0}), input_error);
  CHECK_THROWS_AS(WeightedGraph(2, {0, 1, 1}), input_error);
}

TEST_CASE("ising diagonal") {
  SUBCASE("single edge") {
    const auto h = ising_from_graph(single_edge(1.0));
    CHECK(h.energies == std::vector<double>{0, -1, -1, 0});
  }
  SUBCASE("all-zero weights") {
    const auto h = ising_from_graph(WeightedGraph(3, std::vector<double>(9, 0.0)));
    for (double e : h.energies)
      CHECK(e == 0.0);
  }
  SUBCASE("triangle: minimum -2 on exactly six bitstrings") {
    const auto h = ising_from_graph(triangle());
    // Hand enumeration: only 000 and 111 leave all three edges uncut.
    int at_min = 0;
    for (basis_index x = 0; x < 8; ++x)
      at_min += h.energies[x] == -2.0;
    CHECK(h.min_energy() == -2.0);
    CHECK(at_min == 6);
  }
  SUBCASE("qubit cap") {
    CHECK_THROWS_AS(ising_from_graph(WeightedGraph(4, std::vector<double>(16)), 3),
                    resource_error);
  }
}

TEST_CASE("qubo objective") {
  SUBCASE("single edge") {
    const auto q = qubo_from_graph(single_edge(1.0));
    CHECK(q.objective(std::vector<double>{0, 1}) == 1.0);
    CHECK(q.objective(std::vector<double>{1, 1}) == 0.0);
  }
  SUBCASE("triangle at (1,1,0)") {
    const auto g = triangle();
    const auto q = qubo_from_graph(g);
    CHECK(q.objective(std::vector<double>{1, 1, 0}) == 2.0);
    CHECK(cut_value(g, std::vector<std::uint8_t>{1, 1, 0}) == 2.0);
  }
  SUBCASE("gradient matches central differences") {
    std::mt19937_64 rng(3);
    const auto q = qubo_from_graph(random_graph(5, rng));
    std::vector<double> x{0.2, 0.7, 0.1, 0.9, 0.5}, g(5);
    q.gradient(x, g);
    for (std::size_t i = 0; i < 5; ++i) {
      auto xp = x, xm = x;
      xp[i] += 1e-5;
      xm[i] -= 1e-5;
      CHECK(g[i] == doctest::Approx((q.objective(xp) - q.objective(xm)) / 2e-5)
                        .epsilon(1e-7));
    }
  }
}

TEST_CASE("cut value") {
  const WeightedGraph path(3, {0, 1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(cut_value(path, std::vector<std::uint8_t>{0, 0, 0}) == 0.0);
  CHECK(cut_value(path, std::vector<std::uint8_t>{0, 1, 0}) == 2.0);
  CHECK(cut_value(path, std::vector<std::uint8_t>{1, 0, 1}) == 2.0);
  CHECK_THROWS_AS(cut_value(path, std::vector<std::uint8_t>{0, 1}), input_error);
}

TEST_CASE("properties over random graphs") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const auto g = random_graph(n, rng);
    const auto h = ising_from_graph(g);
    const auto q = qubo_from_graph(g);
    const double lambda = 0.5 + 3.0 * (trial % 7) / 7.0;
    const auto hs = ising_from_graph(g.scaled(lambda));
    const double tol = 1e-12 * (1.0 + std::abs(h.min_energy()));

    REQUIRE(h.energies[0] == 0.0);
    for (basis_index x = 0; x < h.dimension(); ++x) {
      CHECK(h.energies[x] + cut_value(g, x) == 0.0);
      CHECK(h.energies[x] == h.energies[complement(x, n)]);
      CHECK(std::abs(hs.energies[x] - lambda * h.energies[x]) <= lambda * tol * 4);
      if (n <= 8) {
        std::vector<double> bits(n);
        for (std::size_t i = 0; i < n; ++i)
          bits[i] = static_cast<double>((x >> i) & 1u);
        CHECK(std::abs(q.objective(bits) + h.energies[x]) <= tol * 4);
      }
    }
    // Argmin set is unchanged by scaling.
    const double m = h.min_energy(), ms = hs.min_energy();
    for (basis_index x = 0; x < h.dimension(); ++x)
      CHECK((std::abs(h.energies[x] - m) <= tol) ==
            (std::abs(hs.energies[x] - ms) <= lambda * tol));
  }
}

TEST_CASE("standardize") {
  Dataset ds{{{1.0, 5.0}, {3.0, 5.0}, {5.0, 5.0}}, {"a", "b"}};
  const auto z = standardize(ds);
  const double sd = std::sqrt(8.0 / 3.0);
  CHECK(z.points[0][0] == doctest::Approx(-2.0 / sd));
  CHECK(z.points[2][0] == doctest::Approx(2.0 / sd));
  // Constant column is centred only.
  CHECK(z.points[1][1] == 0.0);
}

TEST_CASE("bitstring helpers") {
  CHECK(bitstring_text(0b011, 5) == "00011");
  CHECK(index_from_bits(std::vector<std::uint8_t>{1, 1, 0, 0, 0}) == 3);
  CHECK(complement(3, 5) == 28);
  CHECK(bits_from_index(6, 3) == std::vector<std::uint8_t>{0, 1, 1});
}
