/*******************************************************************************
 * Copyright (c) 2026 The qcluster Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qcluster {

/// Bad caller input: malformed data, mismatched sizes, out-of-range indices.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured resource bound (qubit cap).
class resource_error : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Filesystem read/write failure.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Non-finite objective values and other numerical breakdowns.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Default upper bound on qubits / graph nodes for dense representations.
inline constexpr std::size_t default_qubit_cap = 14;

/// Basis-state index. Bit i holds the value of qubit (node) i.
using basis_index = std::uint64_t;

/// Pseudo-random engine used everywhere. The algorithm is fixed by the
/// standard, so seeded streams are identical across platforms as long as
/// only the raw 64-bit outputs are consumed (no std:: distributions).
using rng_engine = std::mt19937_64;
inline constexpr const char *rng_id = "mt19937_64";

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(rng_engine &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(rng_engine &rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// +1 or -1 with equal probability.
inline double rademacher(rng_engine &rng) {
  return (rng() >> 63) != 0 ? 1.0 : -1.0;
}

/// SplitMix64 finalizer, used to derive independent per-purpose seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Text form of a basis index: qubit n-1 first, qubit 0 last, so the string
/// read as a binary numeral equals the index.
std::string bitstring_text(basis_index index, std::size_t n);

} // namespace qcluster
