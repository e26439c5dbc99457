// Test-only reference computations. Nothing here calls into the library's
// simulator or solver paths; they exist to check those paths independently.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cx = std::complex<double>;

/// Dense row-major square complex matrix.
struct Matrix {
  std::size_t dim = 0;
  std::vector<cx> a;

  explicit Matrix(std::size_t d = 0) : dim(d), a(d * d) {}
  cx &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  cx operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  static Matrix identity(std::size_t d) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i)
      m(i, i) = 1.0;
    return m;
  }
};

inline Matrix operator*(const Matrix &x, const Matrix &y) {
  Matrix out(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k) {
      const cx v = x(i, k);
      if (v == cx{})
        continue;
      for (std::size_t j = 0; j < x.dim; ++j)
        out(i, j) += v * y(k, j);
    }
  return out;
}

inline Matrix operator+(Matrix x, const Matrix &y) {
  for (std::size_t i = 0; i < x.a.size(); ++i)
    x.a[i] += y.a[i];
  return x;
}

inline Matrix scale(Matrix x, cx s) {
  for (auto &v : x.a)
    v *= s;
  return x;
}

/// Kronecker product. kron(A, B) puts A on the more significant index bits.
inline Matrix kron(const Matrix &x, const Matrix &y) {
  Matrix out(x.dim * y.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < y.dim; ++k)
        for (std::size_t l = 0; l < y.dim; ++l)
          out(i * y.dim + k, j * y.dim + l) = x(i, j) * y(k, l);
  return out;
}

/// Operator `op` on qubit q of n, identity elsewhere (qubit 0 = LSB).
inline Matrix embed(const Matrix &op, std::size_t q, std::size_t n) {
  Matrix out = Matrix::identity(1);
  for (std::size_t k = n; k-- > 0;)
    out = kron(out, k == q ? op : Matrix::identity(2));
  return out;
}

inline Matrix pauli_x() {
  Matrix m(2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2);
  m(0, 1) = cx(0, -1);
  m(1, 0) = cx(0, 1);
  return m;
}

/// exp(M) by scaling and squaring with a 30-term Taylor series.
inline Matrix expm(const Matrix &m) {
  double norm = 0.0;
  for (const auto &v : m.a)
    norm = std::max(norm, std::abs(v));
  int squarings = 0;
  while (norm * static_cast<double>(m.dim) > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix small = scale(m, std::pow(0.5, squarings));
  Matrix term = Matrix::identity(m.dim);
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = scale(term * small, 1.0 / k);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s)
    sum = sum * sum;
  return sum;
}

inline std::vector<cx> apply(const Matrix &m, const std::vector<cx> &v) {
  std::vector<cx> out(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

/// max |<a|b>| deviation from a global phase: 1 - |<a|b>| for unit vectors.
inline double phase_distance(const std::vector<cx> &a, const std::vector<cx> &b) {
  cx overlap{};
  for (std::size_t i = 0; i < a.size(); ++i)
    overlap += std::conj(a[i]) * b[i];
  return 1.0 - std::abs(overlap);
}

/// Symmetric random weight matrix, zero diagonal, entries uniform in [0, hi).
inline std::vector<double> random_weights(std::size_t n, double hi,
                                          std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> dist(0.0, hi);
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      w[i * n + j] = w[j * n + i] = dist(rng);
  return w;
}

/// Maximum cut by recursive enumeration of side assignments with node 0
/// pinned to side A. Independent of the library's bit conventions.
inline double max_cut_enumeration(const std::vector<double> &w, std::size_t n) {
  std::vector<int> side(n, 0);
  double best = 0.0;
  auto recurse = [&](auto &self, std::size_t k) -> void {
    if (k == n) {
      double cut = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i < j && side[i] != side[j])
            cut += w[i * n + j];
      best = std::max(best, cut);
      return;
    }
    for (int s = 0; s < 2; ++s) {
      side[k] = s;
      self(self, k + 1);
    }
  };
  if (n <= 1)
    return 0.0;
  side[0] = 0;
  recurse(recurse, 1);
  return best;
}

/// Minimum of f over a uniform grid on [lo0,hi0] x [lo1,hi1].
template <typename F>
double grid_min_2d(F &&f, double lo0, double hi0, double lo1, double hi1,
                   std::size_t steps) {
  double best = INFINITY;
  for (std::size_t i = 0; i <= steps; ++i)
    for (std::size_t j = 0; j <= steps; ++j) {
      const double x = lo0 + (hi0 - lo0) * static_cast<double>(i) / steps;
      const double y = lo1 + (hi1 - lo1) * static_cast<double>(j) / steps;
      best = std::min(best, f(x, y));
    }
  return best;
}

/// Single-edge (weight w) QAOA p=1 expectation from explicit 4x4 matrices:
/// |psi> = exp(-i b (X0 + X1)) diag(exp(-i g E)) |++>.
inline double single_edge_qaoa_expectation(double w, double beta, double gamma) {
  const double energies[4] = {0.0, -w, -w, 0.0};
  Matrix mix = expm(scale(embed(pauli_x(), 0, 2) + embed(pauli_x(), 1, 2),
                          cx(0, -beta)));
  std::vector<cx> psi(4, 0.5);
  for (std::size_t x = 0; x < 4; ++x)
    psi[x] *= std::exp(cx(0, -gamma * energies[x]));
  psi = apply(mix, psi);
  double e = 0.0;
  for (std::size_t x = 0; x < 4; ++x)
    e += std::norm(psi[x]) * energies[x];
  return e;
}

} // namespace oracle
