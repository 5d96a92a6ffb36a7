#pragma once

// Seeded random generators and library-independent oracles shared by the
// unit, property and acceptance tests.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "resdil/linalg.hpp"
#include "resdil/states.hpp"

namespace testing_support {

using resdil::Complex;
using resdil::ComplexMatrix;
using resdil::DensityMatrix;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  Complex cnormal() { return {normal(), normal()}; }

  std::vector<Complex> ket(std::size_t d) {
    std::vector<Complex> v(d);
    double norm = 0.0;
    for (Complex& c : v) {
      c = cnormal();
      norm += std::norm(c);
    }
    for (Complex& c : v) c /= std::sqrt(norm);
    return v;
  }

  /// Ginibre-distributed full-rank state; rank < d gives a low-rank one.
  DensityMatrix state(std::size_t d, std::size_t rank = 0) {
    if (rank == 0) rank = d;
    ComplexMatrix rho(d);
    for (std::size_t r = 0; r < rank; ++r) {
      const std::vector<Complex> v = ket(d);
      const double w = uniform(0.05, 1.0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) rho(i, j) += w * v[i] * std::conj(v[j]);
      }
    }
    rho *= Complex(1.0 / rho.trace().real());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) rho(j, i) = std::conj(rho(i, j));
      rho(i, i) = rho(i, i).real();
    }
    return DensityMatrix(rho, resdil::Validation::kLenient);
  }

  ComplexMatrix hermitian(std::size_t d) {
    ComplexMatrix h(d);
    for (std::size_t i = 0; i < d; ++i) {
      h(i, i) = normal();
      for (std::size_t j = i + 1; j < d; ++j) {
        h(i, j) = cnormal();
        h(j, i) = std::conj(h(i, j));
      }
    }
    return h;
  }

  /// Haar-ish unitary by Gram-Schmidt on a complex Gaussian matrix.
  ComplexMatrix unitary(std::size_t d) {
    std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
    for (std::size_t c = 0; c < d; ++c) {
      for (Complex& x : cols[c]) x = cnormal();
      for (std::size_t p = 0; p < c; ++p) {
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < d; ++i) overlap += std::conj(cols[p][i]) * cols[c][i];
        for (std::size_t i = 0; i < d; ++i) cols[c][i] -= overlap * cols[p][i];
      }
      double norm = 0.0;
      for (const Complex& x : cols[c]) norm += std::norm(x);
      for (Complex& x : cols[c]) x /= std::sqrt(norm);
    }
    ComplexMatrix u(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = 0; c < d; ++c) u(i, c) = cols[c][i];
    }
    return u;
  }

  /// Uniform point on the probability simplex.
  std::vector<double> simplex(std::size_t k) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (double& x : w) {
      x = -std::log(uniform(1e-300, 1.0));
      sum += x;
    }
    for (double& x : w) x /= sum;
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double h2(double x) {
  double out = 0.0;
  if (x > 0) out -= x * std::log2(x);
  if (x < 1) out -= (1 - x) * std::log2(1 - x);
  return out;
}

inline double shannon(const std::vector<double>& p) {
  double out = 0.0;
  for (const double x : p) {
    if (x > 0) out -= x * std::log2(x);
  }
  return out;
}

/// Binomial tail P[X >= t+1], X ~ Bin(2t+1, p), from a Pascal-triangle table.
inline double binomial_tail(double p, unsigned t) {
  const unsigned n = 2 * t + 1;
  std::vector<double> row{1.0};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<double> next(i + 1, 1.0);
    for (unsigned k = 1; k < i; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  double sum = 0.0;
  for (unsigned k = t + 1; k <= n; ++k) {
    sum += row[k] * std::pow(p, static_cast<double>(k)) * std::pow(1 - p, static_cast<double>(n - k));
  }
  return sum;
}

inline ComplexMatrix projector(const std::vector<Complex>& v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

/// (|01> - |10>)/sqrt(2) as a ket.
inline std::vector<Complex> singlet_ket() {
  const double r = 1.0 / std::sqrt(2.0);
  return {0.0, r, -r, 0.0};
}

/// w |psi-><psi-| + (1 - w) (1⊗Z)|psi-><psi-|(1⊗Z).
inline ComplexMatrix decoded_oracle(double w) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> flipped{0.0, -r, -r, 0.0};
  ComplexMatrix m = projector(singlet_ket());
  m *= Complex(w);
  ComplexMatrix f = projector(flipped);
  f *= Complex(1 - w);
  m += f;
  return m;
}

/// Closed-form decoded matrix for Pauli noise on the encoded |phi+>, in the
/// (|++>, |+->, |-+>, |-->) basis.
inline std::array<std::array<double, 4>, 4> theta_oracle(double p1, double p2, double p3) {
  const double a = 0.5 * std::pow(-1 + p2 + p3, 2) * (1 + 2 * p3 + 2 * p2);
  const double b = -0.5 * std::pow(p2 + p3, 2) * (-3 + 2 * p2 + 2 * p3);
  const double c = -0.5 * std::pow(-p2 + p3, 2) * (-3 + 6 * p1 + 4 * p2 + 2 * p3);
  const double d = 0.5 * std::pow(-1 + 2 * p1 + p2 + p3, 2) * (1 - 2 * p1 - 4 * p2 + 2 * p3);
  return {{{a, 0, 0, d}, {0, b, c, 0}, {0, c, b, 0}, {d, 0, 0, a}}};
}

/// Hadamard on both qubits, mapping the computational basis to (|++>, ..., |-->).
inline ComplexMatrix hadamard_pair() {
  const double r = 0.5;
  return ComplexMatrix{{r, r, r, r}, {r, -r, r, -r}, {r, r, -r, -r}, {r, -r, -r, r}};
}

}  // namespace testing_support
