#pragma once

#include <array>
#include <cmath>
#include <random>

#include "hosvd3/qubit3.hpp"

namespace hosvd3 {

/// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
template <class Engine>
Complex complex_gaussian(Engine& engine) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(engine);
  const double im = normal(engine);
  return {re, im};
}

/// Haar-random pure state: eight i.i.d. complex Gaussians, normalized.
template <class Engine>
qubit3::ThreeQubitState random_state(Engine& engine) {
  std::array<Complex, 8> amps{};
  for (auto& a : amps) a = complex_gaussian(engine);
  return qubit3::normalize(amps);
}

/// Haar-random n×n unitary: Gram–Schmidt on a complex Ginibre matrix, which
/// yields the QR factor whose R has a positive real diagonal.
template <class Engine>
ComplexMatrix random_unitary(Engine& engine, std::size_t n = 2) {
  ComplexMatrix z(n, n);
  for (auto& x : z.data()) x = complex_gaussian(engine);
  ComplexMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = z(i, j);
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, k);
    }
    double len = 0.0;
    for (const auto& x : v) len += std::norm(x);
    len = std::sqrt(len);
    for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / len;
  }
  return q;
}

}  // namespace hosvd3
