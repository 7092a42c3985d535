#pragma once

#include <random>

#include "bcqho/fock.hpp"

// shared test utilities: deterministic random values and residual
// helpers independent of the library's own approx_equal

namespace bcqho::testing {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  Complex cplx(double range) {
    return {uniform(-range, range), uniform(-range, range)};
  }
  BiComplex bicomplex(double range) {
    return {uniform(-range, range), uniform(-range, range),
            uniform(-range, range), uniform(-range, range)};
  }
  Ket ket(std::size_t dim, double range) {
    Ket k(dim);
    for (std::size_t l = 0; l < dim; ++l) k[l] = bicomplex(range);
    return k;
  }
  BiOperator op(std::size_t dim, double range) {
    BiOperator a(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a.set_entry(i, j, bicomplex(range));
    return a;
  }
};

inline double diff(BiComplex a, BiComplex b) { return modulus(a - b); }

inline double diff(const Ket& a, const Ket& b) {
  double worst = 0.0;
  for (std::size_t l = 0; l < a.dim(); ++l)
    worst = std::max(worst, modulus(a[l] - b[l]));
  return worst;
}

inline double diff(const BiOperator& a, const BiOperator& b) {
  return max_entry_modulus(a - b);
}

}  // namespace bcqho::testing
