#pragma once

#include <cmath>

#include "bcqho/bicomplex.hpp"

// Hyperbolic numbers D = {x1*e1 + x2*e2 | x1, x2 real}, the subring of T
// with real idempotent components, and the componentwise functional
// calculus on the positive cone D+ = {x1, x2 >= 0}:
//
//   f(x1*e1 + x2*e2) = f(x1)*e1 + f(x2)*e2
//
// restricted to a named whitelist (exp, sqrt, inv_nth_root, pow) so the
// lift contract stays testable per function.

namespace bcqho {

struct Hyperbolic {
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Hyperbolic() = default;
  constexpr Hyperbolic(double a, double b) : x1(a), x2(b) {}

  constexpr Hyperbolic operator-() const { return {-x1, -x2}; }

  friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) {
    return {a.x1 + b.x1, a.x2 + b.x2};
  }
  friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) {
    return {a.x1 - b.x1, a.x2 - b.x2};
  }
  friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
    return {a.x1 * b.x1, a.x2 * b.x2};
  }
  friend constexpr Hyperbolic operator*(double s, Hyperbolic h) {
    return {s * h.x1, s * h.x2};
  }
  friend constexpr Hyperbolic operator*(Hyperbolic h, double s) {
    return s * h;
  }
  friend constexpr Hyperbolic operator/(Hyperbolic h, double s) {
    return {h.x1 / s, h.x2 / s};
  }

  friend constexpr bool operator==(Hyperbolic a, Hyperbolic b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
};

// embedding D -> T (zero imaginary parts of z1, z2)
inline constexpr BiComplex to_bicomplex(Hyperbolic h) {
  return BiComplex::from_idempotent(Complex{h.x1, 0.0}, Complex{h.x2, 0.0});
}

inline constexpr bool in_d_plus(Hyperbolic h, bool strict = false) {
  return strict ? (h.x1 > 0.0 && h.x2 > 0.0) : (h.x1 >= 0.0 && h.x2 >= 0.0);
}

// D+ membership of a general bicomplex value, up to tolerance: both
// idempotent components real and non-negative (w * dagger(w) always
// qualifies)
inline bool in_d_plus(BiComplex w, bool strict = false, Tolerance tol = {}) {
  const double eps = std::max(tol.abs_eps, tol.rel_eps * modulus(w));
  const Complex z1 = w.z1(), z2 = w.z2();
  if (std::fabs(z1.imag()) > eps || std::fabs(z2.imag()) > eps) return false;
  return strict ? (z1.real() > eps && z2.real() > eps)
                : (z1.real() >= -eps && z2.real() >= -eps);
}

inline Hyperbolic exp(Hyperbolic h) {
  return {std::exp(h.x1), std::exp(h.x2)};
}

// defined on the closed cone so that norms of null-cone kets stay
// computable (components may be exactly zero there)
inline Hyperbolic sqrt(Hyperbolic h) {
  if (h.x1 < 0.0 || h.x2 < 0.0)
    throw DomainError("sqrt: component outside D+");
  return {std::sqrt(h.x1), std::sqrt(h.x2)};
}

// h^{-1/n}, e.g. the xi^{-1/4} of the oscillator normalization constant
inline Hyperbolic inv_nth_root(Hyperbolic h, int n) {
  if (n < 1) throw DomainError("inv_nth_root: n must be >= 1");
  if (!in_d_plus(h, /*strict=*/true))
    throw DomainError("inv_nth_root: component not strictly positive");
  return {std::pow(h.x1, -1.0 / n), std::pow(h.x2, -1.0 / n)};
}

inline Hyperbolic pow(Hyperbolic h, double p) {
  if (p != std::floor(p) && !in_d_plus(h, /*strict=*/true))
    throw DomainError("pow: non-integer exponent needs strictly positive components");
  return {std::pow(h.x1, p), std::pow(h.x2, p)};
}

inline Hyperbolic inverse(Hyperbolic h) {
  if (h.x1 == 0.0 || h.x2 == 0.0)
    throw NullConeError("inverse: hyperbolic component is zero");
  return {1.0 / h.x1, 1.0 / h.x2};
}

inline double modulus(Hyperbolic h) { return modulus(to_bicomplex(h)); }

}  // namespace bcqho
