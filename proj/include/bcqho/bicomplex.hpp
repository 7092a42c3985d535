#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Bicomplex arithmetic over T = {w_e + w_i1*i1 + w_i2*i2 + w_j*j} with
// i1^2 = i2^2 = -1, j^2 = +1, i1*i2 = j, i1*j = -i2, i2*j = -i1.
//
// Every element splits uniquely over the idempotent basis
//   e1 = (1+j)/2,  e2 = (1-j)/2,   e1^2 = e1, e2^2 = e2, e1*e2 = 0,
// as w = z1*e1 + z2*e2 with complex z1, z2, where ring operations act
// componentwise. The canonical four real components are the stored
// representation; the idempotent view is derived on demand. Note that
// e1 and e2 themselves (components 1/2) are exactly representable in
// binary floating point, so the unit table below holds with zero error.

namespace bcqho {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// inverse() of a nonzero zero divisor
struct NullConeError : Error {
  using Error::Error;
};

// inverse() of zero
struct ZeroError : Error {
  using Error::Error;
};

// componentwise function applied outside its domain
struct DomainError : Error {
  using Error::Error;
};

// Shared knobs for every approximate predicate.
struct Tolerance {
  double abs_eps = 0.0;
  double rel_eps = 1e-12;
};

class BiComplex {
 public:
  constexpr BiComplex() = default;
  constexpr BiComplex(double e, double i1, double i2, double j)
      : we_(e), wi1_(i1), wi2_(i2), wj_(j) {}

  // embeds z in C(i1), the field the idempotent components live in
  static constexpr BiComplex from_complex(Complex z) {
    return {z.real(), z.imag(), 0.0, 0.0};
  }

  static constexpr BiComplex from_real(double x) { return {x, 0.0, 0.0, 0.0}; }

  // w = z1*e1 + z2*e2
  static constexpr BiComplex from_idempotent(Complex z1, Complex z2) {
    return {0.5 * (z1.real() + z2.real()), 0.5 * (z1.imag() + z2.imag()),
            0.5 * (z2.imag() - z1.imag()), 0.5 * (z1.real() - z2.real())};
  }

  constexpr double e() const { return we_; }
  constexpr double i1() const { return wi1_; }
  constexpr double i2() const { return wi2_; }
  constexpr double j() const { return wj_; }

  // idempotent view: z1 = (w_e + w_j) + (w_i1 - w_i2) i, z2 likewise
  constexpr Complex z1() const { return {we_ + wj_, wi1_ - wi2_}; }
  constexpr Complex z2() const { return {we_ - wj_, wi1_ + wi2_}; }

  constexpr bool is_zero() const {
    return we_ == 0.0 && wi1_ == 0.0 && wi2_ == 0.0 && wj_ == 0.0;
  }

  constexpr BiComplex operator-() const { return {-we_, -wi1_, -wi2_, -wj_}; }

  friend constexpr BiComplex operator+(BiComplex a, BiComplex b) {
    return {a.we_ + b.we_, a.wi1_ + b.wi1_, a.wi2_ + b.wi2_, a.wj_ + b.wj_};
  }
  friend constexpr BiComplex operator-(BiComplex a, BiComplex b) {
    return {a.we_ - b.we_, a.wi1_ - b.wi1_, a.wi2_ - b.wi2_, a.wj_ - b.wj_};
  }

  // canonical-basis expansion of the unit table; agrees with the
  // componentwise idempotent product (z1*z1', z2*z2')
  friend constexpr BiComplex operator*(BiComplex a, BiComplex b) {
    return {a.we_ * b.we_ - a.wi1_ * b.wi1_ - a.wi2_ * b.wi2_ + a.wj_ * b.wj_,
            a.we_ * b.wi1_ + a.wi1_ * b.we_ - a.wi2_ * b.wj_ - a.wj_ * b.wi2_,
            a.we_ * b.wi2_ + a.wi2_ * b.we_ - a.wi1_ * b.wj_ - a.wj_ * b.wi1_,
            a.we_ * b.wj_ + a.wj_ * b.we_ + a.wi1_ * b.wi2_ + a.wi2_ * b.wi1_};
  }

  friend constexpr BiComplex operator*(double s, BiComplex w) {
    return {s * w.we_, s * w.wi1_, s * w.wi2_, s * w.wj_};
  }
  friend constexpr BiComplex operator*(BiComplex w, double s) { return s * w; }

  BiComplex& operator+=(BiComplex o) { return *this = *this + o; }
  BiComplex& operator-=(BiComplex o) { return *this = *this - o; }
  BiComplex& operator*=(BiComplex o) { return *this = *this * o; }

  friend constexpr bool operator==(BiComplex a, BiComplex b) {
    return a.we_ == b.we_ && a.wi1_ == b.wi1_ && a.wi2_ == b.wi2_ &&
           a.wj_ == b.wj_;
  }

 private:
  double we_ = 0.0, wi1_ = 0.0, wi2_ = 0.0, wj_ = 0.0;
};

inline constexpr BiComplex unit_one{1.0, 0.0, 0.0, 0.0};
inline constexpr BiComplex unit_i1{0.0, 1.0, 0.0, 0.0};
inline constexpr BiComplex unit_i2{0.0, 0.0, 1.0, 0.0};
inline constexpr BiComplex unit_j{0.0, 0.0, 0.0, 1.0};
inline constexpr BiComplex unit_e1{0.5, 0.0, 0.0, 0.5};
inline constexpr BiComplex unit_e2{0.5, 0.0, 0.0, -0.5};

inline std::pair<Complex, Complex> to_idempotent(BiComplex w) {
  return {w.z1(), w.z2()};
}

// dagger-conjugation: conj(z1)*e1 + conj(z2)*e2. Involutive, additive,
// multiplicative; w * dagger(w) lands in D+.
inline constexpr BiComplex conj_dagger(BiComplex w) {
  return {w.e(), -w.i1(), -w.i2(), w.j()};
}

// projection onto the k-th idempotent component (ring homomorphism)
inline Complex project(BiComplex w, int k) {
  return k == 1 ? w.z1() : w.z2();
}

// Euclidean modulus on R^4 = sqrt((|z1|^2 + |z2|^2)/2). Subadditive and
// sqrt(2)-submultiplicative (Price's convention).
inline double modulus(BiComplex w) {
  return std::sqrt(w.e() * w.e() + w.i1() * w.i1() + w.i2() * w.i2() +
                   w.j() * w.j());
}

// Zero divisors (the null cone) are the nonzero w with z1 = 0 or z2 = 0.
// The test is relative: |z_k| <= max(abs_eps, rel_eps * max(|z1|,|z2|)).
// Zero itself is classified as neither invertible nor a zero divisor.
inline bool is_null_cone(BiComplex w, Tolerance tol = {}) {
  if (w.is_zero()) return false;
  const double a1 = std::abs(w.z1());
  const double a2 = std::abs(w.z2());
  const double eps = std::max(tol.abs_eps, tol.rel_eps * std::max(a1, a2));
  return a1 <= eps || a2 <= eps;
}

// w^{-1} = z1^{-1} e1 + z2^{-1} e2 when both components are nonzero.
inline BiComplex inverse(BiComplex w, Tolerance tol = {}) {
  if (w.is_zero()) throw ZeroError("inverse of zero");
  if (is_null_cone(w, tol))
    throw NullConeError("inverse of a zero divisor (null-cone element)");
  return BiComplex::from_idempotent(1.0 / w.z1(), 1.0 / w.z2());
}

// Q(w) = Q(z1) e1 + Q(z2) e2 for complex-coefficient polynomials,
// coeffs[p] multiplying w^p. Agrees with Horner evaluation of the same
// polynomial in the canonical basis.
inline BiComplex poly_eval(const std::vector<Complex>& coeffs, BiComplex w) {
  Complex q1 = 0.0, q2 = 0.0;
  const auto [z1, z2] = to_idempotent(w);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    q1 = q1 * z1 + *it;
    q2 = q2 * z2 + *it;
  }
  return BiComplex::from_idempotent(q1, q2);
}

inline bool approx_equal(BiComplex a, BiComplex b, Tolerance tol = {}) {
  const double scale = std::max(modulus(a), modulus(b));
  return modulus(a - b) <= tol.abs_eps + tol.rel_eps * scale;
}

}  // namespace bcqho
