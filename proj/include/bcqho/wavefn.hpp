#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "bcqho/bicomplex.hpp"
#include "bcqho/hyperbolic.hpp"
#include "bcqho/oscillator.hpp"

// Coordinate-basis side of the oscillator: the function module M_S of
// finite sums of Gaussian-polynomial terms c * x^n * exp(-alpha x^2)
// per idempotent component, the actions X{u} = x u and
// P{u} = -i1 hbar xi du/dx (closed in M_S), the closed-form scalar
// product via Gaussian moments, and the eigenfunctions
//
//   phi_l(x) = [sqrt(mw/(pi hbar xi)) / (2^l l!)]^{1/2}
//              * exp(-theta^2/2) * H_l(theta),
//   theta    = sqrt(mw/(hbar xi)) x,
//
// where H_l(theta) = H_l(theta_1) e1 + H_l(theta_2) e2 is the Hermite
// polynomial lifted componentwise to hyperbolic arguments.

namespace bcqho {

struct OrderTooLarge : Error {
  using Error::Error;
};

using BigInt = boost::multiprecision::cpp_int;

// Three-term recurrence H_{l+1} = 2y H_l - 2l H_{l-1} kept in exact
// integers; coefficients only become floating point at evaluation.
inline constexpr int kMaxHermiteOrder = 60;

struct HermitePoly {
  int order = 0;
  std::vector<BigInt> coeffs;  // coeffs[p] multiplies y^p

  double eval(double y) const;
};

HermitePoly hermite_coeffs(int l);

// H_l(theta) componentwise on a hyperbolic argument
Hyperbolic hermite_hyperbolic_eval(int l, Hyperbolic theta);

// theta = sqrt(mw/(hbar xi)) x, the inverse square root taken in D+
Hyperbolic theta_of_x(double x, const OscillatorParams& p);

// one Gaussian-polynomial term c * x^n * exp(-alpha x^2)
struct MsTerm {
  int n = 0;
  double alpha = 1.0;
  Complex c;
};

// Element of M_S: u(x) = e1 u_1(x) + e2 u_2(x), each component a finite
// canonicalized term list (terms with equal n and alpha within relative
// 1e-14 merged, exact-zero coefficients dropped).
class MsFunction {
 public:
  MsFunction() = default;
  MsFunction(std::vector<MsTerm> u1, std::vector<MsTerm> u2);

  const std::vector<MsTerm>& component(int k) const {
    return k == 1 ? comp1_ : comp2_;
  }

  Complex eval_component(int k, double x) const;
  BiComplex operator()(double x) const;

  bool is_zero() const { return comp1_.empty() && comp2_.empty(); }
  double max_coeff_modulus() const;

  MsFunction operator-() const;
  friend MsFunction operator+(const MsFunction& a, const MsFunction& b);
  friend MsFunction operator-(const MsFunction& a, const MsFunction& b);
  friend MsFunction operator*(BiComplex s, const MsFunction& u);

  // componentwise d/dx; n f_{n-1,alpha} - 2 alpha f_{n+1,alpha} per term
  MsFunction derivative() const;

 private:
  std::vector<MsTerm> comp1_, comp2_;
};

MsFunction apply_X(const MsFunction& u);
MsFunction apply_P(const MsFunction& u, const OscillatorParams& p);

// integral of x^m exp(-beta x^2) over the real line: zero for odd m,
// (m-1)!! sqrt(pi/beta) / (2 beta)^{m/2} for even m
double gaussian_moment(int m, double beta);

// (u, v) = integral dagger(u) v dx, evaluated in closed form
BiComplex ms_scalar_product(const MsFunction& u, const MsFunction& v);

// normalized l-th eigenfunction of H as an element of M_S; the
// normalization constant goes through the D+ calculus on xi itself
MsFunction phi_l(int l, const OscillatorParams& p);

// e1 w1 phi_{l,1} + e2 w2 phi_{l',2}; normalized iff |w1| = 1 = |w2|
MsFunction phi_mixed(int l, int lprime, Complex w1, Complex w2,
                     const OscillatorParams& p);

// value split over the units 1 and j: (u1+u2)/2 + j (u1-u2)/2 at x
std::pair<Complex, Complex> to_unit_j_form(const MsFunction& u, double x);

// H u = -(hbar^2 xi^2 / 2m) u'' + (m w^2 / 2) x^2 u, symbolically
MsFunction hamiltonian_apply(const MsFunction& u, const OscillatorParams& p);

// max coefficient modulus of H phi_l - E_l phi_l after canonicalization
double hamiltonian_residual(int l, const OscillatorParams& p);

}  // namespace bcqho
