#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bcqho/fock.hpp"
#include "bcqho/hyperbolic.hpp"

// Algebraic solution of the deformed harmonic oscillator
//
//   H = P^2/2m + m w^2 X^2 / 2,   [X, P] = i1 * hbar * xi * I,
//
// with hyperbolic deformation parameter xi = xi1*e1 + xi2*e2 (both
// components strictly positive; xi = 1 is the standard oscillator).
// Ladder operators A, A* with [A, A*] = xi*I generate the spectrum
// (l + 1/2) * hbar * w * xi on the truncated module of fock.hpp, and the
// general eigenket mixes levels across the two idempotent sectors.

namespace bcqho {

struct InvalidParams : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct BothZeroError : Error {
  using Error::Error;
};
struct ConstraintViolated : Error {
  using Error::Error;
};
struct ZeroScale : Error {
  using Error::Error;
};

struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  Hyperbolic xi{1.0, 1.0};
};

// throws InvalidParams unless mass, omega, hbar > 0 and xi strictly in D+
void validate(const OscillatorParams& p);

// A |phi_{l+1}> = sqrt((l+1) xi) |phi_l>,  A |phi_0> = 0, and its
// adjoint A* |phi_l> = sqrt((l+1) xi) |phi_{l+1}>, on dimension N+1.
// Square roots go through the D+ functional calculus.
std::pair<BiOperator, BiOperator> build_ladder(std::size_t trunc,
                                               const OscillatorParams& p);

// H = hbar*w*(A*A + xi/2 * I). This form is exact under truncation
// (A*A never reaches past level N); hbar*w*(AA* - xi/2 * I) agrees on
// the l < N block only.
BiOperator build_hamiltonian(std::size_t trunc, const OscillatorParams& p);

// X = sqrt(hbar/2mw)(A + A*), P = -i1 sqrt(hbar m w / 2)(A - A*);
// both self-adjoint, with [X, P] = i1*hbar*xi*I on the l < N block.
std::pair<BiOperator, BiOperator> build_position_momentum(
    std::size_t trunc, const OscillatorParams& p);

struct SpectrumEntry {
  int l = 0;
  int lprime = 0;
  Hyperbolic energy;  // hbar*w*[(l+1/2) xi1 * e1 + (l'+1/2) xi2 * e2]
  Ket ket;            // w1*e1|phi_l> + w2*e2|phi_l'>
};

// General eigenket of H (levels l and l' in the two sectors). Normalized
// iff |w1| = 1 = |w2|; a vanishing w1 or w2 gives a null-cone eigenket.
SpectrumEntry eigenket(int l, int lprime, Complex w1, Complex w2,
                       std::size_t trunc, const OscillatorParams& p);

// all (l, l') pairs up to the given maxima, l-major order, w1 = w2 = 1
std::vector<SpectrumEntry> enumerate_spectrum(int max_l, int max_lprime,
                                              std::size_t trunc,
                                              const OscillatorParams& p);

// Residuals of the two ladder-norm identities for an eigenket phi of H
// with eigenvalue lambda:
//   (A phi, A phi)   - (lambda/hbar*w - xi/2)(phi, phi)
//   (A* phi, A* phi) - (lambda/hbar*w + xi/2)(phi, phi)
// The A* residual is meaningful for level indices below the truncation
// boundary only.
std::pair<BiComplex, BiComplex> lemma1_check(const Ket& phi, Hyperbolic lambda,
                                             std::size_t trunc,
                                             const OscillatorParams& p);

// Commutator rescaling xi' = (xi1/a1b1) e1 + (xi2/a2b2) e2 induced by
// X = (a1 e1 + a2 e2) X', P = (b1 e1 + b2 e2) P'. Preserving the
// Hamiltonian form forces |a1| = |a2| and |b1| = |b2|, which leaves
// |xi2'/xi1'| invariant; the result may leave D+ for some sign choices
// and is then unusable as an OscillatorParams::xi.
Hyperbolic rescale_xi(Hyperbolic xi, double alpha1, double alpha2,
                      double beta1, double beta2);

// export formats: CSV columns l,lprime,E1,E2 and a JSON record array
// of {l, lprime, energy:{x1,x2}, norm}
std::string spectrum_csv(const std::vector<SpectrumEntry>& entries);

}  // namespace bcqho
