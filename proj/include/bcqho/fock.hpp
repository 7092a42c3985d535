#pragma once

#include <cstddef>
#include <vector>

#include "bcqho/bicomplex.hpp"
#include "bcqho/hyperbolic.hpp"

// Finite, truncated model of the free T-module spanned by the oscillator
// eigenkets |phi_0> .. |phi_N>: coordinate vectors and dense operators
// over T, the bicomplex scalar product sum_l dagger(w_l) v_l, adjoints,
// and the idempotent projections that split everything into two complex
// problems. All identities involving A* are exact on the l <= N-1 block;
// the top basis state is a truncation boundary.

namespace bcqho {

struct DimensionMismatch : Error {
  using Error::Error;
};

class Ket {
 public:
  Ket() = default;
  explicit Ket(std::size_t dim) : coords_(dim) {}
  explicit Ket(std::vector<BiComplex> coords) : coords_(std::move(coords)) {}

  // |phi_l>
  static Ket basis(std::size_t dim, std::size_t l);

  std::size_t dim() const { return coords_.size(); }
  const BiComplex& operator[](std::size_t l) const { return coords_[l]; }
  BiComplex& operator[](std::size_t l) { return coords_[l]; }
  const std::vector<BiComplex>& coords() const { return coords_; }

  bool is_zero() const;

  Ket operator-() const;
  friend Ket operator+(const Ket& a, const Ket& b);
  friend Ket operator-(const Ket& a, const Ket& b);
  friend Ket operator*(BiComplex s, const Ket& k);

 private:
  std::vector<BiComplex> coords_;
};

// (psi, chi) = sum_l dagger(w_l) v_l: T-valued, linear in the second
// slot, (psi,chi) = dagger((chi,psi)), and (psi,psi) in D+ with zero
// only for the zero ket.
BiComplex scalar_product(const Ket& psi, const Ket& chi);

// P_k as a map M -> V: idempotent components of each coordinate,
// re-embedded as C(i1) scalars. e1*project(psi,1) + e2*project(psi,2)
// reconstructs psi.
Ket project(const Ket& psi, int k);

// |sqrt((psi,psi))| — dplus sqrt of the scalar product, then modulus.
// Equals (1/sqrt(2)) * hypot of the two projection 2-norms.
double ket_norm(const Ket& psi);

// nonzero ket with a vanishing idempotent projection
bool ket_in_null_cone(const Ket& psi, Tolerance tol = {});

bool approx_equal(const Ket& a, const Ket& b, Tolerance tol = {});

// Dense (N+1)x(N+1) operator over T, stored as the two complex
// component matrices A = e1*A1 + e2*A2 (row-major). Products, sums and
// the adjoint all act componentwise, mirroring the idempotent split of
// the module itself.
class BiOperator {
 public:
  BiOperator() = default;
  explicit BiOperator(std::size_t dim)
      : dim_(dim), m1_(dim * dim), m2_(dim * dim) {}

  static BiOperator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  BiComplex entry(std::size_t row, std::size_t col) const {
    return BiComplex::from_idempotent(m1_[row * dim_ + col],
                                      m2_[row * dim_ + col]);
  }
  void set_entry(std::size_t row, std::size_t col, BiComplex v) {
    m1_[row * dim_ + col] = v.z1();
    m2_[row * dim_ + col] = v.z2();
  }

  // component matrix access, k = 1|2
  Complex component(int k, std::size_t row, std::size_t col) const {
    return (k == 1 ? m1_ : m2_)[row * dim_ + col];
  }

  Ket apply(const Ket& psi) const;

  BiOperator operator-() const;
  friend BiOperator operator+(const BiOperator& a, const BiOperator& b);
  friend BiOperator operator-(const BiOperator& a, const BiOperator& b);
  friend BiOperator operator*(const BiOperator& a, const BiOperator& b);
  friend BiOperator operator*(BiComplex s, const BiOperator& a);
  friend Ket operator*(const BiOperator& a, const Ket& psi) {
    return a.apply(psi);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> m1_, m2_;
};

// dagger-conjugate transpose: the unique B with (psi, A chi) = (B psi, chi)
BiOperator adjoint(const BiOperator& a);

BiOperator commutator(const BiOperator& a, const BiOperator& b);

bool is_self_adjoint(const BiOperator& a, Tolerance tol = {});

bool operator_in_null_cone(const BiOperator& a, Tolerance tol = {});

bool approx_equal(const BiOperator& a, const BiOperator& b, Tolerance tol = {});

// largest entry modulus; the scale for relative operator comparisons
double max_entry_modulus(const BiOperator& a);

}  // namespace bcqho
