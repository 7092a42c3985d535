#include "bcqho/fock.hpp"

#include <algorithm>
#include <cmath>

namespace bcqho {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": dimensions differ");
}

}  // namespace

Ket Ket::basis(std::size_t dim, std::size_t l) {
  Ket k(dim);
  if (l >= dim) throw DimensionMismatch("basis ket: level outside dimension");
  k[l] = unit_one;
  return k;
}

bool Ket::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](BiComplex w) { return w.is_zero(); });
}

Ket Ket::operator-() const {
  Ket r(dim());
  for (std::size_t l = 0; l < dim(); ++l) r[l] = -coords_[l];
  return r;
}

Ket operator+(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "ket add");
  Ket r(a.dim());
  for (std::size_t l = 0; l < a.dim(); ++l) r[l] = a[l] + b[l];
  return r;
}

Ket operator-(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "ket sub");
  Ket r(a.dim());
  for (std::size_t l = 0; l < a.dim(); ++l) r[l] = a[l] - b[l];
  return r;
}

Ket operator*(BiComplex s, const Ket& k) {
  Ket r(k.dim());
  for (std::size_t l = 0; l < k.dim(); ++l) r[l] = s * k[l];
  return r;
}

BiComplex scalar_product(const Ket& psi, const Ket& chi) {
  require_same_dim(psi.dim(), chi.dim(), "scalar_product");
  Complex s1 = 0.0, s2 = 0.0;
  for (std::size_t l = 0; l < psi.dim(); ++l) {
    s1 += std::conj(psi[l].z1()) * chi[l].z1();
    s2 += std::conj(psi[l].z2()) * chi[l].z2();
  }
  return BiComplex::from_idempotent(s1, s2);
}

Ket project(const Ket& psi, int k) {
  Ket r(psi.dim());
  for (std::size_t l = 0; l < psi.dim(); ++l)
    r[l] = BiComplex::from_complex(k == 1 ? psi[l].z1() : psi[l].z2());
  return r;
}

double ket_norm(const Ket& psi) {
  const BiComplex sp = scalar_product(psi, psi);
  // (psi,psi) is hyperbolic with non-negative components by construction
  const Hyperbolic h{std::max(0.0, sp.z1().real()),
                     std::max(0.0, sp.z2().real())};
  return modulus(to_bicomplex(sqrt(h)));
}

bool ket_in_null_cone(const Ket& psi, Tolerance tol) {
  if (psi.is_zero()) return false;
  double n1 = 0.0, n2 = 0.0, scale = 0.0;
  for (std::size_t l = 0; l < psi.dim(); ++l) {
    n1 = std::max(n1, std::abs(psi[l].z1()));
    n2 = std::max(n2, std::abs(psi[l].z2()));
    scale = std::max(scale, modulus(psi[l]));
  }
  const double eps = std::max(tol.abs_eps, tol.rel_eps * scale);
  return n1 <= eps || n2 <= eps;
}

bool approx_equal(const Ket& a, const Ket& b, Tolerance tol) {
  if (a.dim() != b.dim()) return false;
  double scale = 0.0;
  for (std::size_t l = 0; l < a.dim(); ++l)
    scale = std::max({scale, modulus(a[l]), modulus(b[l])});
  const double eps = tol.abs_eps + tol.rel_eps * scale;
  for (std::size_t l = 0; l < a.dim(); ++l)
    if (modulus(a[l] - b[l]) > eps) return false;
  return true;
}

BiOperator BiOperator::identity(std::size_t dim) {
  BiOperator a(dim);
  for (std::size_t i = 0; i < dim; ++i) a.set_entry(i, i, unit_one);
  return a;
}

Ket BiOperator::apply(const Ket& psi) const {
  require_same_dim(dim_, psi.dim(), "operator apply");
  Ket r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex acc1 = 0.0, acc2 = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      acc1 += m1_[i * dim_ + k] * psi[k].z1();
      acc2 += m2_[i * dim_ + k] * psi[k].z2();
    }
    r[i] = BiComplex::from_idempotent(acc1, acc2);
  }
  return r;
}

BiOperator BiOperator::operator-() const {
  BiOperator r(dim_);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) {
    r.m1_[i] = -m1_[i];
    r.m2_[i] = -m2_[i];
  }
  return r;
}

BiOperator operator+(const BiOperator& a, const BiOperator& b) {
  require_same_dim(a.dim_, b.dim_, "operator add");
  BiOperator r(a.dim_);
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) {
    r.m1_[i] = a.m1_[i] + b.m1_[i];
    r.m2_[i] = a.m2_[i] + b.m2_[i];
  }
  return r;
}

BiOperator operator-(const BiOperator& a, const BiOperator& b) {
  require_same_dim(a.dim_, b.dim_, "operator sub");
  BiOperator r(a.dim_);
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) {
    r.m1_[i] = a.m1_[i] - b.m1_[i];
    r.m2_[i] = a.m2_[i] - b.m2_[i];
  }
  return r;
}

BiOperator operator*(const BiOperator& a, const BiOperator& b) {
  require_same_dim(a.dim_, b.dim_, "operator mul");
  const std::size_t n = a.dim_;
  BiOperator r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a1 = a.m1_[i * n + k];
      const Complex a2 = a.m2_[i * n + k];
      if (a1 == 0.0 && a2 == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        r.m1_[i * n + j] += a1 * b.m1_[k * n + j];
        r.m2_[i * n + j] += a2 * b.m2_[k * n + j];
      }
    }
  return r;
}

BiOperator operator*(BiComplex s, const BiOperator& a) {
  BiOperator r(a.dim_);
  const Complex s1 = s.z1(), s2 = s.z2();
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) {
    r.m1_[i] = s1 * a.m1_[i];
    r.m2_[i] = s2 * a.m2_[i];
  }
  return r;
}

BiOperator adjoint(const BiOperator& a) {
  const std::size_t n = a.dim();
  BiOperator r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.set_entry(i, j, conj_dagger(a.entry(j, i)));
  return r;
}

BiOperator commutator(const BiOperator& a, const BiOperator& b) {
  return a * b - b * a;
}

double max_entry_modulus(const BiOperator& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      m = std::max(m, modulus(a.entry(i, j)));
  return m;
}

bool is_self_adjoint(const BiOperator& a, Tolerance tol) {
  const double eps = tol.abs_eps + tol.rel_eps * max_entry_modulus(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (modulus(a.entry(i, j) - conj_dagger(a.entry(j, i))) > eps)
        return false;
  return true;
}

bool operator_in_null_cone(const BiOperator& a, Tolerance tol) {
  double n1 = 0.0, n2 = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      n1 = std::max(n1, std::abs(a.component(1, i, j)));
      n2 = std::max(n2, std::abs(a.component(2, i, j)));
      scale = std::max(scale, modulus(a.entry(i, j)));
    }
  if (scale == 0.0) return false;
  const double eps = std::max(tol.abs_eps, tol.rel_eps * scale);
  return n1 <= eps || n2 <= eps;
}

bool approx_equal(const BiOperator& a, const BiOperator& b, Tolerance tol) {
  if (a.dim() != b.dim()) return false;
  const double scale = std::max(max_entry_modulus(a), max_entry_modulus(b));
  const double eps = tol.abs_eps + tol.rel_eps * scale;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (modulus(a.entry(i, j) - b.entry(i, j)) > eps) return false;
  return true;
}

}  // namespace bcqho
