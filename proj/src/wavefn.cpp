#include "bcqho/wavefn.hpp"

#include <algorithm>
#include <cmath>

namespace bcqho {

namespace {

constexpr double kAlphaMergeRel = 1e-14;

std::vector<MsTerm> canonicalize(std::vector<MsTerm> terms) {
  for (const MsTerm& t : terms)
    if (t.n < 0 || !(t.alpha > 0.0))
      throw DomainError("MsTerm needs power >= 0 and alpha > 0");
  std::sort(terms.begin(), terms.end(), [](const MsTerm& a, const MsTerm& b) {
    return a.n != b.n ? a.n < b.n : a.alpha < b.alpha;
  });
  std::vector<MsTerm> out;
  for (const MsTerm& t : terms) {
    if (!out.empty() && out.back().n == t.n &&
        std::fabs(t.alpha - out.back().alpha) <=
            kAlphaMergeRel * std::max(std::fabs(t.alpha),
                                      std::fabs(out.back().alpha))) {
      out.back().c += t.c;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const MsTerm& t) { return t.c == 0.0; });
  return out;
}

std::vector<MsTerm> scale_terms(std::vector<MsTerm> terms, Complex s) {
  for (MsTerm& t : terms) t.c *= s;
  return terms;
}

std::vector<MsTerm> derivative_terms(const std::vector<MsTerm>& terms) {
  std::vector<MsTerm> out;
  out.reserve(2 * terms.size());
  for (const MsTerm& t : terms) {
    if (t.n > 0) out.push_back({t.n - 1, t.alpha, double(t.n) * t.c});
    out.push_back({t.n + 1, t.alpha, -2.0 * t.alpha * t.c});
  }
  return out;
}

Complex eval_terms(const std::vector<MsTerm>& terms, double x) {
  Complex v = 0.0;
  for (const MsTerm& t : terms)
    v += t.c * std::pow(x, t.n) * std::exp(-t.alpha * x * x);
  return v;
}

}  // namespace

double HermitePoly::eval(double y) const {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    v = v * y + it->convert_to<double>();
  return v;
}

HermitePoly hermite_coeffs(int l) {
  if (l < 0 || l > kMaxHermiteOrder)
    throw OrderTooLarge("hermite order outside [0, 60]");
  std::vector<BigInt> prev{1};          // H_0
  if (l == 0) return {0, std::move(prev)};
  std::vector<BigInt> cur{0, 2};        // H_1
  for (int k = 1; k < l; ++k) {
    // H_{k+1} = 2 y H_k - 2k H_{k-1}
    std::vector<BigInt> next(cur.size() + 1);
    for (std::size_t p = 0; p < cur.size(); ++p) next[p + 1] = 2 * cur[p];
    for (std::size_t p = 0; p < prev.size(); ++p) next[p] -= 2 * k * prev[p];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {l, std::move(cur)};
}

Hyperbolic hermite_hyperbolic_eval(int l, Hyperbolic theta) {
  const HermitePoly h = hermite_coeffs(l);
  return {h.eval(theta.x1), h.eval(theta.x2)};
}

Hyperbolic theta_of_x(double x, const OscillatorParams& p) {
  const double scale = std::sqrt(p.mass * p.omega / p.hbar);
  return (scale * x) * inv_nth_root(p.xi, 2);
}

MsFunction::MsFunction(std::vector<MsTerm> u1, std::vector<MsTerm> u2)
    : comp1_(canonicalize(std::move(u1))), comp2_(canonicalize(std::move(u2))) {}

Complex MsFunction::eval_component(int k, double x) const {
  return eval_terms(k == 1 ? comp1_ : comp2_, x);
}

BiComplex MsFunction::operator()(double x) const {
  return BiComplex::from_idempotent(eval_terms(comp1_, x),
                                    eval_terms(comp2_, x));
}

double MsFunction::max_coeff_modulus() const {
  double m = 0.0;
  for (const MsTerm& t : comp1_) m = std::max(m, std::abs(t.c));
  for (const MsTerm& t : comp2_) m = std::max(m, std::abs(t.c));
  return m;
}

MsFunction MsFunction::operator-() const {
  return {scale_terms(comp1_, -1.0), scale_terms(comp2_, -1.0)};
}

MsFunction operator+(const MsFunction& a, const MsFunction& b) {
  std::vector<MsTerm> u1 = a.comp1_, u2 = a.comp2_;
  u1.insert(u1.end(), b.comp1_.begin(), b.comp1_.end());
  u2.insert(u2.end(), b.comp2_.begin(), b.comp2_.end());
  return {std::move(u1), std::move(u2)};
}

MsFunction operator-(const MsFunction& a, const MsFunction& b) {
  return a + (-b);
}

MsFunction operator*(BiComplex s, const MsFunction& u) {
  return {scale_terms(u.comp1_, s.z1()), scale_terms(u.comp2_, s.z2())};
}

MsFunction MsFunction::derivative() const {
  return {derivative_terms(comp1_), derivative_terms(comp2_)};
}

MsFunction apply_X(const MsFunction& u) {
  auto lift = [](std::vector<MsTerm> terms) {
    for (MsTerm& t : terms) ++t.n;
    return terms;
  };
  return {lift(u.component(1)), lift(u.component(2))};
}

MsFunction apply_P(const MsFunction& u, const OscillatorParams& p) {
  const MsFunction du = u.derivative();
  // -i1 hbar xi du/dx, xi acting componentwise
  return {scale_terms(du.component(1), Complex{0.0, -p.hbar * p.xi.x1}),
          scale_terms(du.component(2), Complex{0.0, -p.hbar * p.xi.x2})};
}

double gaussian_moment(int m, double beta) {
  if (m % 2 != 0) return 0.0;
  double v = std::sqrt(M_PI / beta);
  for (int k = m - 1; k >= 1; k -= 2) v *= k / (2.0 * beta);
  return v;
}

BiComplex ms_scalar_product(const MsFunction& u, const MsFunction& v) {
  Complex acc[2];
  for (int k = 1; k <= 2; ++k)
    for (const MsTerm& a : u.component(k))
      for (const MsTerm& b : v.component(k))
        acc[k - 1] += std::conj(a.c) * b.c *
                      gaussian_moment(a.n + b.n, a.alpha + b.alpha);
  return BiComplex::from_idempotent(acc[0], acc[1]);
}

MsFunction phi_l(int l, const OscillatorParams& p) {
  validate(p);
  const HermitePoly h = hermite_coeffs(l);

  // N_l = (mw/(pi hbar))^{1/4} * xi^{-1/4} / sqrt(2^l l!), with the
  // xi^{-1/4} factor through the D+ calculus (it is what makes the
  // single hyperbolic formula equal the assembled components)
  double pow2l_lfact = 1.0;
  for (int k = 1; k <= l; ++k) pow2l_lfact *= 2.0 * k;
  const double c_real = std::pow(p.mass * p.omega / (M_PI * p.hbar), 0.25) /
                        std::sqrt(pow2l_lfact);
  const Hyperbolic norm = c_real * inv_nth_root(p.xi, 4);

  std::vector<MsTerm> comps[2];
  const double mw_over_hbar = p.mass * p.omega / p.hbar;
  for (int k = 1; k <= 2; ++k) {
    const double xi_k = k == 1 ? p.xi.x1 : p.xi.x2;
    const double norm_k = k == 1 ? norm.x1 : norm.x2;
    const double alpha = 0.5 * mw_over_hbar / xi_k;   // exp(-theta_k^2/2)
    const double theta_scale = std::sqrt(mw_over_hbar / xi_k);
    double scale_pow = 1.0;  // theta_scale^p
    for (std::size_t pw = 0; pw < h.coeffs.size(); ++pw) {
      if (h.coeffs[pw] != 0)
        comps[k - 1].push_back(
            {static_cast<int>(pw), alpha,
             Complex{norm_k * h.coeffs[pw].convert_to<double>() * scale_pow,
                     0.0}});
      scale_pow *= theta_scale;
    }
  }
  return {std::move(comps[0]), std::move(comps[1])};
}

MsFunction phi_mixed(int l, int lprime, Complex w1, Complex w2,
                     const OscillatorParams& p) {
  const MsFunction ul = phi_l(l, p);
  const MsFunction ulp = phi_l(lprime, p);
  return {scale_terms(ul.component(1), w1), scale_terms(ulp.component(2), w2)};
}

std::pair<Complex, Complex> to_unit_j_form(const MsFunction& u, double x) {
  const Complex u1 = u.eval_component(1, x);
  const Complex u2 = u.eval_component(2, x);
  return {0.5 * (u1 + u2), 0.5 * (u1 - u2)};
}

MsFunction hamiltonian_apply(const MsFunction& u, const OscillatorParams& p) {
  const MsFunction ddu = u.derivative().derivative();
  const MsFunction x2u = apply_X(apply_X(u));
  const double c2 = 0.5 * p.mass * p.omega * p.omega;
  const double hh = p.hbar * p.hbar / (2.0 * p.mass);
  const MsFunction kinetic{
      scale_terms(ddu.component(1), Complex{-hh * p.xi.x1 * p.xi.x1, 0.0}),
      scale_terms(ddu.component(2), Complex{-hh * p.xi.x2 * p.xi.x2, 0.0})};
  return kinetic + BiComplex::from_real(c2) * x2u;
}

double hamiltonian_residual(int l, const OscillatorParams& p) {
  const MsFunction u = phi_l(l, p);
  const Hyperbolic energy = p.hbar * p.omega * (l + 0.5) * p.xi;
  const MsFunction residual =
      hamiltonian_apply(u, p) - to_bicomplex(energy) * u;
  return residual.max_coeff_modulus();
}

}  // namespace bcqho
