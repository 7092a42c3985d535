#include "bcqho/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "bcqho/wavefn.hpp"

namespace bcqho {

namespace {

// pinned thresholds where an invariant states its own tolerance
constexpr double kOrthonormalityThr = 1e-10;
constexpr double kXpCommutatorThr = 1e-13;
constexpr double kFactorizationThr = 1e-12;
constexpr double kOdeResidualThr = 1e-10;
constexpr double kCounterexampleThr = 1e-14;

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

double rel_diff(BiComplex a, BiComplex b) {
  return modulus(a - b) / std::max({1.0, modulus(a), modulus(b)});
}

double rel_diff(const Ket& a, const Ket& b) {
  double scale = 1.0, worst = 0.0;
  for (std::size_t l = 0; l < a.dim(); ++l)
    scale = std::max({scale, modulus(a[l]), modulus(b[l])});
  for (std::size_t l = 0; l < a.dim(); ++l)
    worst = std::max(worst, modulus(a[l] - b[l]));
  return worst / scale;
}

double rel_diff(const BiOperator& a, const BiOperator& b) {
  const double scale =
      std::max({1.0, max_entry_modulus(a), max_entry_modulus(b)});
  return max_entry_modulus(a - b) / scale;
}

class Suite {
 public:
  explicit Suite(const VerifyConfig& cfg) : cfg_(cfg) {}

  void add(const std::string& name, double worst, double threshold) {
    results_.push_back({name, worst, threshold, worst <= threshold});
  }
  void add_rel(const std::string& name, double worst) {
    add(name, worst, cfg_.tol.rel_eps);
  }
  void add_bool(const std::string& name, bool ok) {
    add(name, ok ? 0.0 : 1.0, 0.0);
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const VerifyConfig& cfg_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> verify_core(const VerifyConfig& cfg) {
  Suite s(cfg);

  {
    double worst = 0.0;
    auto exact = [&](BiComplex got, BiComplex want) {
      worst = std::max(worst, modulus(got - want));
    };
    exact(unit_e1 * unit_e1, unit_e1);
    exact(unit_e2 * unit_e2, unit_e2);
    exact(unit_e1 + unit_e2, unit_one);
    exact(unit_e1 * unit_e2, BiComplex{});
    exact(unit_i1 * unit_i2, unit_j);
    exact(unit_i1 * unit_j, -unit_i2);
    exact(unit_i2 * unit_j, -unit_i1);
    exact(unit_i1 * unit_i1, -unit_one);
    exact(unit_i2 * unit_i2, -unit_one);
    exact(unit_j * unit_j, unit_one);
    s.add("core.unit_table", worst, 0.0);
  }

  {
    Rng rng(101);
    double worst = 0.0;
    for (int it = 0; it < 2000; ++it) {
      const BiComplex w = rng.bicomplex(10.0);
      const auto [z1, z2] = to_idempotent(w);
      worst = std::max(worst, rel_diff(BiComplex::from_idempotent(z1, z2), w));
    }
    s.add_rel("core.idempotent_roundtrip", worst);
  }

  {
    Rng rng(102);
    double worst = 0.0;
    for (int it = 0; it < 100000; ++it) {
      const BiComplex a = rng.bicomplex(10.0);
      const BiComplex b = rng.bicomplex(10.0);
      const double tri = modulus(a + b) - (modulus(a) + modulus(b));
      const double sub =
          modulus(a * b) - std::sqrt(2.0) * modulus(a) * modulus(b);
      worst = std::max({worst, tri / std::max(1.0, modulus(a) + modulus(b)),
                        sub / std::max(1.0, modulus(a) * modulus(b))});
    }
    // s = t = e1 achieves |s*t| = sqrt(2)|s||t| exactly
    const double tight = std::fabs(modulus(unit_e1 * unit_e1) -
                                   std::sqrt(2.0) * modulus(unit_e1) *
                                       modulus(unit_e1));
    worst = std::max(worst, tight);
    s.add_rel("core.modulus_bounds", worst);
  }

  {
    Rng rng(103);
    double worst = 0.0;
    for (int it = 0; it < 2000; ++it) {
      const BiComplex a = rng.bicomplex(10.0);
      const BiComplex b = rng.bicomplex(10.0);
      worst = std::max(worst, rel_diff(conj_dagger(a * b),
                                       conj_dagger(a) * conj_dagger(b)));
      worst = std::max(worst, rel_diff(conj_dagger(conj_dagger(a)), a));
      worst = std::max(worst, rel_diff(conj_dagger(a + b),
                                       conj_dagger(a) + conj_dagger(b)));
    }
    s.add_rel("core.dagger_properties", worst);
  }

  {
    Rng rng(104);
    double worst = 0.0;
    bool classified_ok = true;
    for (int it = 0; it < 2000; ++it) {
      const BiComplex w = rng.bicomplex(10.0);
      if (is_null_cone(w, cfg.tol) || w.is_zero()) continue;
      const BiComplex inv = inverse(w, cfg.tol);
      worst = std::max(worst, rel_diff(w * inv, unit_one));
      const auto [z1, z2] = to_idempotent(w);
      worst = std::max(
          worst, rel_diff(inv, BiComplex::from_idempotent(1.0 / z1, 1.0 / z2)));
    }
    try {
      inverse(unit_e1, cfg.tol);
      classified_ok = false;
    } catch (const NullConeError&) {
    }
    try {
      inverse(BiComplex{}, cfg.tol);
      classified_ok = false;
    } catch (const ZeroError&) {
    }
    if (is_null_cone(BiComplex{}, cfg.tol)) classified_ok = false;
    if (!classified_ok) worst = 1.0;
    s.add_rel("core.inverse_reciprocal", worst);
  }

  {
    Rng rng(105);
    double worst = 0.0;
    for (int it = 0; it < 2000; ++it) {
      const BiComplex a = rng.bicomplex(10.0);
      const BiComplex b = rng.bicomplex(10.0);
      for (int k = 1; k <= 2; ++k) {
        const Complex sum = project(a + b, k) - (project(a, k) + project(b, k));
        const Complex prod = project(a * b, k) - project(a, k) * project(b, k);
        const double scale =
            std::max({1.0, std::abs(project(a, k)), std::abs(project(b, k))});
        worst = std::max({worst, std::abs(sum) / scale,
                          std::abs(prod) / (scale * scale)});
      }
    }
    s.add_rel("core.projector_homomorphism", worst);
  }

  {
    Rng rng(106);
    double worst = 0.0;
    for (int it = 0; it < 2000; ++it) {
      const Hyperbolic h{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
      const Hyperbolic g{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
      worst = std::max(worst, rel_diff(to_bicomplex(exp(h) * exp(g)),
                                       to_bicomplex(exp(h + g))));
    }
    s.add_rel("core.exp_additivity", worst);
  }

  {
    Rng rng(107);
    double worst = 0.0;
    for (int it = 0; it < 2000; ++it) {
      const BiComplex w = rng.bicomplex(10.0);
      const BiComplex d = w * conj_dagger(w);
      const auto [z1, z2] = to_idempotent(d);
      const double scale = std::max(1.0, modulus(d));
      worst = std::max({worst, std::fabs(z1.imag()) / scale,
                        std::fabs(z2.imag()) / scale,
                        std::max(0.0, -z1.real()) / scale,
                        std::max(0.0, -z2.real()) / scale});
    }
    s.add_rel("core.w_wdagger_in_dplus", worst);
  }

  {
    Rng rng(108);
    double worst = 0.0;
    for (int it = 0; it < 500; ++it) {
      std::vector<Complex> coeffs(1 + static_cast<std::size_t>(
                                          rng.uniform(1.0, 6.0)));
      for (auto& c : coeffs) c = rng.cplx(2.0);
      const BiComplex w = rng.bicomplex(2.0);
      // canonical-basis Horner as the second route
      BiComplex horner{};
      for (auto it2 = coeffs.rbegin(); it2 != coeffs.rend(); ++it2)
        horner = horner * w + BiComplex::from_complex(*it2);
      worst = std::max(worst, rel_diff(poly_eval(coeffs, w), horner));
    }
    s.add_rel("core.poly_eval_routes", worst);
  }

  {
    Rng rng(109);
    double worst = 0.0;
    for (int it = 0; it < 2000; ++it) {
      const Hyperbolic h{rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0)};
      const Hyperbolic r1 = sqrt(h);
      worst = std::max({worst, std::fabs(r1.x1 - std::sqrt(h.x1)),
                        std::fabs(r1.x2 - std::sqrt(h.x2))});
      const Hyperbolic r2 = inv_nth_root(h, 4);
      worst = std::max({worst, std::fabs(r2.x1 - std::pow(h.x1, -0.25)),
                        std::fabs(r2.x2 - std::pow(h.x2, -0.25))});
      const double p = rng.uniform(-2.0, 2.0);
      const Hyperbolic r3 = pow(h, p);
      worst = std::max({worst, std::fabs(r3.x1 - std::pow(h.x1, p)),
                        std::fabs(r3.x2 - std::pow(h.x2, p))});
    }
    s.add_rel("core.dplus_componentwise_lift", worst);
  }

  return s.take();
}

std::vector<CheckResult> verify_fock(const VerifyConfig& cfg) {
  Suite s(cfg);
  const std::size_t dim = 8;

  {
    Rng rng(201);
    double worst = 0.0;
    bool ok = true;
    for (int it = 0; it < 400; ++it) {
      const Ket psi = rng.ket(dim, 3.0);
      const Ket phi = rng.ket(dim, 3.0);
      const Ket chi = rng.ket(dim, 3.0);
      const BiComplex sc = rng.bicomplex(3.0);
      // (i) additivity in the second slot
      worst = std::max(worst, rel_diff(scalar_product(psi, phi + chi),
                                       scalar_product(psi, phi) +
                                           scalar_product(psi, chi)));
      // (ii) (psi, s phi) = s (psi, phi)
      worst = std::max(worst, rel_diff(scalar_product(psi, sc * phi),
                                       sc * scalar_product(psi, phi)));
      // (iii) (psi, phi) = dagger((phi, psi))
      worst = std::max(worst, rel_diff(scalar_product(psi, phi),
                                       conj_dagger(scalar_product(phi, psi))));
      // (s psi, phi) = dagger(s) (psi, phi)
      worst =
          std::max(worst, rel_diff(scalar_product(sc * psi, phi),
                                   conj_dagger(sc) * scalar_product(psi, phi)));
      // (iv) (psi, psi) in D+ and zero only at zero
      const BiComplex norm2 = scalar_product(psi, psi);
      const auto [z1, z2] = to_idempotent(norm2);
      if (z1.real() < 0.0 || z2.real() < 0.0) ok = false;
      if (norm2.is_zero() && !psi.is_zero()) ok = false;
    }
    if (!scalar_product(Ket(dim), Ket(dim)).is_zero()) ok = false;
    if (!ok) worst = 1.0;
    s.add_rel("fock.scalar_product_axioms", worst);
  }

  {
    Rng rng(202);
    double worst = 0.0;
    for (int it = 0; it < 400; ++it) {
      const Ket psi = rng.ket(dim, 3.0);
      const Ket phi = rng.ket(dim, 3.0);
      const Ket psi1 = unit_e1 * project(psi, 1);
      const Ket psi2 = unit_e2 * project(psi, 2);
      const Ket phi1 = unit_e1 * project(phi, 1);
      const Ket phi2 = unit_e2 * project(phi, 2);
      worst = std::max(worst, rel_diff(scalar_product(psi, phi),
                                       scalar_product(psi1, phi1) +
                                           scalar_product(psi2, phi2)));
      worst = std::max(worst, rel_diff(psi1 + psi2, psi));
    }
    s.add_rel("fock.idempotent_separation", worst);
  }

  {
    Rng rng(203);
    double worst = 0.0;
    for (int it = 0; it < 100; ++it) {
      const BiOperator a = rng.op(dim, 3.0);
      const BiOperator b = rng.op(dim, 3.0);
      const BiComplex sc = rng.bicomplex(3.0);
      worst = std::max(worst, rel_diff(adjoint(adjoint(a)), a));
      worst = std::max(
          worst, rel_diff(adjoint(a * b), adjoint(b) * adjoint(a)));
      worst = std::max(worst, rel_diff(adjoint(sc * a),
                                       conj_dagger(sc) * adjoint(a)));
    }
    s.add_rel("fock.adjoint_antihomomorphism", worst);
  }

  {
    Rng rng(204);
    double worst = 0.0;
    for (int it = 0; it < 200; ++it) {
      const BiOperator a = rng.op(dim, 3.0);
      const Ket psi = rng.ket(dim, 3.0);
      const Ket chi = rng.ket(dim, 3.0);
      worst = std::max(worst,
                       rel_diff(scalar_product(psi, a * chi),
                                scalar_product(adjoint(a) * psi, chi)));
    }
    s.add_rel("fock.adjoint_defining_property", worst);
  }

  {
    Rng rng(205);
    double worst = 0.0;
    const Ket psi = rng.ket(dim, 3.0);
    for (std::size_t m = 0; m < dim; ++m) {
      const BiComplex wm = scalar_product(Ket::basis(dim, m), psi);
      worst = std::max(worst, rel_diff(wm, psi[m]));
    }
    s.add_rel("fock.linear_independence", worst);
  }

  {
    // Cauchy in ket_norm iff both projections Cauchy, on two constructed
    // sequences: a geometric one (all Cauchy) and one whose first
    // projection oscillates (nothing Cauchy).
    bool ok = true;
    auto tail_sup = [&](auto seq, auto dist) {
      double sup = 0.0;
      for (int m = 20; m < 26; ++m)
        for (int n = m + 1; n < 26; ++n)
          sup = std::max(sup, dist(seq(m), seq(n)));
      return sup;
    };
    auto geo = [&](int m) {
      return (std::pow(2.0, -m) * unit_one) * Ket::basis(dim, 0);
    };
    auto osc = [&](int m) {
      return ((m % 2 == 0 ? 1.0 : -1.0) * unit_e1) * Ket::basis(dim, 0) +
             unit_e2 * Ket::basis(dim, 1);
    };
    auto norm_dist = [](const Ket& a, const Ket& b) { return ket_norm(a - b); };
    auto proj_dist = [&](int k) {
      return [k](const Ket& a, const Ket& b) {
        return ket_norm(project(a - b, k));
      };
    };
    const double geo_all = std::max(
        {tail_sup(geo, norm_dist), tail_sup(geo, proj_dist(1)),
         tail_sup(geo, proj_dist(2))});
    if (geo_all > 1e-5) ok = false;                          // Cauchy both ways
    if (tail_sup(osc, norm_dist) < 0.5) ok = false;          // not Cauchy
    if (tail_sup(osc, proj_dist(1)) < 0.5) ok = false;       // P1 not Cauchy
    if (tail_sup(osc, proj_dist(2)) > 1e-12) ok = false;     // P2 Cauchy
    s.add_bool("fock.cauchy_iff_projections", ok);
  }

  {
    double worst = 0.0;
    const Ket phi0 = Ket::basis(dim, 0);
    worst = std::max(worst, std::fabs(ket_norm(phi0) - 1.0));
    worst = std::max(worst, std::fabs(ket_norm(unit_e1 * phi0) -
                                      1.0 / std::sqrt(2.0)));
    worst = std::max(worst, std::fabs(ket_norm(Ket(dim))));
    bool ok = ket_in_null_cone(unit_e1 * phi0, cfg.tol) &&
              !ket_in_null_cone(phi0, cfg.tol) &&
              !ket_in_null_cone(unit_e1 * phi0 + unit_e2 * Ket::basis(dim, 3),
                                cfg.tol) &&
              !ket_in_null_cone(Ket(dim), cfg.tol);
    if (!ok) worst = 1.0;
    s.add_rel("fock.norm_and_null_cone", worst);
  }

  return s.take();
}

std::vector<CheckResult> verify_oscillator(const VerifyConfig& cfg) {
  Suite s(cfg);
  const auto& p = cfg.params;
  const std::size_t n_max = cfg.trunc;
  const std::size_t dim = n_max + 1;
  const auto [a, a_star] = build_ladder(n_max, p);
  const BiOperator h = build_hamiltonian(n_max, p);
  const auto [x, mom] = build_position_momentum(n_max, p);
  const double hw = p.hbar * p.omega;
  const BiOperator ident = BiOperator::identity(dim);

  auto block_worst = [&](const BiOperator& op) {
    // entries with both indices below the truncation boundary
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < dim; ++i)
      for (std::size_t j = 0; j + 1 < dim; ++j)
        worst = std::max(worst, modulus(op.entry(i, j)));
    return worst;
  };

  {
    const BiOperator xi_i = to_bicomplex(p.xi) * ident;
    double worst = block_worst(commutator(a, a_star) - xi_i);
    worst = std::max(worst, block_worst(commutator(h, a) +
                                        (hw * to_bicomplex(p.xi)) * a));
    worst = std::max(worst, block_worst(commutator(h, a_star) -
                                        (hw * to_bicomplex(p.xi)) * a_star));
    const double scale = std::max(1.0, max_entry_modulus(h));
    s.add_rel("oscillator.ladder_commutators_block", worst / scale);
  }

  {
    // the second form hbar*w*(AA* - xi/2) agrees with H away from the
    // truncation row (AA* reaches past level N and corrupts it there)
    const BiOperator h_second =
        BiComplex::from_real(hw) *
        (a * a_star - to_bicomplex(0.5 * p.xi) * ident);
    const double scale = std::max(1.0, max_entry_modulus(h));
    s.add_rel("oscillator.hamiltonian_second_form_block",
              block_worst(h - h_second) / scale);
  }

  {
    // self-adjointness of X and P forces xi = dagger(xi): extract xi
    // from (psi, [X,P] psi) on random kets supported below the boundary
    Rng rng(301);
    const BiOperator xp = commutator(x, mom);
    double worst = 0.0;
    for (int it = 0; it < 50; ++it) {
      Ket psi = rng.ket(dim, 2.0);
      psi[n_max] = BiComplex{};  // stay clear of the truncation row
      if (ket_in_null_cone(psi, cfg.tol) || psi.is_zero()) continue;
      const BiComplex lhs = scalar_product(psi, xp * psi);
      const BiComplex xi_ext =
          lhs * inverse(BiComplex::from_complex(Complex{0.0, p.hbar}) *
                        scalar_product(psi, psi));
      worst = std::max(worst, rel_diff(xi_ext, conj_dagger(xi_ext)));
      worst = std::max(worst, rel_diff(xi_ext, to_bicomplex(p.xi)));
    }
    s.add_rel("oscillator.xi_forced_hyperbolic", worst);
  }

  {
    // |phi_{l+1}> = A* |phi_l> / sqrt((l+1) xi) regenerates the basis,
    // (phi_l, phi_l) stays 1, and A steps back down
    double worst = 0.0;
    Ket cur = Ket::basis(dim, 0);
    for (std::size_t l = 0; l + 1 < dim; ++l) {
      const BiComplex step =
          inverse(to_bicomplex(sqrt((l + 1.0) * p.xi)), cfg.tol);
      const Ket next = step * (a_star * cur);
      worst = std::max(worst, rel_diff(next, Ket::basis(dim, l + 1)));
      worst = std::max(
          worst, rel_diff(scalar_product(next, next), unit_one));
      worst = std::max(
          worst, rel_diff(a * next, to_bicomplex(sqrt((l + 1.0) * p.xi)) * cur));
      cur = next;
    }
    worst = std::max(worst, rel_diff(a * Ket::basis(dim, 0), Ket(dim)));
    s.add_rel("oscillator.ladder_recursion", worst);
  }

  {
    double worst = 0.0;
    for (std::size_t l = 0; l < dim; ++l) {
      const Ket phi = Ket::basis(dim, l);
      const BiComplex ev =
          to_bicomplex(hw * (l + 0.5) * p.xi);
      worst = std::max(worst, rel_diff(h * phi, ev * phi));
    }
    s.add_rel("oscillator.pure_spectrum", worst);
  }

  {
    Rng rng(302);
    double worst = 0.0;
    for (int it = 0; it < 60; ++it) {
      const int l = static_cast<int>(rng.uniform(0.0, double(n_max))) % n_max;
      const int lp = static_cast<int>(rng.uniform(0.0, double(n_max))) % n_max;
      const Complex w1 = rng.cplx(2.0);
      const Complex w2 = rng.cplx(2.0);
      if (w1 == 0.0 && w2 == 0.0) continue;
      const SpectrumEntry e = eigenket(l, lp, w1, w2, n_max, p);
      worst = std::max(
          worst, rel_diff(h * e.ket, to_bicomplex(e.energy) * e.ket));
    }
    // vanishing-coefficient branch: a null-cone eigenket still satisfies
    // H psi = lambda psi
    const SpectrumEntry nc = eigenket(1, 2, 1.0, 0.0, n_max, p);
    worst = std::max(worst,
                     rel_diff(h * nc.ket, to_bicomplex(nc.energy) * nc.ket));
    s.add_rel("oscillator.mixed_spectrum", worst);
  }

  {
    Rng rng(303);
    double worst = 0.0;
    for (std::size_t l = 0; l + 1 < dim; ++l) {
      const SpectrumEntry e = eigenket(int(l), int(l), 1.0, 1.0, n_max, p);
      const auto [ra, rastar] = lemma1_check(e.ket, e.energy, n_max, p);
      worst = std::max({worst, modulus(ra), modulus(rastar)});
    }
    for (int it = 0; it < 100; ++it) {
      const int l = static_cast<int>(rng.uniform(0.0, double(n_max))) % n_max;
      const int lp = static_cast<int>(rng.uniform(0.0, double(n_max))) % n_max;
      const double ph1 = rng.uniform(0.0, 2.0 * M_PI);
      const double ph2 = rng.uniform(0.0, 2.0 * M_PI);
      const SpectrumEntry e =
          eigenket(l, lp, std::polar(1.0, ph1), std::polar(1.0, ph2), n_max, p);
      const auto [ra, rastar] = lemma1_check(e.ket, e.energy, n_max, p);
      worst = std::max({worst, modulus(ra), modulus(rastar)});
    }
    const double scale = std::max(1.0, hw * (double(n_max) + 0.5) *
                                           std::max(p.xi.x1, p.xi.x2));
    s.add_rel("oscillator.lemma1", worst / scale);
  }

  {
    // eigenkets whose eigenvalue difference avoids the null cone are
    // orthogonal; the pair (e1 phi1 + e2 phi2, e1 phi1 + e2 phi3) has
    // eigenvalue difference in the cone and scalar product exactly e1
    double worst = 0.0;
    bool ok = true;
    for (int l = 0; l <= 4; ++l)
      for (int lp = 0; lp <= 4; ++lp)
        for (int m = 0; m <= 4; ++m)
          for (int mp = 0; mp <= 4; ++mp) {
            const SpectrumEntry e1 = eigenket(l, lp, 1.0, 1.0, n_max, p);
            const SpectrumEntry e2 = eigenket(m, mp, 1.0, 1.0, n_max, p);
            const BiComplex diff =
                to_bicomplex(e1.energy) - to_bicomplex(e2.energy);
            if (diff.is_zero() || is_null_cone(diff, cfg.tol)) continue;
            worst = std::max(
                worst, modulus(scalar_product(e1.ket, e2.ket)));
          }
    const Ket phi = unit_e1 * Ket::basis(dim, 1) + unit_e2 * Ket::basis(dim, 2);
    const Ket phi_prime =
        unit_e1 * Ket::basis(dim, 1) + unit_e2 * Ket::basis(dim, 3);
    const BiComplex sp = scalar_product(phi, phi_prime);
    if (modulus(sp - unit_e1) > kCounterexampleThr) ok = false;
    if (!is_null_cone(sp, cfg.tol)) ok = false;  // e1 itself sits in the cone
    if (!ok) worst = 1.0;
    s.add_rel("oscillator.orthogonality_null_cone", worst);
  }

  {
    bool ok = is_self_adjoint(x, cfg.tol) && is_self_adjoint(mom, cfg.tol) &&
              is_self_adjoint(h, cfg.tol) &&
              !is_self_adjoint(a, cfg.tol) &&
              !is_self_adjoint(BiComplex::from_complex(Complex{0, 1}) * ident,
                               cfg.tol);
    const BiOperator expected =
        (BiComplex::from_complex(Complex{0.0, p.hbar}) * to_bicomplex(p.xi)) *
        ident;
    const double worst = [&] {
      const BiOperator d = commutator(x, mom) - expected;
      double w = 0.0;
      for (std::size_t i = 0; i + 1 < dim; ++i)
        for (std::size_t j = 0; j + 1 < dim; ++j)
          w = std::max(w, modulus(d.entry(i, j)));
      return w / std::max(1.0, max_entry_modulus(expected));
    }();
    s.add_rel("oscillator.xp_commutator_block", ok ? worst : 1.0);
  }

  {
    Rng rng(304);
    double worst = 0.0;
    bool ok = true;
    worst = std::max(worst,
                     rel_diff(to_bicomplex(rescale_xi(p.xi, 1, 1, 1, 1)),
                              to_bicomplex(p.xi)));
    const double ratio0 = p.xi.x2 / p.xi.x1;
    for (int it = 0; it < 200; ++it) {
      const double al = rng.uniform(0.1, 3.0);
      const double be = rng.uniform(0.1, 3.0);
      const double s1 = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      const double s2 = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      const Hyperbolic xi2 = rescale_xi(p.xi, al, s1 * al, be, s2 * be);
      worst = std::max(worst, std::fabs(std::fabs(xi2.x2 / xi2.x1) - ratio0) /
                                  std::max(1.0, ratio0));
      // xi1' can always be brought to 1 with an admissible positive pair
      const Hyperbolic norm1 = rescale_xi(p.xi, p.xi.x1, p.xi.x1, 1.0, 1.0);
      worst = std::max(worst, std::fabs(norm1.x1 - 1.0));
    }
    const Hyperbolic flipped = rescale_xi({2.0, 3.0}, 1.0, -1.0, 1.0, 1.0);
    if (!(flipped == Hyperbolic{2.0, -3.0})) ok = false;
    if (in_d_plus(flipped, true)) ok = false;  // must be flagged as leaving D+
    try {
      rescale_xi(p.xi, 1.0, 2.0, 1.0, 1.0);
      ok = false;
    } catch (const ConstraintViolated&) {
    }
    try {
      rescale_xi(p.xi, 0.0, 1.0, 1.0, 1.0);
      ok = false;
    } catch (const ZeroScale&) {
    }
    s.add_rel("oscillator.rescale_xi", ok ? worst : 1.0);
  }

  {
    // section assumptions (a)-(f), one executable probe each
    Rng rng(305);
    bool ok = true;

    // (a) H, X, P act linearly in the module
    const Ket psi = rng.ket(dim, 2.0);
    const Ket phi = rng.ket(dim, 2.0);
    const BiComplex sc = rng.bicomplex(2.0);
    const BiComplex tc = rng.bicomplex(2.0);
    if (rel_diff(h * (sc * psi + tc * phi),
                 sc * (h * psi) + tc * (h * phi)) > cfg.tol.rel_eps)
      ok = false;
    s.add_bool("oscillator.assumption_a_linearity", ok);

    // (b) X, P, H self-adjoint
    s.add_bool("oscillator.assumption_b_self_adjoint",
               is_self_adjoint(x, cfg.tol) && is_self_adjoint(mom, cfg.tol) &&
                   is_self_adjoint(h, cfg.tol));

    // (c) (psi, psi) in D+
    bool c_ok = true;
    for (int it = 0; it < 50; ++it) {
      const Ket k = rng.ket(dim, 2.0);
      const auto [z1, z2] = to_idempotent(scalar_product(k, k));
      if (z1.real() < 0.0 || z2.real() < 0.0) c_ok = false;
    }
    s.add_bool("oscillator.assumption_c_dplus_norm", c_ok);

    // (d) [X, P] = i1 hbar xi I away from the truncation row, xi not in
    // the null cone
    const BiOperator expected =
        (BiComplex::from_complex(Complex{0.0, p.hbar}) * to_bicomplex(p.xi)) *
        ident;
    double d_worst = 0.0;
    const BiOperator dmat = commutator(x, mom) - expected;
    for (std::size_t i = 0; i + 1 < dim; ++i)
      for (std::size_t j = 0; j + 1 < dim; ++j)
        d_worst = std::max(d_worst, modulus(dmat.entry(i, j)));
    s.add_bool("oscillator.assumption_d_commutator",
               d_worst / std::max(1.0, max_entry_modulus(expected)) <=
                       cfg.tol.rel_eps &&
                   !is_null_cone(to_bicomplex(p.xi), cfg.tol));

    // (e) a normalizable non-null-cone eigenket exists: phi_0
    const Ket phi0 = Ket::basis(dim, 0);
    s.add_bool("oscillator.assumption_e_seed_eigenket",
               !ket_in_null_cone(phi0, cfg.tol) &&
                   std::fabs(ket_norm(phi0) - 1.0) <= cfg.tol.rel_eps &&
                   rel_diff(h * phi0, to_bicomplex(0.5 * hw * p.xi) * phi0) <=
                       cfg.tol.rel_eps);

    // (f) orthogonality given non-null-cone eigenvalue difference
    bool f_ok = true;
    for (int l = 0; l <= 3; ++l)
      for (int m = 0; m <= 3; ++m) {
        if (l == m) continue;
        const SpectrumEntry el = eigenket(l, l, 1.0, 1.0, n_max, p);
        const SpectrumEntry em = eigenket(m, m, 1.0, 1.0, n_max, p);
        const BiComplex diff =
            to_bicomplex(el.energy) - to_bicomplex(em.energy);
        if (is_null_cone(diff, cfg.tol)) continue;
        if (modulus(scalar_product(el.ket, em.ket)) > cfg.tol.rel_eps)
          f_ok = false;
      }
    s.add_bool("oscillator.assumption_f_orthogonality", f_ok);
  }

  return s.take();
}

std::vector<CheckResult> verify_wavefn(const VerifyConfig& cfg) {
  Suite s(cfg);
  const auto& p = cfg.params;

  auto random_ms = [&](Rng& rng) {
    std::vector<MsTerm> t1, t2;
    for (int i = 0; i < 4; ++i) {
      t1.push_back({static_cast<int>(rng.uniform(0.0, 5.0)),
                    rng.uniform(0.3, 2.5), rng.cplx(2.0)});
      t2.push_back({static_cast<int>(rng.uniform(0.0, 5.0)),
                    rng.uniform(0.3, 2.5), rng.cplx(2.0)});
    }
    return MsFunction{std::move(t1), std::move(t2)};
  };

  {
    Rng rng(401);
    double worst = 0.0;
    for (int it = 0; it < 100; ++it) {
      const MsFunction u = random_ms(rng);
      const MsFunction v = random_ms(rng);
      const MsFunction pu = apply_P(u, p);
      const MsFunction pv = apply_P(v, p);
      worst = std::max(worst,
                       rel_diff(ms_scalar_product(pu, v),
                                ms_scalar_product(u, pv)));
      worst = std::max(worst,
                       rel_diff(ms_scalar_product(apply_X(u), v),
                                ms_scalar_product(u, apply_X(v))));
    }
    s.add_rel("wavefn.xp_self_adjoint", worst);
  }

  {
    // [X, P] f_{n,alpha} = i1 hbar xi f_{n,alpha}, coefficient-exact
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
      for (const double alpha : {0.5, 1.0, 2.0}) {
        const MsFunction f{{{n, alpha, 1.0}}, {{n, alpha, 1.0}}};
        const MsFunction lhs = apply_X(apply_P(f, p)) - apply_P(apply_X(f), p);
        const MsFunction expected =
            BiComplex::from_complex(Complex{0.0, p.hbar}) *
            (to_bicomplex(p.xi) * f);
        const MsFunction diff = lhs - expected;
        worst = std::max(worst, diff.max_coeff_modulus() /
                                    std::max(1.0, expected.max_coeff_modulus()));
      }
    s.add("wavefn.xp_commutator_termwise", worst, kXpCommutatorThr);
  }

  {
    double worst = 0.0;
    for (int l = 0; l <= 10; ++l)
      for (int m = 0; m <= 10; ++m) {
        const BiComplex sp = ms_scalar_product(phi_l(l, p), phi_l(m, p));
        const BiComplex want = l == m ? unit_one : BiComplex{};
        worst = std::max(worst, modulus(sp - want));
      }
    s.add("wavefn.orthonormality", worst, kOrthonormalityThr);
  }

  {
    // each idempotent component solves the standard oscillator ODE with
    // hbar -> hbar xi_k
    double worst = 0.0;
    for (int l = 0; l <= 6; ++l) {
      const MsFunction u = phi_l(l, p);
      const MsFunction hu = hamiltonian_apply(u, p);
      const Hyperbolic energy = p.hbar * p.omega * (l + 0.5) * p.xi;
      const MsFunction res = hu - to_bicomplex(energy) * u;
      for (int k = 1; k <= 2; ++k)
        for (const MsTerm& t : res.component(k))
          worst = std::max(worst, std::abs(t.c));
    }
    s.add("wavefn.component_separation", worst, kOdeResidualThr);
  }

  {
    // single-formula evaluation (hyperbolic constants all the way)
    // against the assembled component form, on a grid covering the
    // Gaussian support of both components
    double worst = 0.0;
    const double spread =
        std::sqrt(p.hbar * std::max(p.xi.x1, p.xi.x2) / (p.mass * p.omega));
    for (int l = 0; l <= 8; ++l) {
      const MsFunction assembled = phi_l(l, p);
      double pow2l_lfact = 1.0;
      for (int k = 1; k <= l; ++k) pow2l_lfact *= 2.0 * k;
      const Hyperbolic norm =
          (std::pow(p.mass * p.omega / (M_PI * p.hbar), 0.25) /
           std::sqrt(pow2l_lfact)) *
          inv_nth_root(p.xi, 4);
      for (int i = 0; i <= 200; ++i) {
        const double x = (-6.0 + 12.0 * i / 200.0) * spread;
        const Hyperbolic theta = theta_of_x(x, p);
        const Hyperbolic direct = norm * exp(-0.5 * (theta * theta)) *
                                  hermite_hyperbolic_eval(l, theta);
        worst = std::max(worst,
                         modulus(assembled(x) - to_bicomplex(direct)));
      }
    }
    s.add("wavefn.single_formula_factorization", worst, kFactorizationThr);
  }

  {
    // (mw / pi hbar xi)^{1/4} through the D+ calculus against the
    // componentwise route
    const double base = p.mass * p.omega / (M_PI * p.hbar);
    const Hyperbolic via_dplus =
        std::pow(base, 0.25) * inv_nth_root(p.xi, 4);
    const Hyperbolic componentwise{std::pow(base / p.xi.x1, 0.25),
                                   std::pow(base / p.xi.x2, 0.25)};
    s.add_rel("wavefn.dplus_normalization",
              rel_diff(to_bicomplex(via_dplus), to_bicomplex(componentwise)));
  }

  {
    double worst = 0.0;
    bool ok = true;
    const std::vector<std::vector<double>> table{
        {1}, {0, 2}, {-2, 0, 4}, {0, -12, 0, 8}, {12, 0, -48, 0, 16}};
    for (std::size_t l = 0; l < table.size(); ++l) {
      const HermitePoly hp = hermite_coeffs(static_cast<int>(l));
      if (hp.coeffs.size() != table[l].size()) ok = false;
      for (std::size_t q = 0; ok && q < table[l].size(); ++q)
        if (hp.coeffs[q].convert_to<double>() != table[l][q]) ok = false;
    }
    // componentwise lift equals the core polynomial route, and the
    // theta_1 = theta_2 diagonal collapses to the real polynomial
    Rng rng(402);
    for (int it = 0; it < 50; ++it) {
      const int l = static_cast<int>(rng.uniform(0.0, 10.0));
      const Hyperbolic theta{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
      const HermitePoly hp = hermite_coeffs(l);
      std::vector<Complex> coeffs(hp.coeffs.size());
      for (std::size_t q = 0; q < coeffs.size(); ++q)
        coeffs[q] = hp.coeffs[q].convert_to<double>();
      worst = std::max(
          worst, rel_diff(to_bicomplex(hermite_hyperbolic_eval(l, theta)),
                          poly_eval(coeffs, to_bicomplex(theta))));
      const double t = rng.uniform(-3.0, 3.0);
      const Hyperbolic diag = hermite_hyperbolic_eval(l, {t, t});
      worst = std::max(worst, std::fabs(diag.x1 - diag.x2) /
                                  std::max(1.0, std::fabs(diag.x1)));
      worst = std::max(worst, std::fabs(diag.x1 - hp.eval(t)) /
                                  std::max(1.0, std::fabs(diag.x1)));
    }
    s.add_rel("wavefn.hermite_recurrence_and_lift", ok ? worst : 1.0);
  }

  {
    double worst = 0.0;
    bool ok = true;
    for (int l = 0; l <= 10; ++l)
      worst = std::max(worst, hamiltonian_residual(l, p));
    // negative control: shifting E by hbar*w*xi must leave a residual
    const MsFunction u = phi_l(3, p);
    const Hyperbolic wrong = p.hbar * p.omega * (3 + 1.5) * p.xi;
    const MsFunction bad = hamiltonian_apply(u, p) - to_bicomplex(wrong) * u;
    if (bad.max_coeff_modulus() < 0.1 * u.max_coeff_modulus()) ok = false;
    s.add("wavefn.hamiltonian_residual", ok ? worst : 1.0, kOdeResidualThr);
  }

  {
    double worst = 0.0;
    const MsFunction mixed = phi_mixed(1, 2, 1.0, 1.0, p);
    worst = std::max(worst,
                     modulus(ms_scalar_product(mixed, mixed) - unit_one));
    const MsFunction other = phi_mixed(1, 3, 1.0, 1.0, p);
    worst = std::max(worst,
                     modulus(ms_scalar_product(mixed, other) - unit_e1));
    worst = std::max(
        worst, modulus(ms_scalar_product(phi_mixed(2, 2, 1.0, 1.0, p),
                                         phi_l(2, p)) -
                       unit_one));
    s.add("wavefn.mixed_normalization_null_cone", worst, kOrthonormalityThr);
  }

  {
    Rng rng(403);
    double worst = 0.0;
    const MsFunction u = phi_mixed(1, 2, 1.0, 1.0, p);
    for (int it = 0; it < 50; ++it) {
      const double xv = rng.uniform(-3.0, 3.0);
      const auto [re, jp] = to_unit_j_form(u, xv);
      const BiComplex recombined =
          BiComplex::from_complex(re) + unit_j * BiComplex::from_complex(jp);
      worst = std::max(worst, rel_diff(recombined, u(xv)));
      const Complex u1 = u.eval_component(1, xv);
      const Complex u2 = u.eval_component(2, xv);
      worst = std::max({worst, std::abs(re - 0.5 * (u1 + u2)),
                        std::abs(jp - 0.5 * (u1 - u2))});
    }
    // an e1-only function has real part = j part = u1/2
    const MsFunction lop = unit_e1 * phi_l(0, p);
    const auto [re0, jp0] = to_unit_j_form(lop, 0.7);
    worst = std::max(worst, std::abs(re0 - jp0));
    s.add_rel("wavefn.unit_j_form", worst);
  }

  return s.take();
}

std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> r) {
    out.insert(out.end(), std::make_move_iterator(r.begin()),
               std::make_move_iterator(r.end()));
  };
  if (suite == "core" || suite == "all") append(verify_core(cfg));
  if (suite == "fock" || suite == "all") append(verify_fock(cfg));
  if (suite == "oscillator" || suite == "all") append(verify_oscillator(cfg));
  if (suite == "wavefn" || suite == "all") append(verify_wavefn(cfg));
  if (out.empty()) throw Error("unknown verify suite: " + suite);
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "%s  %-45s worst=%.3e thr=%.3e\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                  r.threshold);
    os << line;
    if (r.pass) ++passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace bcqho
