// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: bcqho_acceptance <path-to-cli-binary>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "bcqho/json_io.hpp"
#include "bcqho/verify.hpp"
#include "bcqho/wavefn.hpp"
#include "support/quadrature.hpp"

using namespace bcqho;

namespace {

int g_failures = 0;

void report(int index, const std::string& what, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] %2d. %s%s%s\n", pass ? "PASS" : "FAIL", index,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

double hermite_value(int l, double y) {
  double prev = 1.0, cur = 2.0 * y;
  if (l == 0) return prev;
  for (int k = 1; k < l; ++k) {
    const double next = 2.0 * y * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

OscillatorParams params(double xi1, double xi2) {
  OscillatorParams p;
  p.xi = {xi1, xi2};
  return p;
}

const Hyperbolic kXiSettings[] = {{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}};

// 1. ring identities, exactly
void criterion_ring_identities() {
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
  report(1, "ring identities exact (idempotents and unit table)", worst == 0.0,
         "worst=" + fmt(worst));
}

// 2. modulus bounds over 1e5 random pairs, equality case tight
void criterion_modulus_bounds() {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  auto draw = [&] {
    return BiComplex{dist(gen), dist(gen), dist(gen), dist(gen)};
  };
  double worst = 0.0;
  for (int it = 0; it < 100000; ++it) {
    const BiComplex s = draw();
    const BiComplex t = draw();
    const double tri =
        (modulus(s + t) - (modulus(s) + modulus(t))) /
        std::max(1.0, modulus(s) + modulus(t));
    const double sub =
        (modulus(s * t) - std::sqrt(2.0) * modulus(s) * modulus(t)) /
        std::max(1.0, modulus(s) * modulus(t));
    worst = std::max({worst, tri, sub});
  }
  const double gap = std::fabs(
      modulus(unit_e1 * unit_e1) -
      std::sqrt(2.0) * modulus(unit_e1) * modulus(unit_e1));
  const bool pass = worst <= 1e-12 && gap <= 1e-15;
  report(2, "modulus bounds on 1e5 random pairs, sqrt(2) bound tight at e1",
         pass, "worst=" + fmt(worst) + " equality_gap=" + fmt(gap));
}

// 3. truncated ladder algebra at N=32, xi=(1,2)
void criterion_ladder_algebra() {
  const std::size_t n_max = 32;
  const auto p = params(1.0, 2.0);
  const auto [a, a_star] = build_ladder(n_max, p);
  const BiOperator h = build_hamiltonian(n_max, p);
  const BiComplex xi = to_bicomplex(p.xi);
  const BiOperator c1 =
      commutator(a, a_star) - xi * BiOperator::identity(n_max + 1);
  const BiOperator c2 = commutator(h, a) + xi * a;
  const BiOperator c3 = commutator(h, a_star) - xi * a_star;
  double worst = 0.0;
  for (std::size_t i = 0; i <= 30; ++i)
    for (std::size_t j = 0; j <= 30; ++j)
      worst = std::max({worst, modulus(c1.entry(i, j)),
                        modulus(c2.entry(i, j)), modulus(c3.entry(i, j))});
  report(3, "ladder commutators vanish entrywise on the l<=30 block",
         worst < 1e-12, "worst=" + fmt(worst));
}

// 4. spectrum on pure and mixed eigenkets
void criterion_spectrum() {
  const std::size_t n_max = 32;
  const auto p = params(1.0, 2.0);
  const BiOperator h = build_hamiltonian(n_max, p);
  double worst = 0.0;
  for (int l = 0; l <= 32; ++l) {
    const Ket phi = Ket::basis(n_max + 1, std::size_t(l));
    const Ket res =
        h * phi - to_bicomplex(p.hbar * p.omega * (l + 0.5) * p.xi) * phi;
    for (std::size_t q = 0; q <= n_max; ++q)
      worst = std::max(worst, modulus(res[q]));
  }
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  for (int l = 0; l <= 32; ++l)
    for (int lp = 0; lp <= 32; ++lp) {
      const SpectrumEntry e =
          eigenket(l, lp, std::polar(1.0, phase(gen)),
                   std::polar(1.0, phase(gen)), n_max, p);
      const Ket res = h * e.ket - to_bicomplex(e.energy) * e.ket;
      for (std::size_t q = 0; q <= n_max; ++q)
        worst = std::max(worst, modulus(res[q]));
    }
  report(4, "H eigenvalues (l+1/2)hw xi on pure and mixed eigenkets",
         worst < 1e-12, "worst=" + fmt(worst));
}

// 5. lemma 1 residuals across the xi settings
void criterion_lemma1() {
  double worst = 0.0;
  for (const Hyperbolic xi : kXiSettings) {
    const auto p = params(xi.x1, xi.x2);
    const std::size_t n_max = 32;
    for (int l = 0; l + 1 <= int(n_max); ++l) {
      const SpectrumEntry e = eigenket(l, l, 1.0, 1.0, n_max, p);
      const auto [ra, rastar] = lemma1_check(e.ket, e.energy, n_max, p);
      worst = std::max({worst, modulus(ra), modulus(rastar)});
    }
    // the A-side residual survives at the truncation boundary too
    const SpectrumEntry top =
        eigenket(int(n_max), int(n_max), 1.0, 1.0, n_max, p);
    const auto [ra_top, rastar_top] =
        lemma1_check(top.ket, top.energy, n_max, p);
    worst = std::max(worst, modulus(ra_top));
    (void)rastar_top;
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> level(0, int(n_max) - 1);
    for (int it = 0; it < 100; ++it) {
      const SpectrumEntry e =
          eigenket(level(gen), level(gen), std::polar(1.0, phase(gen)),
                   std::polar(1.0, phase(gen)), n_max, p);
      const auto [ra, rastar] = lemma1_check(e.ket, e.energy, n_max, p);
      worst = std::max({worst, modulus(ra), modulus(rastar)});
    }
  }
  report(5, "lemma 1 residuals on pure and 100 random mixed eigenkets",
         worst < 1e-12, "worst=" + fmt(worst));
}

// 6. non-orthogonal null-cone pair
void criterion_null_cone_counterexample() {
  const std::size_t dim = 33;
  const Ket phi = unit_e1 * Ket::basis(dim, 1) + unit_e2 * Ket::basis(dim, 2);
  const Ket phi_prime =
      unit_e1 * Ket::basis(dim, 1) + unit_e2 * Ket::basis(dim, 3);
  const BiComplex sp = scalar_product(phi, phi_prime);
  const double worst = std::max(
      {std::fabs(sp.e() - 0.5), std::fabs(sp.i1()), std::fabs(sp.i2()),
       std::fabs(sp.j() - 0.5)});
  report(6, "null-cone counterexample scalar product equals e1",
         worst < 1e-14, "worst=" + fmt(worst));
}

// 7. wavefunction orthonormality, analytic and by quadrature
void criterion_wavefn_orthonormality() {
  const auto p = params(1.0, 2.0);
  double worst = 0.0, worst_qdr = 0.0;
  for (int l = 0; l <= 10; ++l)
    for (int m = 0; m <= 10; ++m) {
      const BiComplex analytic = ms_scalar_product(phi_l(l, p), phi_l(m, p));
      const BiComplex want = l == m ? unit_one : BiComplex{};
      worst = std::max(worst, modulus(analytic - want));
      const BiComplex numeric =
          testing::quadrature_scalar_product(phi_l(l, p), phi_l(m, p));
      worst_qdr = std::max(worst_qdr, modulus(analytic - numeric));
    }
  report(7, "orthonormality of phi_l (analytic, quadrature oracle agrees)",
         worst < 1e-10 && worst_qdr < 1e-9,
         "worst=" + fmt(worst) + " quadrature_gap=" + fmt(worst_qdr));
}

// 8. ODE residuals with a shifted-energy negative control
void criterion_ode_residual() {
  double worst = 0.0;
  bool control_ok = true;
  for (const Hyperbolic xi : kXiSettings) {
    const auto p = params(xi.x1, xi.x2);
    for (int l = 0; l <= 10; ++l)
      worst = std::max(worst, hamiltonian_residual(l, p));
    const MsFunction u = phi_l(5, p);
    const Hyperbolic wrong =
        p.hbar * p.omega * (5 + 0.5) * p.xi + p.hbar * p.omega * p.xi;
    const MsFunction res = hamiltonian_apply(u, p) - to_bicomplex(wrong) * u;
    if (res.max_coeff_modulus() <= 1e-2) control_ok = false;
  }
  report(8, "eigenvalue-equation residuals < 1e-10, negative control > 1e-2",
         worst < 1e-10 && control_ok, "worst=" + fmt(worst));
}

// 9. commutator on M_S, termwise
void criterion_ms_commutator() {
  double worst = 0.0;
  for (const Hyperbolic xi : kXiSettings) {
    const auto p = params(xi.x1, xi.x2);
    for (int n = 0; n <= 20; ++n)
      for (const double alpha : {0.5, 1.0, 2.0}) {
        const MsFunction f{{{n, alpha, 1.0}}, {{n, alpha, 1.0}}};
        const MsFunction lhs = apply_X(apply_P(f, p)) - apply_P(apply_X(f), p);
        const MsFunction want = (unit_i1 * to_bicomplex(p.hbar * p.xi)) * f;
        const MsFunction res = lhs - want;
        worst = std::max(worst, res.max_coeff_modulus() /
                                    std::max(1.0, want.max_coeff_modulus()));
      }
  }
  report(9, "[X,P] f = i hbar xi f termwise for n <= 20, alpha grid",
         worst < 1e-13, "worst=" + fmt(worst));
}

// 10. standard quantum mechanics recovered at xi = (1,1)
void criterion_standard_recovery() {
  const auto p = params(1.0, 1.0);
  const std::size_t n_max = 16;
  double worst = 0.0;

  for (int l = 0; l <= int(n_max); ++l) {
    const SpectrumEntry e = eigenket(l, l, 1.0, 1.0, n_max, p);
    worst = std::max({worst, std::fabs(e.energy.x1 - (l + 0.5)),
                      std::fabs(e.energy.x2 - (l + 0.5))});
  }

  for (int l = 0; l <= 12; ++l)
    for (double t : {-1.7, -0.4, 0.0, 0.9, 2.1}) {
      const Hyperbolic v = hermite_hyperbolic_eval(l, {t, t});
      const double ref = hermite_value(l, t);
      const double scale = std::max(1.0, std::fabs(ref));
      worst = std::max({worst, std::fabs(v.x1 - ref) / scale,
                        std::fabs(v.x2 - ref) / scale});
    }

  // three embeddings: e1-only, e2-only, and diagonal l = l'
  for (int l = 0; l <= 10; ++l)
    for (int m = 0; m <= 10; ++m) {
      const BiComplex want_e1 = l == m ? unit_e1 : BiComplex{};
      const BiComplex want_e2 = l == m ? unit_e2 : BiComplex{};
      const BiComplex want_full = l == m ? unit_one : BiComplex{};
      const Ket el = unit_e1 * Ket::basis(n_max + 1, std::size_t(l));
      const Ket em = unit_e1 * Ket::basis(n_max + 1, std::size_t(m));
      worst = std::max(worst, modulus(scalar_product(el, em) - want_e1));
      const Ket fl = unit_e2 * Ket::basis(n_max + 1, std::size_t(l));
      const Ket fm = unit_e2 * Ket::basis(n_max + 1, std::size_t(m));
      worst = std::max(worst, modulus(scalar_product(fl, fm) - want_e2));
      const SpectrumEntry dl = eigenket(l, l, 1.0, 1.0, n_max, p);
      const SpectrumEntry dm = eigenket(m, m, 1.0, 1.0, n_max, p);
      worst = std::max(worst,
                       modulus(scalar_product(dl.ket, dm.ket) - want_full));
    }

  report(10, "standard QM recovered at xi=(1,1): energies, Hermite, embeddings",
         worst < 1e-12, "worst=" + fmt(worst));
}

// 11. byte-identical verify reports across runs (through the CLI)
void criterion_determinism(const std::string& cli_path) {
  namespace fs = std::filesystem;
  auto run_once = [&](const std::string& tag) {
    const fs::path out = fs::temp_directory_path() / ("bcqho_acc_" + tag);
    const std::string cmd = cli_path + " verify --suite all --out " +
                            out.string() + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(out);
    return std::pair<int, std::string>(
        WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str());
  };
  const auto [rc1, r1] = run_once("run1.txt");
  const auto [rc2, r2] = run_once("run2.txt");
  const bool pass = rc1 == 0 && rc2 == 0 && !r1.empty() && r1 == r2;
  report(11, "two verify --suite all runs produce byte-identical reports",
         pass);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: bcqho_acceptance <path-to-cli>\n";
    return 2;
  }

  criterion_ring_identities();
  criterion_modulus_bounds();
  criterion_ladder_algebra();
  criterion_spectrum();
  criterion_lemma1();
  criterion_null_cone_counterexample();
  criterion_wavefn_orthonormality();
  criterion_ode_residual();
  criterion_ms_commutator();
  criterion_standard_recovery();
  criterion_determinism(argv[1]);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
