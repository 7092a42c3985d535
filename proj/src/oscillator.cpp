#include "bcqho/oscillator.hpp"

#include <cmath>
#include <sstream>

#include "bcqho/format.hpp"

namespace bcqho {

void validate(const OscillatorParams& p) {
  if (!(p.mass > 0.0) || !(p.omega > 0.0) || !(p.hbar > 0.0))
    throw InvalidParams("mass, omega and hbar must be positive");
  if (!in_d_plus(p.xi, /*strict=*/true))
    throw InvalidParams("xi must have strictly positive components");
}

std::pair<BiOperator, BiOperator> build_ladder(std::size_t trunc,
                                               const OscillatorParams& p) {
  validate(p);
  if (trunc < 1) throw InvalidParams("truncation must be >= 1");
  const std::size_t dim = trunc + 1;
  BiOperator a(dim);
  for (std::size_t l = 0; l + 1 < dim; ++l) {
    const Hyperbolic step = sqrt(static_cast<double>(l + 1) * p.xi);
    a.set_entry(l, l + 1, to_bicomplex(step));
  }
  return {a, adjoint(a)};
}

BiOperator build_hamiltonian(std::size_t trunc, const OscillatorParams& p) {
  const auto [a, a_star] = build_ladder(trunc, p);
  const BiOperator num = a_star * a;
  const BiComplex half_xi = to_bicomplex(0.5 * p.xi);
  const BiComplex hw = BiComplex::from_real(p.hbar * p.omega);
  return hw * (num + half_xi * BiOperator::identity(trunc + 1));
}

std::pair<BiOperator, BiOperator> build_position_momentum(
    std::size_t trunc, const OscillatorParams& p) {
  const auto [a, a_star] = build_ladder(trunc, p);
  const double cx = std::sqrt(p.hbar / (2.0 * p.mass * p.omega));
  const double cp = std::sqrt(p.hbar * p.mass * p.omega / 2.0);
  const BiOperator x = (cx * unit_one) * (a + a_star);
  const BiOperator mom =
      BiComplex::from_complex(Complex{0.0, -cp}) * (a - a_star);
  return {x, mom};
}

SpectrumEntry eigenket(int l, int lprime, Complex w1, Complex w2,
                       std::size_t trunc, const OscillatorParams& p) {
  validate(p);
  if (l < 0 || lprime < 0 || static_cast<std::size_t>(l) > trunc ||
      static_cast<std::size_t>(lprime) > trunc)
    throw IndexOutOfRange("eigenket: level index outside truncation");
  if (w1 == 0.0 && w2 == 0.0)
    throw BothZeroError("eigenket: w1 and w2 both zero");

  Ket ket(trunc + 1);
  ket[static_cast<std::size_t>(l)] += BiComplex::from_complex(w1) * unit_e1;
  ket[static_cast<std::size_t>(lprime)] +=
      BiComplex::from_complex(w2) * unit_e2;

  SpectrumEntry entry;
  entry.l = l;
  entry.lprime = lprime;
  entry.energy = p.hbar * p.omega *
                 Hyperbolic{(l + 0.5) * p.xi.x1, (lprime + 0.5) * p.xi.x2};
  entry.ket = std::move(ket);
  return entry;
}

std::vector<SpectrumEntry> enumerate_spectrum(int max_l, int max_lprime,
                                              std::size_t trunc,
                                              const OscillatorParams& p) {
  std::vector<SpectrumEntry> out;
  out.reserve(static_cast<std::size_t>(max_l + 1) *
              static_cast<std::size_t>(max_lprime + 1));
  for (int l = 0; l <= max_l; ++l)
    for (int lp = 0; lp <= max_lprime; ++lp)
      out.push_back(eigenket(l, lp, 1.0, 1.0, trunc, p));
  return out;
}

std::pair<BiComplex, BiComplex> lemma1_check(const Ket& phi, Hyperbolic lambda,
                                             std::size_t trunc,
                                             const OscillatorParams& p) {
  if (phi.dim() != trunc + 1)
    throw DimensionMismatch("lemma1_check: ket dimension vs truncation");
  const auto [a, a_star] = build_ladder(trunc, p);
  const BiComplex sp = scalar_product(phi, phi);
  const double hw = p.hbar * p.omega;
  const Ket down = a * phi;
  const Ket up = a_star * phi;
  const BiComplex res_a =
      scalar_product(down, down) -
      to_bicomplex(lambda / hw - 0.5 * p.xi) * sp;
  const BiComplex res_astar =
      scalar_product(up, up) - to_bicomplex(lambda / hw + 0.5 * p.xi) * sp;
  return {res_a, res_astar};
}

Hyperbolic rescale_xi(Hyperbolic xi, double alpha1, double alpha2,
                      double beta1, double beta2) {
  if (alpha1 == 0.0 || alpha2 == 0.0 || beta1 == 0.0 || beta2 == 0.0)
    throw ZeroScale("rescale_xi: zero scale factor");
  if (std::fabs(alpha1) != std::fabs(alpha2))
    throw ConstraintViolated("rescale_xi: |alpha1| != |alpha2|");
  if (std::fabs(beta1) != std::fabs(beta2))
    throw ConstraintViolated("rescale_xi: |beta1| != |beta2|");
  return {xi.x1 / (alpha1 * beta1), xi.x2 / (alpha2 * beta2)};
}

std::string spectrum_csv(const std::vector<SpectrumEntry>& entries) {
  std::ostringstream os;
  os << "l,lprime,E1,E2\n";
  for (const auto& e : entries)
    os << e.l << ',' << e.lprime << ',' << format_double(e.energy.x1) << ','
       << format_double(e.energy.x2) << '\n';
  return os.str();
}

}  // namespace bcqho
