#include <doctest.h>

#include "bcqho/hyperbolic.hpp"
#include "support/helpers.hpp"

using namespace bcqho;
using bcqho::testing::Rng;
using bcqho::testing::diff;

TEST_CASE("unit table and idempotent algebra are exact") {
  CHECK(unit_i1 * unit_i1 == -unit_one);
  CHECK(unit_i2 * unit_i2 == -unit_one);
  CHECK(unit_j * unit_j == unit_one);
  CHECK(unit_i1 * unit_i2 == unit_j);
  CHECK(unit_i1 * unit_j == -unit_i2);
  CHECK(unit_i2 * unit_j == -unit_i1);
  CHECK(unit_e1 * unit_e1 == unit_e1);
  CHECK(unit_e2 * unit_e2 == unit_e2);
  CHECK(unit_e1 + unit_e2 == unit_one);
  CHECK(unit_e1 * unit_e2 == BiComplex{});
}

TEST_CASE("idempotent components") {
  // z1 = (w_e + w_j) + (w_i1 - w_i2) i, z2 = (w_e - w_j) + (w_i1 + w_i2) i
  CHECK(unit_one.z1() == Complex{1.0, 0.0});
  CHECK(unit_one.z2() == Complex{1.0, 0.0});
  CHECK(unit_e1.z1() == Complex{1.0, 0.0});
  CHECK(unit_e1.z2() == Complex{0.0, 0.0});
  CHECK(unit_i1.z1() == Complex{0.0, 1.0});
  CHECK(unit_i1.z2() == Complex{0.0, 1.0});
  CHECK(unit_j.z1() == Complex{1.0, 0.0});
  CHECK(unit_j.z2() == Complex{-1.0, 0.0});

  Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    const BiComplex w = rng.bicomplex(10.0);
    const auto [z1, z2] = to_idempotent(w);
    CHECK(diff(BiComplex::from_idempotent(z1, z2), w) < 1e-14);
    // the product is componentwise in the idempotent view
    const BiComplex v = rng.bicomplex(10.0);
    const BiComplex prod = w * v;
    CHECK(std::abs(prod.z1() - w.z1() * v.z1()) < 1e-12);
    CHECK(std::abs(prod.z2() - w.z2() * v.z2()) < 1e-12);
  }
}

TEST_CASE("multiplication is commutative and associative with identity 1") {
  Rng rng(12);
  for (int it = 0; it < 500; ++it) {
    const BiComplex a = rng.bicomplex(5.0);
    const BiComplex b = rng.bicomplex(5.0);
    const BiComplex c = rng.bicomplex(5.0);
    CHECK(diff(a * b, b * a) < 1e-13);
    CHECK(diff((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(diff(a * unit_one, a) == 0.0);
  }
}

TEST_CASE("dagger conjugation") {
  CHECK(conj_dagger(unit_j) == unit_j);
  CHECK(conj_dagger(unit_i1) == -unit_i1);
  CHECK(conj_dagger(unit_i2) == -unit_i2);

  // w * dagger(w) lands in D+ (both idempotent components real >= 0)
  const BiComplex w = unit_one + unit_i1;
  const BiComplex d = w * conj_dagger(w);
  CHECK(d.z1().imag() == 0.0);
  CHECK(d.z2().imag() == 0.0);
  CHECK(d.z1().real() >= 0.0);
  CHECK(d.z2().real() >= 0.0);

  Rng rng(13);
  for (int it = 0; it < 500; ++it) {
    const BiComplex a = rng.bicomplex(10.0);
    const BiComplex b = rng.bicomplex(10.0);
    CHECK(diff(conj_dagger(a * b), conj_dagger(a) * conj_dagger(b)) < 1e-12);
    CHECK(diff(conj_dagger(conj_dagger(a)), a) == 0.0);
    CHECK(diff(conj_dagger(a + b), conj_dagger(a) + conj_dagger(b)) == 0.0);
    CHECK(in_d_plus(a * conj_dagger(a)));
  }

  CHECK(in_d_plus(unit_one, /*strict=*/true));
  CHECK(in_d_plus(unit_e1));
  CHECK_FALSE(in_d_plus(unit_e1, /*strict=*/true));
  CHECK_FALSE(in_d_plus(unit_i1));
  CHECK_FALSE(in_d_plus(-unit_one));
}

TEST_CASE("modulus values and bounds") {
  CHECK(modulus(unit_one) == 1.0);
  // four-component formula: |e1| = sqrt(1/4 + 1/4)
  CHECK(modulus(unit_e1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(modulus(unit_i1 + unit_i2) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(modulus(BiComplex{}) == 0.0);

  Rng rng(14);
  for (int it = 0; it < 2000; ++it) {
    const BiComplex a = rng.bicomplex(10.0);
    const BiComplex b = rng.bicomplex(10.0);
    CHECK(modulus(a + b) <= modulus(a) + modulus(b) + 1e-12);
    CHECK(modulus(a * b) <= std::sqrt(2.0) * modulus(a) * modulus(b) + 1e-12);
  }
  // s = t = e1 attains the sqrt(2) bound
  CHECK(modulus(unit_e1 * unit_e1) ==
        doctest::Approx(std::sqrt(2.0) * modulus(unit_e1) * modulus(unit_e1))
            .epsilon(1e-15));
}

TEST_CASE("null cone classification") {
  CHECK(is_null_cone(unit_e1));
  CHECK(is_null_cone(unit_e2));
  CHECK_FALSE(is_null_cone(unit_one));
  CHECK_FALSE(is_null_cone(BiComplex{}));  // zero is not a zero divisor
  CHECK(is_null_cone(unit_j - unit_one));  // j - 1 = -2 e2
  CHECK_FALSE(is_null_cone(unit_j));
}

TEST_CASE("inverse") {
  CHECK(diff(inverse(unit_one), unit_one) == 0.0);
  CHECK_THROWS_AS(inverse(unit_e1), NullConeError);
  CHECK_THROWS_AS(inverse(BiComplex{}), ZeroError);

  // componentwise reciprocal oracle: 2e1 + 4e2 -> e1/2 + e2/4
  const BiComplex w = 2.0 * unit_e1 + 4.0 * unit_e2;
  const BiComplex inv = inverse(w);
  CHECK(inv.z1() == Complex{0.5, 0.0});
  CHECK(inv.z2() == Complex{0.25, 0.0});
  CHECK(diff(w * inv, unit_one) < 1e-15);

  Rng rng(15);
  for (int it = 0; it < 500; ++it) {
    const BiComplex v = rng.bicomplex(10.0);
    if (v.is_zero() || is_null_cone(v)) continue;
    CHECK(diff(v * inverse(v), unit_one) < 1e-12);
  }
}

TEST_CASE("projectors are ring homomorphisms") {
  Rng rng(16);
  for (int it = 0; it < 500; ++it) {
    const BiComplex a = rng.bicomplex(10.0);
    const BiComplex b = rng.bicomplex(10.0);
    for (int k = 1; k <= 2; ++k) {
      CHECK(std::abs(project(a + b, k) - (project(a, k) + project(b, k))) <
            1e-13);
      CHECK(std::abs(project(a * b, k) - project(a, k) * project(b, k)) <
            1e-12);
    }
  }
}

TEST_CASE("hyperbolic numbers and the D+ whitelist") {
  const Hyperbolic h{4.0, 9.0};
  CHECK(sqrt(h) == Hyperbolic{2.0, 3.0});
  CHECK(exp(Hyperbolic{}) == Hyperbolic{1.0, 1.0});
  CHECK(diff(to_bicomplex(exp(Hyperbolic{})), unit_one) == 0.0);

  // 16^{-1/4} = 1/2
  CHECK(inv_nth_root(Hyperbolic{1.0, 16.0}, 4) == Hyperbolic{1.0, 0.5});

  CHECK_THROWS_AS(sqrt(Hyperbolic{-1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(inv_nth_root(Hyperbolic{0.0, 1.0}, 4), DomainError);
  CHECK_THROWS_AS(pow(Hyperbolic{-1.0, 1.0}, 0.5), DomainError);
  CHECK(pow(Hyperbolic{-2.0, 3.0}, 2.0) == Hyperbolic{4.0, 9.0});

  // sqrt stays defined on the boundary of the cone (null-cone norms)
  CHECK(sqrt(Hyperbolic{1.0, 0.0}) == Hyperbolic{1.0, 0.0});

  // hyperbolic embedding is closed under + and *
  Rng rng(17);
  for (int it = 0; it < 200; ++it) {
    const Hyperbolic a{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    const Hyperbolic b{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    CHECK(diff(to_bicomplex(a) * to_bicomplex(b), to_bicomplex(a * b)) <
          1e-13);
    CHECK(diff(to_bicomplex(a) + to_bicomplex(b), to_bicomplex(a + b)) <
          1e-14);
    const Hyperbolic g{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    CHECK(diff(to_bicomplex(exp(a) * exp(g)), to_bicomplex(exp(a + g))) <
          1e-10 * modulus(to_bicomplex(exp(a + g))) + 1e-13);
  }
}

TEST_CASE("polynomial evaluation splits componentwise") {
  // Q(w) = w^2 at w = j gives 1
  const std::vector<Complex> square{0.0, 0.0, 1.0};
  CHECK(diff(poly_eval(square, unit_j), unit_one) == 0.0);

  // Q(w) = w^2 - 1 at e1: Q(1) e1 + Q(0) e2 = -e2
  const std::vector<Complex> square_m1{-1.0, 0.0, 1.0};
  CHECK(diff(poly_eval(square_m1, unit_e1), -unit_e2) == 0.0);

  Rng rng(18);
  for (int it = 0; it < 200; ++it) {
    std::vector<Complex> coeffs(4);
    for (auto& c : coeffs) c = rng.cplx(2.0);
    const BiComplex w = rng.bicomplex(2.0);
    BiComplex horner{};
    for (auto it2 = coeffs.rbegin(); it2 != coeffs.rend(); ++it2)
      horner = horner * w + BiComplex::from_complex(*it2);
    CHECK(diff(poly_eval(coeffs, w), horner) < 1e-12);
  }
}
