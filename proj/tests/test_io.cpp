#include <doctest.h>

#include "bcqho/json_io.hpp"
#include "support/helpers.hpp"

using namespace bcqho;
using bcqho::testing::Rng;
using bcqho::testing::diff;

TEST_CASE("bicomplex JSON: both encodings parse back to the same value") {
  Rng rng(51);
  for (int it = 0; it < 300; ++it) {
    const BiComplex w = rng.bicomplex(10.0);
    // canonical round-trip is exact, idempotent within representation eps
    CHECK(bicomplex_from_json(bicomplex_to_json(w)) == w);
    CHECK(diff(bicomplex_from_json(bicomplex_to_json(w, JsonBasis::idempotent)),
               w) < 1e-14);
  }

  const Json canonical = {{"e", 0.5}, {"i1", 0.0}, {"i2", 0.0}, {"j", 0.5}};
  const Json idem = {{"z1", {1.0, 0.0}}, {"z2", {0.0, 0.0}}};
  CHECK(bicomplex_from_json(canonical) == unit_e1);
  CHECK(bicomplex_from_json(idem) == unit_e1);
}

TEST_CASE("ket and operator JSON carry a dimension header") {
  Rng rng(52);
  const Ket psi = rng.ket(6, 5.0);
  const Json j = ket_to_json(psi);
  CHECK(j.at("dim") == 6);
  CHECK(diff(ket_from_json(j), psi) == 0.0);

  const BiOperator a = rng.op(4, 5.0);
  const Json ja = operator_to_json(a, JsonBasis::idempotent);
  CHECK(ja.at("dim") == 4);
  CHECK(diff(operator_from_json(ja), a) < 1e-14);

  Json bad = j;
  bad["dim"] = 7;
  CHECK_THROWS_AS(ket_from_json(bad), DimensionMismatch);
}

TEST_CASE("spectrum records") {
  OscillatorParams p;
  p.xi = {1.0, 2.0};
  const auto entries = enumerate_spectrum(0, 1, 8, p);
  const Json arr = spectrum_json(entries);
  REQUIRE(arr.size() == 2);
  CHECK(arr[0].at("l") == 0);
  CHECK(arr[0].at("lprime") == 0);
  CHECK(arr[1].at("energy").at("x2") == doctest::Approx(3.0));
  CHECK(arr[0].at("norm") == doctest::Approx(1.0));
}
