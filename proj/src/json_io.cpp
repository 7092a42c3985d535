#include "bcqho/json_io.hpp"

namespace bcqho {

Json bicomplex_to_json(BiComplex w, JsonBasis basis) {
  if (basis == JsonBasis::canonical)
    return Json{{"e", w.e()}, {"i1", w.i1()}, {"i2", w.i2()}, {"j", w.j()}};
  return Json{{"z1", {w.z1().real(), w.z1().imag()}},
              {"z2", {w.z2().real(), w.z2().imag()}}};
}

BiComplex bicomplex_from_json(const Json& j) {
  if (j.contains("z1")) {
    const auto& z1 = j.at("z1");
    const auto& z2 = j.at("z2");
    return BiComplex::from_idempotent(
        Complex{z1.at(0).get<double>(), z1.at(1).get<double>()},
        Complex{z2.at(0).get<double>(), z2.at(1).get<double>()});
  }
  return {j.at("e").get<double>(), j.at("i1").get<double>(),
          j.at("i2").get<double>(), j.at("j").get<double>()};
}

Json ket_to_json(const Ket& psi, JsonBasis basis) {
  Json coords = Json::array();
  for (std::size_t l = 0; l < psi.dim(); ++l)
    coords.push_back(bicomplex_to_json(psi[l], basis));
  return Json{{"dim", psi.dim()}, {"coords", std::move(coords)}};
}

Ket ket_from_json(const Json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& coords = j.at("coords");
  if (coords.size() != dim)
    throw DimensionMismatch("ket JSON: dim header vs coords length");
  Ket psi(dim);
  for (std::size_t l = 0; l < dim; ++l)
    psi[l] = bicomplex_from_json(coords.at(l));
  return psi;
}

Json operator_to_json(const BiOperator& a, JsonBasis basis) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k)
      row.push_back(bicomplex_to_json(a.entry(i, k), basis));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", a.dim()}, {"entries", std::move(rows)}};
}

BiOperator operator_from_json(const Json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (rows.size() != dim)
    throw DimensionMismatch("operator JSON: dim header vs row count");
  BiOperator a(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows.at(i).size() != dim)
      throw DimensionMismatch("operator JSON: ragged row");
    for (std::size_t k = 0; k < dim; ++k)
      a.set_entry(i, k, bicomplex_from_json(rows.at(i).at(k)));
  }
  return a;
}

Json spectrum_json(const std::vector<SpectrumEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries)
    arr.push_back(Json{{"l", e.l},
                       {"lprime", e.lprime},
                       {"energy", {{"x1", e.energy.x1}, {"x2", e.energy.x2}}},
                       {"norm", ket_norm(e.ket)}});
  return arr;
}

}  // namespace bcqho
