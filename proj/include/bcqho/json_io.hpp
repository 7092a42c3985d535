#pragma once

#include <json.hpp>

#include "bcqho/fock.hpp"
#include "bcqho/oscillator.hpp"

// JSON encodings. A bicomplex number is emitted either canonically as
//   {"e": w_e, "i1": w_i1, "i2": w_i2, "j": w_j}
// or over the idempotent basis as
//   {"z1": [re, im], "z2": [re, im]}
// and parsers accept both forms. Kets and operators are arrays of that
// encoding with a dimension header.

namespace bcqho {

using Json = nlohmann::json;

enum class JsonBasis { canonical, idempotent };

Json bicomplex_to_json(BiComplex w, JsonBasis basis = JsonBasis::canonical);
BiComplex bicomplex_from_json(const Json& j);

Json ket_to_json(const Ket& psi, JsonBasis basis = JsonBasis::canonical);
Ket ket_from_json(const Json& j);

Json operator_to_json(const BiOperator& a,
                      JsonBasis basis = JsonBasis::canonical);
BiOperator operator_from_json(const Json& j);

// array of {l, lprime, energy:{x1,x2}, norm}
Json spectrum_json(const std::vector<SpectrumEntry>& entries);

}  // namespace bcqho
