#pragma once

#include <json.hpp>

#include "monoalg/algebra.hpp"
#include "monoalg/autgroup.hpp"
#include "monoalg/poly.hpp"

namespace monoalg {

// {"p": int, "parts": [{"d": int, "j": int, "n": int}, ...]} with parts
// sorted by (d, j); the free algebra serializes as {"p": int, "free": true}.
nlohmann::json form_to_json(const CanonicalForm& form);
CanonicalForm form_from_json(const nlohmann::json& j);  // throws ParseError

// per slot, per power of Y, the coefficient vector over F_p
nlohmann::json element_to_json(const AlgebraElement& x);

// {"blocks": [{"d", "j", "perm": [images], "locals": [{"frob": k,
// "lambdas": [[coeffs], ...]}, ...]}, ...]}
nlohmann::json product_aut_to_json(const ProductAut& g);

nlohmann::json factorization_to_json(const Factorization& f);

}  // namespace monoalg
