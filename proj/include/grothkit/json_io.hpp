#pragma once

#include <json.hpp>

#include "grothkit/analysis.hpp"
#include "grothkit/bpd.hpp"
#include "grothkit/polynomial.hpp"
#include "grothkit/zeroone.hpp"

namespace grothkit {

using Json = nlohmann::ordered_json;

Json to_json(const VariableSpace& space);
/// {"vars": m, "blocks": {...}, "terms": [[[e1..em], "coeff"], ...]} in canonical order.
Json to_json(const Polynomial& f);
Json to_json(const RationalPolynomial& f);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const BumplessPipeDream& p);
Json to_json(const FactorizationReport& report);
Json to_json(const ClassifyVerdict& verdict);
Json to_json(const ConjectureVerdict& verdict);
Json to_json(const LorentzianVerdict& verdict);

Json exponent_json(const ExponentVector& e);

}  // namespace grothkit
