#include "grothkit/json_io.hpp"

namespace grothkit {

Json exponent_json(const ExponentVector& e) { return Json(e.to_vector()); }

Json to_json(const VariableSpace& space) {
  return Json{{"x", space.x_count()}, {"y", space.y_count()}, {"z", space.has_z()}};
}

namespace {

std::string coefficient_string(const Integer& c) { return c.str(); }

std::string coefficient_string(const Rational& c) {
  const Integer num = boost::multiprecision::numerator(c);
  const Integer den = boost::multiprecision::denominator(c);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

template <class C>
Json polynomial_json(const BasicPolynomial<C>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({exponent_json(e), coefficient_string(c)}));
  return Json{{"vars", f.variable_count()}, {"blocks", to_json(f.space())}, {"terms", std::move(terms)}};
}

}  // namespace

Json to_json(const Polynomial& f) { return polynomial_json(f); }
Json to_json(const RationalPolynomial& f) { return polynomial_json(f); }

Polynomial polynomial_from_json(const Json& j) {
  try {
    const Json& blocks = j.at("blocks");
    const VariableSpace space(blocks.at("x").get<int>(), blocks.at("y").get<int>(),
                              blocks.at("z").get<bool>());
    if (j.at("vars").get<int>() != space.size()) throw ParseError("vars does not match blocks");
    Polynomial out(space);
    for (const Json& term : j.at("terms")) {
      const std::vector<int> exps = term.at(0).get<std::vector<int>>();
      if (static_cast<int>(exps.size()) != space.size()) throw ParseError("exponent length mismatch");
      ExponentVector e(exps.size());
      for (std::size_t i = 0; i < exps.size(); ++i) e.set(i, exps[i]);
      out.add_term(e, Integer(term.at(1).get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const BumplessPipeDream& p) {
  return Json{{"n", p.size()}, {"rows", p.rows()}};
}

Json to_json(const FactorizationReport& report) {
  Json factors = Json::array();
  for (std::size_t k = 0; k < report.structures.size(); ++k) {
    const LocalStructure& s = report.structures[k];
    Json entry;
    if (s.kind == StructureKind::A) {
      entry = Json{{"kind", "A"}, {"k", s.size}, {"p", s.row}};
    } else {
      entry = Json{{"kind", "B"}, {"l", s.size}, {"r", s.row}};
    }
    entry["poly"] = to_json(report.factors[k]);
    entry["text"] = to_text(report.factors[k]);
    factors.push_back(std::move(entry));
  }
  return Json{{"perm", report.w.to_string()},
              {"lambda", exponent_json(report.lambda)},
              {"factors", std::move(factors)},
              {"disjoint", report.disjoint_windows},
              {"verified", report.product_verified}};
}

Json to_json(const ClassifyVerdict& verdict) {
  Json out{{"perm", verdict.w.to_string()},
           {"by_patterns", verdict.by_patterns},
           {"by_coefficients", verdict.by_coefficients},
           {"witness", nullptr},
           {"theorem_violation", verdict.theorem_violation()}};
  if (verdict.witness) {
    out["witness"] = Json{{"exponent", exponent_json(*verdict.witness)},
                          {"coefficient", verdict.witness_coefficient.str()}};
  }
  return out;
}

Json to_json(const ConjectureVerdict& verdict) {
  Json out{{"check", verdict.check}, {"pass", verdict.pass}, {"counterexample", nullptr}};
  if (verdict.counterexample) {
    out["counterexample"] = Json{{"exponent", exponent_json(*verdict.counterexample)}};
    if (verdict.check == "conj_1_6") out["counterexample"]["sum"] = verdict.sum.str();
  }
  return out;
}

Json to_json(const LorentzianVerdict& verdict) {
  Json out{{"check", "lorentzian"},
           {"pass", verdict.lorentzian},
           {"reason", verdict.reason},
           {"counterexample", nullptr}};
  if (verdict.failing_multiset) out["counterexample"] = Json{{"derivative_slots", *verdict.failing_multiset}};
  return out;
}

}  // namespace grothkit
