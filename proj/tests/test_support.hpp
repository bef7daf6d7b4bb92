#pragma once

#include <random>
#include <string>

#include "grothkit/polynomial.hpp"

namespace grothkit::testing {

inline Polynomial poly(const std::string& text, int x_count) {
  return parse_polynomial(text, VariableSpace::plain(x_count));
}

inline Polynomial dual_poly(const std::string& text, int n) {
  return parse_polynomial(text, VariableSpace::dual(n));
}

// Random integer polynomial in x1..xm with coefficients in [-5, 5].
inline Polynomial random_polynomial(std::mt19937_64& rng, int m, int max_degree, int max_terms = 8) {
  const VariableSpace space = VariableSpace::plain(m);
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> slot(0, m - 1);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> coefficient(-5, 5);
  Polynomial f(space);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(static_cast<std::size_t>(m));
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) {
      const int s = slot(rng);
      e.set(static_cast<std::size_t>(s), e[static_cast<std::size_t>(s)] + 1);
    }
    f.add_term(e, Integer(coefficient(rng)));
  }
  return f;
}

}  // namespace grothkit::testing
