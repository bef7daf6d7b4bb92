#pragma once

#include "grothkit/permutation.hpp"
#include "grothkit/polynomial.hpp"

namespace grothkit {

enum class Kind { Schubert, Grothendieck };
enum class Variant { Single, Double };
enum class Engine { DividedDifference, Bpd };

/// Which ascent to descend along when walking up to a known polynomial.
enum class DescentStrategy { SmallestAscent, LargestAscent };

struct EngineOptions {
  DescentStrategy strategy = DescentStrategy::SmallestAscent;
  /// Stop at the first dominant permutation (whose polynomial is a product
  /// over its diagram) instead of climbing all the way to w0.
  bool stop_at_dominant = true;
};

/// Single variants live in x1..xn; double variants in x1..xn, y1..yn.
VariableSpace engine_space(int n, Variant variant);

/// Product over the Rothe diagram of a dominant permutation. Throws
/// InvalidArgument if u is not dominant.
Polynomial dominant_grothendieck(const Permutation& u, Variant variant);
Polynomial dominant_schubert(const Permutation& u, Variant variant);

Polynomial grothendieck_dd(const Permutation& w, Variant variant, EngineOptions options = {});
Polynomial schubert_dd(const Permutation& w, Variant variant, EngineOptions options = {});

/// Sum of BPD weights. Throws BoundExceeded for n > bound.
Polynomial grothendieck_bpd(const Permutation& w, Variant variant, int bound = 6);

Polynomial compute(const Permutation& w, Kind kind, Variant variant, Engine engine);

/// Degree components of G_w with the sign of degree l(w)+k multiplied by (-1)^k.
/// Throws ContractViolation if any coefficient is then negative.
Polynomial g_tilde(const Permutation& w);

/// S_w(x;y) with every coefficient replaced by its absolute value.
Polynomial s_tilde_double(const Permutation& w);

/// Homogenization of g_tilde(w) by z up to degree d(w), in x1..xn, z.
Polynomial g_hat(const Permutation& w);

/// Total degree of G_w(x).
int degree_d(const Permutation& w);

/// Drops all memoized engine results.
void clear_engine_cache();

}  // namespace grothkit
