#pragma once

#include <optional>
#include <vector>

#include "grothkit/permutation.hpp"
#include "grothkit/polynomial.hpp"

namespace grothkit {

struct CoefficientCheck {
  bool zero_one = true;
  /// First term (canonical order) whose coefficient is out of range.
  std::optional<ExponentVector> witness;
  Integer coefficient = 0;
};

/// Every coefficient in {-1, 0, 1}, or in {0, 1} when negatives are disallowed.
CoefficientCheck is_zero_one_by_coefficients(const Polynomial& f, bool allow_negative = true);

struct ClassifyVerdict {
  Permutation w;
  bool by_patterns = false;
  bool by_coefficients = false;
  std::optional<ExponentVector> witness;
  Integer witness_coefficient = 0;

  bool theorem_violation() const { return by_patterns != by_coefficients; }
};

/// Six-pattern verdict against the {-1,0,1} test on G_w(x).
ClassifyVerdict classify_groth(const Permutation& w);
/// Twelve-pattern verdict against the {0,1} test on S_w(x).
ClassifyVerdict classify_schubert(const Permutation& w);

/// F_k in x_p, x_{p+1}. The signed form subtracts the degree k+1 part.
Polynomial factor_F(int k, int p, bool signed_form, const VariableSpace& space);
Polynomial factor_F(int k, int p, bool signed_form = false);

/// Sum of e_s(x_r..x_{r+l}) for s = 1..l+1, with sign (-1)^(s-1) when signed.
Polynomial factor_G(int l, int r, bool signed_form, const VariableSpace& space);
Polynomial factor_G(int l, int r, bool signed_form = false);

/// Sum over t of h_{k-t}(x_p, x_{p+1}) e_t(y_i..y_{i+k}).
Polynomial factor_F_double(int k, int p, int i, const VariableSpace& space);
Polynomial factor_F_double(int k, int p, int i);

/// x_r + ... + x_{r+l} + y_j + ... + y_{j+l}.
Polynomial factor_G_double(int l, int r, int j, const VariableSpace& space);
Polynomial factor_G_double(int l, int r, int j);

enum class StructureKind { A, B };

struct LocalStructure {
  StructureKind kind = StructureKind::A;
  /// k for A (box count), l for B (pipe count).
  int size = 0;
  /// A: row p of the elbow; its boxes sit in row p+1. B: first variable r.
  int row = 0;
  /// A: column of the elbow (first y index). B: first y index j.
  int column = 0;
  /// Diagram cells owned by the structure.
  std::vector<Cell> cells;

  /// x indices the factor uses.
  std::vector<int> x_window() const;
};

/// Requires w to avoid the six patterns; throws NotZeroOne otherwise.
std::vector<LocalStructure> local_structures(const Permutation& w);

/// Diagram cells that no droop from the Rothe BPD can reach.
std::vector<Cell> undroopable_cells(const Permutation& w);

struct FactorizationReport {
  Permutation w;
  ExponentVector lambda;
  /// Cells of the northwest region, used by the double factorization.
  std::vector<Cell> lambda_cells;
  std::vector<LocalStructure> structures;
  std::vector<Polynomial> factors;
  bool disjoint_windows = false;
  bool product_verified = false;
};

/// g_tilde(w) = x^lambda * product of factors, verified by exact division.
FactorizationReport factorize(const Permutation& w);

/// s_tilde_double(w) = prod over lambda cells (x_i + y_j) * product of double factors.
FactorizationReport factorize_double_schubert(const Permutation& w);

}  // namespace grothkit
