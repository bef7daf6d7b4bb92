#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grothkit/permutation.hpp"
#include "grothkit/polynomial.hpp"

namespace grothkit {

struct MConvexResult {
  bool m_convex = true;
  /// alpha, beta and the index i (0-based) for which no exchange exists.
  std::optional<ExponentVector> alpha;
  std::optional<ExponentVector> beta;
  int index = -1;
};

MConvexResult is_m_convex(const std::vector<ExponentVector>& set);

class SymmetricRationalMatrix {
 public:
  explicit SymmetricRationalMatrix(int dimension);
  /// Throws InvalidArgument unless rows form a symmetric square matrix.
  static SymmetricRationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int dimension() const { return dimension_; }
  const Rational& at(int i, int j) const { return entries_[i * dimension_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, const Rational& value);

 private:
  int dimension_;
  std::vector<Rational> entries_;
};

/// Coefficients of det(t I - M), lowest power first; the last entry is 1.
std::vector<Rational> characteristic_polynomial(const SymmetricRationalMatrix& m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact eigenvalue sign counts from the characteristic polynomial. Valid
/// because a symmetric matrix has a real spectrum, so Descartes' rule is exact.
Inertia inertia(const SymmetricRationalMatrix& m);
int count_positive_eigenvalues(const SymmetricRationalMatrix& m);

/// Matrix of a quadratic form: Q_aa is the x_a^2 coefficient, Q_ab half the
/// x_a x_b coefficient. Restricted to `slots`, or to all variables if empty.
SymmetricRationalMatrix quadratic_form_matrix(const RationalPolynomial& q,
                                              const std::vector<int>& slots = {});

/// The family with 1/2 off the diagonal and diagonal (1/2, 1/2, 0, ..., 0).
SymmetricRationalMatrix factor_quadratic_form(int dimension);
/// t (t + 1/2)^(m-3) (t^2 - (m-1)/2 t - 1/2), lowest power first.
std::vector<Rational> factor_quadratic_form_closed_form(int dimension);

struct LorentzianVerdict {
  bool lorentzian = false;
  std::string reason;
  /// Derivative multiset (variable slots) whose quadratic form failed.
  std::optional<std::vector<int>> failing_multiset;
  int positive_eigenvalues = 0;
  long checked_forms = 0;
};

/// Homogeneous, nonnegative, M-convex support, and every (d-2)-fold partial
/// derivative has at most one positive eigenvalue. Degree 0 and 1 pass once
/// the first three conditions hold. Throws InvalidArgument for the zero
/// polynomial or a nonhomogeneous input.
LorentzianVerdict is_lorentzian(const RationalPolynomial& f);

/// N(S~_w(x;y)) for a zero-one w; throws NotZeroOne otherwise.
LorentzianVerdict check_lorentzian_theorem(const Permutation& w);

struct ConjectureVerdict {
  std::string check;
  bool pass = true;
  std::optional<ExponentVector> counterexample;
  /// Coefficient sum at the counterexample (support/coefficient check only).
  Integer sum = 0;
};

/// Every alpha below top degree lies strictly under some beta in the support.
ConjectureVerdict check_conjecture_1_1(const Polynomial& f);
/// As above with |beta| = |alpha| + 1.
ConjectureVerdict check_conjecture_1_2(const Polynomial& f);
/// For every top-degree beta, the coefficients of alpha <= beta sum to 1.
ConjectureVerdict check_conjecture_1_6(const Polynomial& f);

}  // namespace grothkit
