#include "grothkit/analysis.hpp"

#include <set>

#include "grothkit/engines.hpp"

namespace grothkit {

MConvexResult is_m_convex(const std::vector<ExponentVector>& set) {
  MConvexResult out;
  if (set.empty()) return out;
  const std::size_t m = set.front().size();
  for (const ExponentVector& e : set) {
    if (e.size() != m) throw VariableSpaceMismatch("exponent vectors of different lengths");
  }
  const std::set<ExponentVector, CanonicalOrder> members(set.begin(), set.end());
  for (const ExponentVector& alpha : members) {
    for (const ExponentVector& beta : members) {
      for (std::size_t i = 0; i < m; ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < m && !exchanged; ++j) {
          if (alpha[j] >= beta[j]) continue;
          ExponentVector moved = alpha;
          moved.set(i, alpha[i] - 1);
          moved.set(j, alpha[j] + 1);
          exchanged = members.contains(moved);
        }
        if (!exchanged) {
          out.m_convex = false;
          out.alpha = alpha;
          out.beta = beta;
          out.index = static_cast<int>(i);
          return out;
        }
      }
    }
  }
  return out;
}

SymmetricRationalMatrix::SymmetricRationalMatrix(int dimension)
    : dimension_(dimension), entries_(static_cast<std::size_t>(dimension) * dimension) {
  if (dimension < 0) throw InvalidArgument("negative matrix dimension");
}

SymmetricRationalMatrix SymmetricRationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  const int m = static_cast<int>(rows.size());
  SymmetricRationalMatrix out(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m) throw InvalidArgument("matrix is not square");
    for (int j = 0; j < m; ++j) {
      if (rows[i][j] != rows[j][i]) throw InvalidArgument("matrix is not symmetric");
      out.entries_[i * m + j] = rows[i][j];
    }
  }
  return out;
}

void SymmetricRationalMatrix::set(int i, int j, const Rational& value) {
  if (i < 0 || j < 0 || i >= dimension_ || j >= dimension_) {
    throw InvalidArgument("matrix index out of range");
  }
  entries_[i * dimension_ + j] = value;
  entries_[j * dimension_ + i] = value;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{m-k+1} I, c_{m-k} = -tr(A M_k) / k.
std::vector<Rational> characteristic_polynomial(const SymmetricRationalMatrix& a) {
  const int m = a.dimension();
  std::vector<Rational> coeffs(m + 1);
  coeffs[m] = 1;
  std::vector<Rational> current(static_cast<std::size_t>(m) * m);  // M_0 = 0
  std::vector<Rational> product(static_cast<std::size_t>(m) * m);
  for (int k = 1; k <= m; ++k) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        Rational s = 0;
        for (int t = 0; t < m; ++t) s += a.at(i, t) * current[t * m + j];
        if (i == j) s += coeffs[m - k + 1];
        product[i * m + j] = s;
      }
    }
    current.swap(product);
    Rational trace = 0;
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < m; ++t) trace += a.at(i, t) * current[t * m + i];
    coeffs[m - k] = -trace / k;
  }
  return coeffs;
}

namespace {

int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const Rational& c : coeffs) {
    const int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia inertia(const SymmetricRationalMatrix& m) {
  const std::vector<Rational> p = characteristic_polynomial(m);
  Inertia out;
  std::size_t v = 0;
  while (v < p.size() && p[v] == 0) ++v;
  out.zero = static_cast<int>(v);
  std::vector<Rational> reduced(p.begin() + v, p.end());
  out.positive = sign_changes(reduced);
  for (std::size_t i = 1; i < reduced.size(); i += 2) reduced[i] = -reduced[i];
  out.negative = sign_changes(reduced);
  return out;
}

int count_positive_eigenvalues(const SymmetricRationalMatrix& m) { return inertia(m).positive; }

SymmetricRationalMatrix quadratic_form_matrix(const RationalPolynomial& q, const std::vector<int>& slots) {
  std::vector<int> index(q.variable_count(), -1);
  std::vector<int> chosen = slots;
  if (chosen.empty()) {
    for (int s = 0; s < q.variable_count(); ++s) chosen.push_back(s);
  }
  for (std::size_t k = 0; k < chosen.size(); ++k) index[chosen[k]] = static_cast<int>(k);
  SymmetricRationalMatrix out(static_cast<int>(chosen.size()));
  for (const auto& [e, c] : q.terms()) {
    if (e.total_degree() != 2) throw InvalidArgument("quadratic form has a term of degree != 2");
    std::vector<int> vars;
    for (std::size_t s = 0; s < e.size(); ++s)
      for (int t = 0; t < e[s]; ++t) vars.push_back(static_cast<int>(s));
    const int a = index[vars[0]];
    const int b = index[vars[1]];
    if (a < 0 || b < 0) throw InvalidArgument("quadratic form uses a variable outside the chosen slots");
    out.set(a, b, a == b ? c : Rational(c / 2));
  }
  return out;
}

SymmetricRationalMatrix factor_quadratic_form(int dimension) {
  if (dimension < 3) throw InvalidArgument("factor quadratic form needs dimension >= 3");
  SymmetricRationalMatrix out(dimension);
  const Rational half(1, 2);
  for (int i = 0; i < dimension; ++i)
    for (int j = i; j < dimension; ++j) out.set(i, j, (i == j && i >= 2) ? Rational(0) : half);
  return out;
}

std::vector<Rational> factor_quadratic_form_closed_form(int dimension) {
  if (dimension < 3) throw InvalidArgument("closed form needs dimension >= 3");
  auto multiply = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  std::vector<Rational> p = {0, 1};
  for (int i = 0; i < dimension - 3; ++i) p = multiply(p, {Rational(1, 2), 1});
  return multiply(p, {Rational(-1, 2), Rational(-(dimension - 1), 2), 1});
}

namespace {

class DerivativeScan {
 public:
  DerivativeScan(int depth, LorentzianVerdict& verdict) : depth_(depth), verdict_(verdict) {}

  // Returns false on the first failing form.
  bool visit(const RationalPolynomial& g, int start) {
    if (g.is_zero()) return true;
    if (static_cast<int>(taken_.size()) == depth_) return check_form(g);
    std::vector<bool> present(g.variable_count(), false);
    for (const auto& [e, c] : g.terms())
      for (std::size_t s = 0; s < e.size(); ++s)
        if (e[s] > 0) present[s] = true;
    for (int s = start; s < g.variable_count(); ++s) {
      if (!present[s]) continue;
      taken_.push_back(s);
      const bool ok = visit(partial_derivative(g, s), s);
      taken_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

 private:
  bool check_form(const RationalPolynomial& q) {
    std::vector<int> slots;
    std::vector<bool> present(q.variable_count(), false);
    for (const auto& [e, c] : q.terms())
      for (std::size_t s = 0; s < e.size(); ++s)
        if (e[s] > 0) present[s] = true;
    for (int s = 0; s < q.variable_count(); ++s)
      if (present[s]) slots.push_back(s);
    const int positive = count_positive_eigenvalues(quadratic_form_matrix(q, slots));
    ++verdict_.checked_forms;
    verdict_.positive_eigenvalues = std::max(verdict_.positive_eigenvalues, positive);
    if (positive > 1) {
      verdict_.failing_multiset = taken_;
      verdict_.reason = "quadratic form has " + std::to_string(positive) + " positive eigenvalues";
      return false;
    }
    return true;
  }

  int depth_;
  LorentzianVerdict& verdict_;
  std::vector<int> taken_;
};

}  // namespace

LorentzianVerdict is_lorentzian(const RationalPolynomial& f) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial is not checked for the Lorentzian property");
  if (!f.is_homogeneous()) {
    throw InvalidArgument("polynomial is not homogeneous (degrees " + std::to_string(f.min_degree()) +
                          " to " + std::to_string(f.total_degree()) + ")");
  }
  LorentzianVerdict verdict;
  for (const auto& [e, c] : f.terms()) {
    if (c < 0) {
      verdict.reason = "negative coefficient";
      return verdict;
    }
  }
  const MConvexResult support = is_m_convex(f.support());
  if (!support.m_convex) {
    verdict.reason = "support is not M-convex";
    return verdict;
  }
  const int d = f.total_degree();
  if (d < 2) {
    verdict.lorentzian = true;
    verdict.reason = "degree below 2";
    return verdict;
  }
  DerivativeScan scan(d - 2, verdict);
  if (!scan.visit(f, 0)) return verdict;
  verdict.lorentzian = true;
  verdict.reason = "all derivative forms have at most one positive eigenvalue";
  return verdict;
}

LorentzianVerdict check_lorentzian_theorem(const Permutation& w) {
  if (!avoids_zero_one_patterns(w)) {
    throw NotZeroOne(w.to_string() + " contains one of the six zero-one patterns");
  }
  return is_lorentzian(normalize(s_tilde_double(w)));
}

namespace {

bool has_cover_above(const std::set<ExponentVector, CanonicalOrder>& support, const ExponentVector& alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    ExponentVector up = alpha;
    up.set(i, alpha[i] + 1);
    if (support.contains(up)) return true;
  }
  return false;
}

ConjectureVerdict support_check(const Polynomial& f, bool adjacent, const char* name) {
  if (f.is_zero()) throw InvalidArgument("conjecture checks need a nonzero polynomial");
  ConjectureVerdict out;
  out.check = name;
  const int top = f.total_degree();
  const std::vector<ExponentVector> support = f.support();
  const std::set<ExponentVector, CanonicalOrder> members(support.begin(), support.end());
  for (const ExponentVector& alpha : support) {
    if (alpha.total_degree() >= top) break;
    bool found = has_cover_above(members, alpha);
    if (!found && !adjacent) {
      for (auto it = support.rbegin(); it != support.rend() && !found; ++it) {
        if (it->total_degree() <= alpha.total_degree()) break;
        found = componentwise_lt(alpha, *it);
      }
    }
    if (!found) {
      out.pass = false;
      out.counterexample = alpha;
      return out;
    }
  }
  return out;
}

}  // namespace

ConjectureVerdict check_conjecture_1_1(const Polynomial& f) { return support_check(f, false, "conj_1_1"); }

ConjectureVerdict check_conjecture_1_2(const Polynomial& f) { return support_check(f, true, "conj_1_2"); }

ConjectureVerdict check_conjecture_1_6(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("conjecture checks need a nonzero polynomial");
  ConjectureVerdict out;
  out.check = "conj_1_6";
  const int top = f.total_degree();
  for (auto beta = f.terms().rbegin(); beta != f.terms().rend(); ++beta) {
    if (beta->first.total_degree() < top) break;
    Integer sum = 0;
    for (const auto& [alpha, c] : f.terms()) {
      if (alpha.total_degree() > top) break;
      if (componentwise_le(alpha, beta->first)) sum += c;
    }
    if (sum != 1) {
      out.pass = false;
      out.counterexample = beta->first;
      out.sum = sum;
      return out;
    }
  }
  return out;
}

}  // namespace grothkit
