#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grothkit/errors.hpp"

namespace grothkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxVariables = 32;
inline constexpr int kMaxExponent = 255;

/// Fixed-capacity exponent vector. Unused slots stay zero so that comparison
/// and hashing can treat the whole buffer uniformly.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t size);
  ExponentVector(std::initializer_list<int> exponents);

  static ExponentVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return data_[i]; }
  void set(std::size_t i, int value);
  int total_degree() const { return degree_; }
  bool is_zero() const { return degree_ == 0; }

  std::vector<int> to_vector() const;

  ExponentVector operator+(const ExponentVector& other) const;
  /// Entrywise difference; throws InvalidArgument if any entry would go negative.
  ExponentVector operator-(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.size_ == b.size_ && a.data_ == b.data_;
  }

  /// Lexicographic comparison of raw exponents (first slot most significant).
  friend int lex_compare(const ExponentVector& a, const ExponentVector& b) {
    return std::memcmp(a.data_.data(), b.data_.data(), kMaxVariables);
  }

 private:
  std::array<std::uint8_t, kMaxVariables> data_{};
  std::uint8_t size_ = 0;
  std::uint16_t degree_ = 0;
};

/// Entrywise partial order: a <= b iff a_i <= b_i for every i.
bool componentwise_le(const ExponentVector& a, const ExponentVector& b);
/// a <= b and a != b.
bool componentwise_lt(const ExponentVector& a, const ExponentVector& b);

/// Ascending total degree; within a degree, lexicographically larger
/// exponent vectors first, so x1*x2 precedes x1*x3 and x2*x3. This is still a
/// monomial order, and the last term is the leading term for division.
struct CanonicalOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return lex_compare(a, b) > 0;
  }
};

/// Variable layout: an x block, an optional y block and an optional z.
/// Slot order is x1..xn, y1..yn, z.
class VariableSpace {
 public:
  VariableSpace() = default;
  VariableSpace(int x_count, int y_count, bool has_z);

  static VariableSpace plain(int m) { return {m, 0, false}; }
  static VariableSpace dual(int n) { return {n, n, false}; }
  VariableSpace with_z() const { return {x_count_, y_count_, true}; }
  VariableSpace without_y() const { return {x_count_, 0, has_z_}; }

  int x_count() const { return x_count_; }
  int y_count() const { return y_count_; }
  bool has_z() const { return has_z_; }
  int size() const { return x_count_ + y_count_ + (has_z_ ? 1 : 0); }

  /// 1-based block index to 0-based slot.
  int x_slot(int i) const;
  int y_slot(int j) const;
  int z_slot() const;

  bool is_x_slot(int slot) const { return slot < x_count_; }
  bool is_y_slot(int slot) const { return slot >= x_count_ && slot < x_count_ + y_count_; }

  std::string name(int slot) const;
  std::string latex_name(int slot) const;

  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;

 private:
  int x_count_ = 0;
  int y_count_ = 0;
  bool has_z_ = false;
};

template <class C>
class BasicPolynomial {
 public:
  using Coefficient = C;
  using TermMap = std::map<ExponentVector, C, CanonicalOrder>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(VariableSpace space) : space_(space) {
    if (static_cast<std::size_t>(space.size()) > kMaxVariables) {
      throw InvalidArgument("too many variables: " + std::to_string(space.size()));
    }
  }

  static BasicPolynomial constant(VariableSpace space, const C& c) {
    BasicPolynomial p(space);
    p.add_term(ExponentVector(space.size()), c);
    return p;
  }
  static BasicPolynomial one(VariableSpace space) { return constant(space, C(1)); }
  static BasicPolynomial variable(VariableSpace space, int slot) {
    BasicPolynomial p(space);
    p.add_term(ExponentVector::unit(space.size(), slot), C(1));
    return p;
  }
  static BasicPolynomial x(VariableSpace space, int i) { return variable(space, space.x_slot(i)); }
  static BasicPolynomial y(VariableSpace space, int j) { return variable(space, space.y_slot(j)); }
  static BasicPolynomial monomial(VariableSpace space, const ExponentVector& e, const C& c = C(1)) {
    if (static_cast<int>(e.size()) != space.size()) {
      throw VariableSpaceMismatch("exponent vector length does not match variable count");
    }
    BasicPolynomial p(space);
    p.add_term(e, c);
    return p;
  }

  const VariableSpace& space() const { return space_; }
  int variable_count() const { return space_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const ExponentVector& e, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int total_degree() const {
    if (is_zero()) throw DegreeOfZero();
    return terms_.rbegin()->first.total_degree();
  }
  int min_degree() const {
    if (is_zero()) throw DegreeOfZero();
    return terms_.begin()->first.total_degree();
  }
  bool is_homogeneous() const { return !is_zero() && min_degree() == total_degree(); }

  std::vector<ExponentVector> support() const {
    std::vector<ExponentVector> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& g) {
    require_same_space(g);
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& g) {
    require_same_space(g);
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
  }
  BasicPolynomial& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial f, const BasicPolynomial& g) { return f += g; }
  friend BasicPolynomial operator-(BasicPolynomial f, const BasicPolynomial& g) { return f -= g; }
  friend BasicPolynomial operator-(BasicPolynomial f) { return f *= C(-1); }
  friend BasicPolynomial operator*(BasicPolynomial f, const C& s) { return f *= s; }
  friend BasicPolynomial operator*(const C& s, BasicPolynomial f) { return f *= s; }

  friend BasicPolynomial operator*(const BasicPolynomial& f, const BasicPolynomial& g) {
    f.require_same_space(g);
    BasicPolynomial out(f.space_);
    for (const auto& [a, ca] : f.terms_)
      for (const auto& [b, cb] : g.terms_) out.add_term(a + b, ca * cb);
    return out;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& g) { return *this = *this * g; }

  friend bool operator==(const BasicPolynomial& f, const BasicPolynomial& g) {
    return f.space_ == g.space_ && f.terms_ == g.terms_;
  }

  void require_same_space(const BasicPolynomial& g) const {
    if (!(space_ == g.space_)) {
      throw VariableSpaceMismatch("polynomials live in different variable spaces");
    }
  }

 private:
  VariableSpace space_;
  TermMap terms_;
};

using Polynomial = BasicPolynomial<Integer>;
using RationalPolynomial = BasicPolynomial<Rational>;

// ---------------------------------------------------------------------------
// Operators. Indices i are 1-based x-block indices.

namespace detail {

void check_swap_index(const VariableSpace& space, int i);

}  // namespace detail

/// (f - s_i f) / (x_i - x_{i+1}), expanded monomial by monomial:
/// (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a)/(x_i - x_{i+1}) is a geometric sum.
template <class C>
BasicPolynomial<C> divided_difference(const BasicPolynomial<C>& f, int i) {
  const VariableSpace& space = f.space();
  detail::check_swap_index(space, i);
  const int u = space.x_slot(i);
  const int v = space.x_slot(i + 1);
  BasicPolynomial<C> out(space);
  for (const auto& [e, c] : f.terms()) {
    const int a = e[u];
    const int b = e[v];
    if (a == b) continue;
    const int hi = std::max(a, b);
    const int lo = std::min(a, b);
    const C sign = a > b ? C(1) : C(-1);
    ExponentVector m = e;
    for (int t = 0; t < hi - lo; ++t) {
      m.set(u, hi - 1 - t);
      m.set(v, lo + t);
      out.add_term(m, sign * c);
    }
  }
  return out;
}

/// ((1 - x_{i+1}) f - (1 - x_i) s_i f) / (x_i - x_{i+1}) = d_i((1 - x_{i+1}) f).
template <class C>
BasicPolynomial<C> isobaric_divided_difference(const BasicPolynomial<C>& f, int i) {
  detail::check_swap_index(f.space(), i);
  const int v = f.space().x_slot(i + 1);
  BasicPolynomial<C> shifted = f;
  for (const auto& [e, c] : f.terms()) {
    if (e[v] >= kMaxExponent) throw InvalidArgument("exponent overflow");
    ExponentVector m = e;
    m.set(v, e[v] + 1);
    shifted.add_term(m, -c);
  }
  return divided_difference(shifted, i);
}

/// s_i f: swaps x_i and x_{i+1}.
template <class C>
BasicPolynomial<C> swap_variables(const BasicPolynomial<C>& f, int i) {
  detail::check_swap_index(f.space(), i);
  const int u = f.space().x_slot(i);
  const int v = f.space().x_slot(i + 1);
  BasicPolynomial<C> out(f.space());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector m = e;
    m.set(u, e[v]);
    m.set(v, e[u]);
    out.add_term(m, c);
  }
  return out;
}

template <class C>
BasicPolynomial<C> homogeneous_component(const BasicPolynomial<C>& f, int degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
  BasicPolynomial<C> out(f.space());
  for (const auto& [e, c] : f.terms())
    if (e.total_degree() == degree) out.add_term(e, c);
  return out;
}

/// Multiplies the degree base+k component by (-1)^k.
template <class C>
BasicPolynomial<C> sign_flip_by_degree(const BasicPolynomial<C>& f, int base) {
  BasicPolynomial<C> out(f.space());
  for (const auto& [e, c] : f.terms()) {
    const int k = e.total_degree() - base;
    if (k < 0) throw InvalidArgument("sign flip base exceeds a term degree");
    out.add_term(e, k % 2 == 0 ? c : C(-c));
  }
  return out;
}

/// Degree base+k component gains z^(top-base-k). Signs are untouched.
template <class C>
BasicPolynomial<C> homogenize(const BasicPolynomial<C>& f, int base, int top) {
  const VariableSpace& space = f.space();
  if (!space.has_z()) throw InvalidArgument("homogenize needs a z variable");
  const int z = space.z_slot();
  BasicPolynomial<C> out(space);
  for (const auto& [e, c] : f.terms()) {
    const int d = e.total_degree();
    if (d < base || d > top) {
      throw InvalidArgument("term degree " + std::to_string(d) + " outside [" +
                            std::to_string(base) + ", " + std::to_string(top) + "]");
    }
    ExponentVector m = e;
    m.set(z, e[z] + (top - d));
    out.add_term(m, c);
  }
  return out;
}

template <class C>
BasicPolynomial<C> absolute_coefficients(const BasicPolynomial<C>& f) {
  BasicPolynomial<C> out(f.space());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c < 0 ? C(-c) : c);
  return out;
}

/// Re-homes f into `target`, matching x, y and z blocks by index. Throws
/// when a variable with a nonzero exponent has no slot in the target.
template <class C>
BasicPolynomial<C> embed(const BasicPolynomial<C>& f, const VariableSpace& target) {
  const VariableSpace& source = f.space();
  std::vector<int> map(source.size(), -1);
  for (int i = 1; i <= source.x_count(); ++i)
    if (i <= target.x_count()) map[source.x_slot(i)] = target.x_slot(i);
  for (int j = 1; j <= source.y_count(); ++j)
    if (j <= target.y_count()) map[source.y_slot(j)] = target.y_slot(j);
  if (source.has_z() && target.has_z()) map[source.z_slot()] = target.z_slot();
  BasicPolynomial<C> out(target);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector m(target.size());
    for (int s = 0; s < source.size(); ++s) {
      if (e[s] == 0) continue;
      if (map[s] < 0) throw VariableSpaceMismatch("variable " + source.name(s) + " has no target slot");
      m.set(map[s], e[s]);
    }
    out.add_term(m, c);
  }
  return out;
}

/// Sets every y variable to zero and drops the y block.
template <class C>
BasicPolynomial<C> set_y_zero(const BasicPolynomial<C>& f) {
  const VariableSpace& space = f.space();
  BasicPolynomial<C> out(space.without_y());
  for (const auto& [e, c] : f.terms()) {
    bool has_y = false;
    for (int j = 1; j <= space.y_count() && !has_y; ++j) has_y = e[space.y_slot(j)] != 0;
    if (has_y) continue;
    ExponentVector m(out.space().size());
    for (int i = 1; i <= space.x_count(); ++i) m.set(out.space().x_slot(i), e[space.x_slot(i)]);
    if (space.has_z()) m.set(out.space().z_slot(), e[space.z_slot()]);
    out.add_term(m, c);
  }
  return out;
}

RationalPolynomial to_rational(const Polynomial& f);

/// Divides the coefficient of x^a by a_1! a_2! ... a_m!.
RationalPolynomial normalize(const Polynomial& f);

/// Exact quotient q with q * g == f. Throws NotDivisible otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);
Rational evaluate(const RationalPolynomial& f, std::span<const Rational> point);
Rational evaluate_at_ones(const Polynomial& f);

/// d^times/dx_slot^times.
RationalPolynomial partial_derivative(const RationalPolynomial& f, int slot, int times = 1);

// ---------------------------------------------------------------------------
// Text and JSON forms.

/// "x1^2*x2 - 2*x1*x2*x3" in canonical order.
std::string to_text(const Polynomial& f);
std::string to_text(const RationalPolynomial& f);
std::string to_latex(const Polynomial& f);

/// Parses the text form back into `space`. Accepts integer or a/b coefficients.
Polynomial parse_polynomial(std::string_view text, const VariableSpace& space);
RationalPolynomial parse_rational_polynomial(std::string_view text, const VariableSpace& space);

}  // namespace grothkit
