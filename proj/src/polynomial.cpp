#include "grothkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace grothkit {

ExponentVector::ExponentVector(std::size_t size) : size_(static_cast<std::uint8_t>(size)) {
  if (size > kMaxVariables) throw InvalidArgument("too many variables: " + std::to_string(size));
}

ExponentVector::ExponentVector(std::initializer_list<int> exponents)
    : ExponentVector(exponents.size()) {
  std::size_t i = 0;
  for (int e : exponents) set(i++, e);
}

ExponentVector ExponentVector::unit(std::size_t size, std::size_t index) {
  ExponentVector e(size);
  e.set(index, 1);
  return e;
}

void ExponentVector::set(std::size_t i, int value) {
  if (i >= size_) throw InvalidArgument("exponent index out of range");
  if (value < 0 || value > kMaxExponent) {
    throw InvalidArgument("exponent out of range: " + std::to_string(value));
  }
  degree_ = static_cast<std::uint16_t>(degree_ - data_[i] + value);
  data_[i] = static_cast<std::uint8_t>(value);
}

std::vector<int> ExponentVector::to_vector() const {
  return std::vector<int>(data_.begin(), data_.begin() + size_);
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (size_ != other.size_) throw VariableSpaceMismatch("exponent vector length mismatch");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    const int v = data_[i] + other.data_[i];
    if (v > kMaxExponent) throw InvalidArgument("exponent overflow");
    out.data_[i] = static_cast<std::uint8_t>(v);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (size_ != other.size_) throw VariableSpaceMismatch("exponent vector length mismatch");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    if (data_[i] < other.data_[i]) throw InvalidArgument("negative exponent in difference");
    out.data_[i] = static_cast<std::uint8_t>(data_[i] - other.data_[i]);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return out;
}

bool componentwise_le(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw VariableSpaceMismatch("exponent vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool componentwise_lt(const ExponentVector& a, const ExponentVector& b) {
  return componentwise_le(a, b) && !(a == b);
}

VariableSpace::VariableSpace(int x_count, int y_count, bool has_z)
    : x_count_(x_count), y_count_(y_count), has_z_(has_z) {
  if (x_count < 0 || y_count < 0) throw InvalidArgument("negative block size");
  if (static_cast<std::size_t>(size()) > kMaxVariables) {
    throw InvalidArgument("too many variables: " + std::to_string(size()));
  }
}

int VariableSpace::x_slot(int i) const {
  if (i < 1 || i > x_count_) throw InvalidArgument("x index out of range: " + std::to_string(i));
  return i - 1;
}

int VariableSpace::y_slot(int j) const {
  if (j < 1 || j > y_count_) throw InvalidArgument("y index out of range: " + std::to_string(j));
  return x_count_ + j - 1;
}

int VariableSpace::z_slot() const {
  if (!has_z_) throw InvalidArgument("variable space has no z");
  return x_count_ + y_count_;
}

std::string VariableSpace::name(int slot) const {
  if (slot < x_count_) return "x" + std::to_string(slot + 1);
  if (slot < x_count_ + y_count_) return "y" + std::to_string(slot - x_count_ + 1);
  if (has_z_ && slot == x_count_ + y_count_) return "z";
  throw InvalidArgument("slot out of range");
}

std::string VariableSpace::latex_name(int slot) const {
  if (slot < x_count_) return "x_{" + std::to_string(slot + 1) + "}";
  if (slot < x_count_ + y_count_) return "y_{" + std::to_string(slot - x_count_ + 1) + "}";
  if (has_z_ && slot == x_count_ + y_count_) return "z";
  throw InvalidArgument("slot out of range");
}

namespace detail {

void check_swap_index(const VariableSpace& space, int i) {
  if (i < 1 || i + 1 > space.x_count()) {
    throw InvalidArgument("operator index " + std::to_string(i) + " outside the x block");
  }
}

}  // namespace detail

RationalPolynomial to_rational(const Polynomial& f) {
  RationalPolynomial out(f.space());
  for (const auto& [e, c] : f.terms()) out.add_term(e, Rational(c));
  return out;
}

namespace {

Integer factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

RationalPolynomial normalize(const Polynomial& f) {
  RationalPolynomial out(f.space());
  for (const auto& [e, c] : f.terms()) {
    Integer denom = 1;
    for (std::size_t i = 0; i < e.size(); ++i) denom *= factorial(e[i]);
    out.add_term(e, Rational(c, denom));
  }
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  f.require_same_space(g);
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *g.terms().rbegin();
  Polynomial remainder = f;
  Polynomial quotient(f.space());
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    if (!componentwise_le(lead_e, re)) throw NotDivisible("leading monomial not divisible");
    Integer q;
    Integer rem;
    boost::multiprecision::divide_qr(rc, lead_c, q, rem);
    if (rem != 0) throw NotDivisible("leading coefficient not divisible");
    const ExponentVector shift = re - lead_e;
    quotient.add_term(shift, q);
    for (const auto& [ge, gc] : g.terms()) remainder.add_term(ge + shift, -q * gc);
  }
  return quotient;
}

namespace {

template <class C>
Rational evaluate_impl(const BasicPolynomial<C>& f, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != f.variable_count()) {
    throw VariableSpaceMismatch("evaluation point has wrong length");
  }
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

}  // namespace

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  return evaluate_impl(f, point);
}

Rational evaluate(const RationalPolynomial& f, std::span<const Rational> point) {
  return evaluate_impl(f, point);
}

Rational evaluate_at_ones(const Polynomial& f) {
  Integer total = 0;
  for (const auto& [e, c] : f.terms()) total += c;
  return Rational(total);
}

RationalPolynomial partial_derivative(const RationalPolynomial& f, int slot, int times) {
  if (slot < 0 || slot >= f.variable_count()) throw InvalidArgument("derivative slot out of range");
  if (times < 0) throw InvalidArgument("negative derivative order");
  RationalPolynomial out(f.space());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[slot];
    if (a < times) continue;
    Integer falling = 1;
    for (int t = 0; t < times; ++t) falling *= a - t;
    ExponentVector m = e;
    m.set(slot, a - times);
    out.add_term(m, c * falling);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text output.

namespace {

std::string coefficient_text(const Integer& c) { return c.str(); }

std::string coefficient_text(const Rational& c) {
  const Integer num = boost::multiprecision::numerator(c);
  const Integer den = boost::multiprecision::denominator(c);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

template <class C>
std::string monomial_text(const ExponentVector& e, const VariableSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += space.name(static_cast<int>(i));
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

template <class C>
std::string to_text_impl(const BasicPolynomial<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    const C magnitude = negative ? C(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text<C>(e, f.space());
    if (mono.empty()) {
      out += coefficient_text(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += coefficient_text(magnitude) + "*" + mono;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const Polynomial& f) { return to_text_impl(f); }
std::string to_text(const RationalPolynomial& f) { return to_text_impl(f); }

std::string to_latex(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += f.space().latex_name(static_cast<int>(i));
      if (e[i] > 1) mono += "^{" + std::to_string(e[i]) + "}";
    }
    if (mono.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.str() + " " + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text parsing.

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const VariableSpace& space) : text_(text), space_(space) {}

  RationalPolynomial parse() {
    RationalPolynomial out(space_);
    skip_space();
    if (at_end()) throw ParseError("empty polynomial text");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = parse_term();
      out.add_term(e, sign * c);
      skip_space();
    }
    return out;
  }

 private:
  std::pair<ExponentVector, Rational> parse_term() {
    ExponentVector e(space_.size());
    Rational c = 1;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= parse_number();
      } else if (ch == 'x' || ch == 'y' || ch == 'z') {
        const int slot = parse_variable();
        int power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          next();
          skip_space();
          power = parse_int();
        }
        e.set(slot, e[slot] + power);
      } else {
        fail("unexpected character");
      }
      any = true;
      skip_space();
      if (at_end() || peek() != '*') break;
      next();
    }
    if (!any) fail("empty term");
    return {e, c};
  }

  Rational parse_number() {
    const Integer num{std::string(read_digits())};
    if (!at_end() && peek() == '/') {
      next();
      const Integer den{std::string(read_digits())};
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  int parse_int() {
    const std::string_view digits = read_digits();
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc()) fail("integer out of range");
    return value;
  }

  int parse_variable() {
    const char kind = next();
    if (kind == 'z') return space_.has_z() ? space_.z_slot() : fail_int("no z variable");
    const int index = parse_int();
    if (kind == 'x') {
      if (index < 1 || index > space_.x_count()) return fail_int("x index out of range");
      return space_.x_slot(index);
    }
    if (index < 1 || index > space_.y_count()) return fail_int("y index out of range");
    return space_.y_slot(index);
  }

  std::string_view read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  int fail_int(const std::string& what) const { fail(what); }

  std::string_view text_;
  VariableSpace space_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_rational_polynomial(std::string_view text, const VariableSpace& space) {
  return TermParser(text, space).parse();
}

Polynomial parse_polynomial(std::string_view text, const VariableSpace& space) {
  const RationalPolynomial r = parse_rational_polynomial(text, space);
  Polynomial out(space);
  for (const auto& [e, c] : r.terms()) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw ParseError("non-integer coefficient in '" + std::string(text) + "'");
    }
    out.add_term(e, boost::multiprecision::numerator(c));
  }
  return out;
}

}  // namespace grothkit
