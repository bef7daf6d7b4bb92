#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "grothkit/errors.hpp"
#include "grothkit/polynomial.hpp"
#include "test_support.hpp"

using namespace grothkit;
using grothkit::testing::poly;
using grothkit::testing::random_polynomial;

TEST(Polynomial, RingOperations) {
  const Polynomial x1 = poly("x1", 3);
  EXPECT_TRUE((x1 + (-x1)).is_zero());
  EXPECT_EQ((x1 + (-x1)).term_count(), 0u);
  EXPECT_EQ((poly("x1 + x2", 3) * poly("x1 - x2", 3)), poly("x1^2 - x2^2", 3));
  EXPECT_EQ((poly("1 - x2", 3) * poly("x1*x3", 3)), poly("x1*x3 - x1*x2*x3", 3));
}

TEST(Polynomial, MismatchedSpacesThrow) {
  EXPECT_THROW(poly("x1", 2) + poly("x1", 3), VariableSpaceMismatch);
  EXPECT_THROW(poly("x1", 2) * parse_polynomial("x1", VariableSpace::dual(1)), VariableSpaceMismatch);
}

TEST(Polynomial, DegreeOfZeroThrows) {
  const Polynomial zero(VariableSpace::plain(2));
  EXPECT_THROW(zero.total_degree(), DegreeOfZero);
  EXPECT_THROW(zero.min_degree(), DegreeOfZero);
  EXPECT_TRUE(zero.support().empty());
}

TEST(Polynomial, TextRoundTripAndCanonicalOrder) {
  const Polynomial f = poly("x1^2*x2 - 2*x1*x2*x3 + 3", 3);
  EXPECT_EQ(to_text(f), "3 + x1^2*x2 - 2*x1*x2*x3");
  EXPECT_EQ(parse_polynomial(to_text(f), f.space()), f);
  // Within a degree, lexicographically larger exponent vectors come first.
  EXPECT_EQ(to_text(poly("x2*x3 + x1*x3 + x1*x2", 3)), "x1*x2 + x1*x3 + x2*x3");
  EXPECT_EQ(to_text(Polynomial(VariableSpace::plain(2))), "0");
  EXPECT_THROW(parse_polynomial("x4", VariableSpace::plain(3)), ParseError);
  EXPECT_THROW(parse_polynomial("x1 +", VariableSpace::plain(3)), ParseError);
}

TEST(Polynomial, DualSpaceNames) {
  const VariableSpace space = VariableSpace::dual(2);
  const Polynomial f = parse_polynomial("x1 - y2 + x2*y1", space);
  EXPECT_EQ(f.variable_count(), 4);
  EXPECT_EQ(parse_polynomial(to_text(f), space), f);
  EXPECT_EQ(space.name(space.y_slot(2)), "y2");
  EXPECT_EQ(space.with_z().name(space.with_z().z_slot()), "z");
}

TEST(Polynomial, DividedDifference) {
  EXPECT_EQ(divided_difference(poly("x1", 2), 1), poly("1", 2));
  EXPECT_EQ(divided_difference(poly("x2", 2), 1), poly("-1", 2));
  EXPECT_EQ(divided_difference(poly("x1^2*x2", 2), 1), poly("x1*x2", 2));
  EXPECT_EQ(divided_difference(poly("x1^3", 3), 1), poly("x1^2 + x1*x2 + x2^2", 3));
  EXPECT_THROW(divided_difference(poly("x1", 2), 2), InvalidArgument);
}

TEST(Polynomial, IsobaricDividedDifference) {
  EXPECT_EQ(isobaric_divided_difference(poly("1", 2), 1), poly("1", 2));
  EXPECT_EQ(isobaric_divided_difference(poly("x1", 2), 1), poly("1", 2));
  EXPECT_EQ(isobaric_divided_difference(poly("x1^2", 2), 1), poly("x1 + x2 - x1*x2", 2));
}

TEST(Polynomial, DividedDifferenceMatchesDefinition) {
  // (f - s_i f) = (x_i - x_{i+1}) * d_i f, checked on random inputs.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_polynomial(rng, 4, 6);
    for (int i = 1; i <= 3; ++i) {
      const Polynomial lhs = f - swap_variables(f, i);
      const Polynomial diff = Polynomial::x(f.space(), i) - Polynomial::x(f.space(), i + 1);
      ASSERT_EQ(lhs, diff * divided_difference(f, i));
      const Polynomial one = Polynomial::one(f.space());
      const Polynomial lhs_pi = (one - Polynomial::x(f.space(), i + 1)) * f -
                                (one - Polynomial::x(f.space(), i)) * swap_variables(f, i);
      ASSERT_EQ(lhs_pi, diff * isobaric_divided_difference(f, i));
    }
  }
}

TEST(Polynomial, OperatorRelations) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_polynomial(rng, 5, 6);
    for (int i = 1; i <= 4; ++i) {
      ASSERT_TRUE(divided_difference(divided_difference(f, i), i).is_zero());
      const Polynomial p = isobaric_divided_difference(f, i);
      ASSERT_EQ(isobaric_divided_difference(p, i), p);
    }
    for (int i = 1; i <= 3; ++i) {
      auto d = [](const Polynomial& g, int k) { return divided_difference(g, k); };
      auto pi = [](const Polynomial& g, int k) { return isobaric_divided_difference(g, k); };
      ASSERT_EQ(d(d(d(f, i), i + 1), i), d(d(d(f, i + 1), i), i + 1));
      ASSERT_EQ(pi(pi(pi(f, i), i + 1), i), pi(pi(pi(f, i + 1), i), i + 1));
    }
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 2; j <= 4; ++j) {
        ASSERT_EQ(divided_difference(divided_difference(f, i), j),
                  divided_difference(divided_difference(f, j), i));
        ASSERT_EQ(isobaric_divided_difference(isobaric_divided_difference(f, i), j),
                  isobaric_divided_difference(isobaric_divided_difference(f, j), i));
      }
    }
  }
}

TEST(Polynomial, HomogeneousComponent) {
  const Polynomial f = poly("x1 + x1*x2", 2);
  EXPECT_EQ(homogeneous_component(f, 1), poly("x1", 2));
  EXPECT_EQ(homogeneous_component(f, 2), poly("x1*x2", 2));
  EXPECT_TRUE(homogeneous_component(f, 3).is_zero());
  EXPECT_THROW(homogeneous_component(f, -1), InvalidArgument);
}

TEST(Polynomial, SignFlipByDegree) {
  const Polynomial g1342 = poly("x1*x2 + x1*x3 + x2*x3 - 2*x1*x2*x3", 3);
  EXPECT_EQ(sign_flip_by_degree(g1342, 2), poly("x1*x2 + x1*x3 + x2*x3 + 2*x1*x2*x3", 3));
  EXPECT_EQ(sign_flip_by_degree(poly("x1", 1), 1), poly("x1", 1));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = random_polynomial(rng, 4, 5);
    if (f.is_zero()) continue;
    const int base = f.min_degree();
    ASSERT_EQ(sign_flip_by_degree(sign_flip_by_degree(f, base), base), f);
  }
}

TEST(Polynomial, Homogenize) {
  const VariableSpace space = VariableSpace::plain(2).with_z();
  const Polynomial f = parse_polynomial("x1 + x1*x2", space);
  EXPECT_EQ(homogenize(f, 1, 2), parse_polynomial("x1*z + x1*x2", space));
  const Polynomial h = parse_polynomial("x1*x2 - x2^2", space);
  EXPECT_EQ(homogenize(h, 2, 2), h);
  // G_132 with signs: x1 + x2 - x1*x2 becomes x1*z + x2*z + x1*x2.
  const Polynomial g132 = parse_polynomial("x1 + x2 - x1*x2", space);
  EXPECT_EQ(homogenize(sign_flip_by_degree(g132, 1), 1, 2), parse_polynomial("x1*z + x2*z + x1*x2", space));
  EXPECT_THROW(homogenize(f, 2, 2), InvalidArgument);
  EXPECT_THROW(homogenize(poly("x1", 2), 1, 1), InvalidArgument);
}

TEST(Polynomial, Normalize) {
  EXPECT_EQ(normalize(poly("x1*x2", 2)), to_rational(poly("x1*x2", 2)));
  EXPECT_EQ(normalize(poly("x1^2", 2)), parse_rational_polynomial("1/2*x1^2", VariableSpace::plain(2)));
  EXPECT_EQ(normalize(poly("2*x1^3*x2", 2)), parse_rational_polynomial("1/3*x1^3*x2", VariableSpace::plain(2)));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = random_polynomial(rng, 3, 5);
    const Polynomial g = random_polynomial(rng, 3, 5);
    ASSERT_EQ(normalize(f + g), normalize(f) + normalize(g));
  }
}

TEST(Polynomial, ExactDivide) {
  EXPECT_EQ(exact_divide(poly("x1^2 - x2^2", 3), poly("x1 - x2", 3)), poly("x1 + x2", 3));
  EXPECT_THROW(exact_divide(poly("x1*x2", 3), poly("x3", 3)), NotDivisible);
  EXPECT_THROW(exact_divide(poly("x1", 3), Polynomial(VariableSpace::plain(3))), InvalidArgument);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_polynomial(rng, 4, 4, 5);
    const Polynomial g = random_polynomial(rng, 4, 3, 4);
    if (g.is_zero()) continue;
    ASSERT_EQ(exact_divide(f * g, g), f);
  }
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(evaluate_at_ones(poly("x1 + x2", 2)), Rational(2));
  const std::vector<Rational> point = {Rational(1, 2), Rational(3)};
  EXPECT_EQ(evaluate(poly("x1^2*x2 - x2", 2), point), Rational(3, 4) - Rational(3));
  EXPECT_THROW(evaluate(poly("x1", 2), std::vector<Rational>{Rational(1)}), VariableSpaceMismatch);
}

TEST(Polynomial, PartialDerivative) {
  const VariableSpace space = VariableSpace::plain(2);
  const RationalPolynomial f = parse_rational_polynomial("x1^3*x2 + 1/2*x2^2", space);
  EXPECT_EQ(partial_derivative(f, 0), parse_rational_polynomial("3*x1^2*x2", space));
  EXPECT_EQ(partial_derivative(f, 1, 2), parse_rational_polynomial("1", space));
  EXPECT_TRUE(partial_derivative(f, 0, 4).is_zero());
}

TEST(Polynomial, ComponentwiseOrder) {
  EXPECT_TRUE(componentwise_le(ExponentVector{1, 0, 1}, ExponentVector{1, 1, 1}));
  EXPECT_TRUE(componentwise_lt(ExponentVector{1, 0, 1}, ExponentVector{1, 1, 1}));
  EXPECT_FALSE(componentwise_lt(ExponentVector{1, 1, 1}, ExponentVector{1, 1, 1}));
  EXPECT_FALSE(componentwise_le(ExponentVector{2, 0, 0}, ExponentVector{1, 1, 1}));
}

TEST(Polynomial, ExponentLimits) {
  ExponentVector e(2);
  EXPECT_THROW(e.set(0, kMaxExponent + 1), InvalidArgument);
  EXPECT_THROW(e.set(0, -1), InvalidArgument);
  EXPECT_THROW(Polynomial(VariableSpace::plain(static_cast<int>(kMaxVariables) + 1)), InvalidArgument);
}
