#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "grothkit/engines.hpp"
#include "grothkit/errors.hpp"
#include "test_support.hpp"

using namespace grothkit;
using grothkit::testing::dual_poly;
using grothkit::testing::poly;

namespace {

Permutation perm(const char* text) { return Permutation::parse(text); }

// The three BPD summands of G_1342(x;y), written as products.
Polynomial g1342_display() {
  auto f = [](const char* text) { return dual_poly(text, 4); };
  return f("x2 + y2 - x2*y2") * f("x3 + y2 - x3*y2") +
         f("x1 + y1 - x1*y1") * f("1 - x2 - y2 + x2*y2") * f("x3 + y2 - x3*y2") +
         f("x1 + y1 - x1*y1") * f("x2 + y1 - x2*y1") * f("1 - x3 - y2 + x3*y2");
}

}  // namespace

TEST(Engines, GrothendieckSmallCases) {
  EXPECT_EQ(grothendieck_dd(perm("21"), Variant::Single), poly("x1", 2));
  EXPECT_EQ(grothendieck_dd(perm("132"), Variant::Single), poly("x1 + x2 - x1*x2", 3));
  EXPECT_EQ(grothendieck_dd(perm("1234"), Variant::Single), poly("1", 4));
  EXPECT_EQ(grothendieck_dd(perm("1342"), Variant::Single),
            poly("x1*x2 + x1*x3 + x2*x3 - 2*x1*x2*x3", 4));
  EXPECT_EQ(grothendieck_dd(perm("132"), Variant::Double),
            dual_poly("x1 + x2 - x1*x2 + y1 + y2 - y1*y2 - x1*y1 - x1*y2 - x2*y1 - x2*y2"
                      " + x1*y1*y2 + x2*y1*y2 + x1*x2*y1 + x1*x2*y2 - x1*x2*y1*y2",
                      3));
}

TEST(Engines, MatchesIndependentExpansions) {
  EXPECT_EQ(grothendieck_dd(perm("2143"), Variant::Single),
            poly("x1^2*x2*x3 - x1^2*x2 - x1^2*x3 + x1^2 - x1*x2*x3 + x1*x2 + x1*x3", 4));
  EXPECT_EQ(grothendieck_dd(perm("1432"), Variant::Single),
            poly("x1^2*x2^2*x3 - x1^2*x2^2 - 2*x1^2*x2*x3 + x1^2*x2 + x1^2*x3 - 2*x1*x2^2*x3"
                 " + x1*x2^2 + x1*x2*x3 + x2^2*x3",
                 4));
  EXPECT_EQ(grothendieck_dd(perm("3142"), Variant::Single), poly("x1^2*x2 + x1^2*x3 - x1^2*x2*x3", 4));
  EXPECT_EQ(schubert_dd(perm("1432"), Variant::Single),
            poly("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3", 4));
  EXPECT_EQ(schubert_dd(perm("13254"), Variant::Single),
            poly("x1^2 + 2*x1*x2 + x1*x3 + x1*x4 + x2^2 + x2*x3 + x2*x4", 5));
}

TEST(Engines, SchubertSmallCases) {
  EXPECT_EQ(schubert_dd(perm("21"), Variant::Single), poly("x1", 2));
  EXPECT_EQ(schubert_dd(perm("132"), Variant::Single), poly("x1 + x2", 3));
  EXPECT_EQ(schubert_dd(perm("1342"), Variant::Single), poly("x1*x2 + x1*x3 + x2*x3", 4));
  EXPECT_EQ(schubert_dd(perm("21"), Variant::Double), dual_poly("x1 - y1", 2));
}

TEST(Engines, Display1342BothEngines) {
  const Polynomial expected = g1342_display();
  EXPECT_EQ(grothendieck_dd(perm("1342"), Variant::Double), expected);
  EXPECT_EQ(grothendieck_bpd(perm("1342"), Variant::Double), expected);
  EXPECT_EQ(grothendieck_bpd(perm("1342"), Variant::Single),
            poly("x1*x2 + x1*x3 + x2*x3 - 2*x1*x2*x3", 4));
  EXPECT_EQ(grothendieck_bpd(perm("1234"), Variant::Single), poly("1", 4));
}

TEST(Engines, DominantProducts) {
  EXPECT_EQ(dominant_grothendieck(perm("321"), Variant::Single), poly("x1^2*x2", 3));
  EXPECT_EQ(dominant_schubert(perm("21"), Variant::Double), dual_poly("x1 - y1", 2));
  EXPECT_THROW(dominant_grothendieck(perm("132"), Variant::Single), InvalidArgument);
}

TEST(Engines, BpdEqualsDividedDifference) {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      ASSERT_EQ(grothendieck_bpd(w, Variant::Single), grothendieck_dd(w, Variant::Single)) << w.to_string();
      ASSERT_EQ(grothendieck_bpd(w, Variant::Double), grothendieck_dd(w, Variant::Double)) << w.to_string();
    }
  }
  EXPECT_THROW(grothendieck_bpd(Permutation::identity(7), Variant::Single), BoundExceeded);
}

TEST(Engines, LowestComponentIsSchubert) {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      const Polynomial g = grothendieck_dd(w, Variant::Single);
      ASSERT_EQ(g.min_degree(), length(w));
      ASSERT_EQ(homogeneous_component(g, length(w)), schubert_dd(w, Variant::Single)) << w.to_string();
    }
  }
}

TEST(Engines, ShortcutMatchesClimbFromLongest) {
  const EngineOptions full{DescentStrategy::SmallestAscent, false};
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      ASSERT_EQ(grothendieck_dd(w, Variant::Double), grothendieck_dd(w, Variant::Double, full));
      ASSERT_EQ(schubert_dd(w, Variant::Double), schubert_dd(w, Variant::Double, full));
    }
  }
}

TEST(Engines, PathIndependence) {
  std::vector<Permutation> s6 = all_permutations(6);
  std::mt19937 rng(314);
  std::shuffle(s6.begin(), s6.end(), rng);
  const EngineOptions largest{DescentStrategy::LargestAscent, false};
  for (int k = 0; k < 50; ++k) {
    const Permutation& w = s6[k];
    ASSERT_EQ(grothendieck_dd(w, Variant::Single), grothendieck_dd(w, Variant::Single, largest)) << w.to_string();
  }
}

TEST(Engines, DoubleSpecializesToSingle) {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      const Polynomial g = set_y_zero(grothendieck_dd(w, Variant::Double));
      ASSERT_EQ(embed(g, engine_space(n, Variant::Single)), grothendieck_dd(w, Variant::Single));
      const Polynomial s = set_y_zero(schubert_dd(w, Variant::Double));
      ASSERT_EQ(embed(s, engine_space(n, Variant::Single)), schubert_dd(w, Variant::Single));
    }
  }
}

TEST(Engines, Compute) {
  EXPECT_EQ(compute(perm("21"), Kind::Schubert, Variant::Single, Engine::DividedDifference), poly("x1", 2));
  for (const Permutation& w : all_permutations(4)) {
    for (Variant v : {Variant::Single, Variant::Double}) {
      ASSERT_EQ(compute(w, Kind::Schubert, v, Engine::Bpd), compute(w, Kind::Schubert, v, Engine::DividedDifference))
          << w.to_string();
      ASSERT_EQ(compute(w, Kind::Grothendieck, v, Engine::Bpd),
                compute(w, Kind::Grothendieck, v, Engine::DividedDifference));
    }
  }
}

TEST(Engines, GTilde) {
  EXPECT_EQ(g_tilde(perm("1342")), poly("x1*x2 + x1*x3 + x2*x3 + 2*x1*x2*x3", 4));
  EXPECT_EQ(g_tilde(perm("21")), poly("x1", 2));
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      const Polynomial g = grothendieck_dd(w, Variant::Single);
      const Polynomial t = g_tilde(w);
      ASSERT_EQ(t, absolute_coefficients(g)) << w.to_string();
    }
  }
}

TEST(Engines, STildeDouble) {
  EXPECT_EQ(s_tilde_double(perm("21")), dual_poly("x1 + y1", 2));
  EXPECT_EQ(s_tilde_double(perm("132")), dual_poly("x1 + x2 + y1 + y2", 3));
}

TEST(Engines, GHat) {
  const VariableSpace space = VariableSpace::plain(3).with_z();
  EXPECT_EQ(g_hat(perm("132")), parse_polynomial("x1*z + x2*z + x1*x2", space));
  const Polynomial h = g_hat(perm("1342"));
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_EQ(h.total_degree(), 3);
}

TEST(Engines, DegreeD) {
  EXPECT_EQ(degree_d(perm("1234")), 0);
  EXPECT_EQ(degree_d(perm("1342")), 3);
  EXPECT_EQ(degree_d(perm("21")), 1);
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      const int d = degree_d(w);
      ASSERT_GE(d, length(w));
      ASSERT_EQ(d == length(w), grothendieck_dd(w, Variant::Single).is_homogeneous());
    }
  }
}

TEST(Engines, CacheClearGivesSameResults) {
  const Polynomial before = grothendieck_dd(perm("31524"), Variant::Double);
  clear_engine_cache();
  EXPECT_EQ(grothendieck_dd(perm("31524"), Variant::Double), before);
}
