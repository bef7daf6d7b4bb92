#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "grothkit/bpd.hpp"
#include "grothkit/engines.hpp"
#include "grothkit/errors.hpp"
#include "test_support.hpp"

using namespace grothkit;
using grothkit::testing::dual_poly;
using grothkit::testing::poly;

namespace {

std::set<std::string> encodings(const std::vector<BumplessPipeDream>& bpds) {
  std::set<std::string> out;
  for (const BumplessPipeDream& p : bpds) out.insert(p.encoding());
  return out;
}

}  // namespace

TEST(Bpd, TileCharacters) {
  for (char ch : std::string("rj-|+.")) EXPECT_EQ(tile_char(tile_from_char(ch)), ch);
  EXPECT_THROW(tile_from_char('x'), ParseError);
}

TEST(Bpd, RotheBpd) {
  const BumplessPipeDream id = rothe_bpd(Permutation::parse("1234"));
  EXPECT_TRUE(id.empty_cells().empty());
  EXPECT_EQ(id.rows(), (std::vector<std::string>{"r---", "|r--", "||r-", "|||r"}));

  const BumplessPipeDream p1342 = rothe_bpd(Permutation::parse("1342"));
  EXPECT_EQ(p1342.empty_cells(), (std::vector<Cell>{{2, 2}, {3, 2}}));
  EXPECT_EQ(p1342.trace(), Permutation::parse("1342"));

  const BumplessPipeDream p321 = rothe_bpd(Permutation::parse("321"));
  EXPECT_EQ(p321.empty_cells(), (std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}}));
}

TEST(Bpd, RotheInvariants) {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      const BumplessPipeDream p = rothe_bpd(w);
      ASSERT_EQ(p.trace(), w) << w.to_string();
      ASSERT_EQ(static_cast<int>(p.empty_cells().size()), length(w));
      ASSERT_TRUE(p.nw_elbows().empty());
      ASSERT_EQ(p.empty_cells(), rothe_diagram(w).cells);
      ASSERT_TRUE(k_droops(p).empty()) << w.to_string();
    }
  }
}

TEST(Bpd, TraceOfFigureGrids) {
  // The middle grid of the 1342 figure: pipe 1 drooped into (2,2).
  const BumplessPipeDream middle = BumplessPipeDream::from_rows({".r--", "rjr-", "|.|r", "|r++"});
  EXPECT_EQ(middle.trace(), Permutation::parse("1342"));
  EXPECT_EQ(trace_permutation(4, middle.tiles()), Permutation::parse("1342"));
}

TEST(Bpd, InvalidGrids) {
  EXPECT_THROW(BumplessPipeDream::from_rows({"..", ".."}), InvalidGrid);
  EXPECT_THROW(BumplessPipeDream::from_rows({"r-", "|"}), InvalidGrid);
  EXPECT_THROW(BumplessPipeDream::from_rows({"r.", "|r"}), InvalidGrid);
  EXPECT_THROW(BumplessPipeDream::from_rows({"|r", "|r"}), InvalidGrid);
  EXPECT_THROW(BumplessPipeDream::from_rows({"r-", "-r"}), InvalidGrid);
}

TEST(Bpd, DoubleCrossingReadsAsBump) {
  // Pipes 3 and 4 cross at (2,3) and again at (4,4).
  const BumplessPipeDream p = BumplessPipeDream::from_rows({"..r-", ".r+-", "r+jr", "||r+"});
  EXPECT_EQ(p.trace(), Permutation::parse("2143"));
  EXPECT_EQ(p.empty_cells().size(), 3u);
}

TEST(Bpd, Droops) {
  const std::vector<BumplessPipeDream> d1342 = droops(rothe_bpd(Permutation::parse("1342")));
  EXPECT_EQ(d1342.size(), 2u);
  for (const BumplessPipeDream& p : d1342) EXPECT_EQ(p.trace(), Permutation::parse("1342"));
  EXPECT_TRUE(droops(rothe_bpd(Permutation::parse("321"))).empty());
  EXPECT_EQ(droops(rothe_bpd(Permutation::parse("132"))).size(), 1u);
}

TEST(Bpd, DroopPreservesEmptyCountAndAddsOneElbow) {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      for (const BumplessPipeDream& p : enumerate_bpds(w)) {
        for (const BumplessPipeDream& q : droops(p)) {
          ASSERT_EQ(q.trace(), w);
          ASSERT_EQ(q.empty_cells().size(), p.empty_cells().size());
          ASSERT_EQ(q.nw_elbows().size(), p.nw_elbows().size() + 1);
        }
        for (const BumplessPipeDream& q : k_droops(p)) ASSERT_EQ(q.trace(), w);
      }
    }
  }
}

TEST(Bpd, EnumerateSmallCases) {
  EXPECT_EQ(enumerate_bpds(Permutation::parse("1234")).size(), 1u);
  EXPECT_EQ(enumerate_bpds(Permutation::parse("1342")).size(), 3u);
  EXPECT_EQ(enumerate_bpds(Permutation::parse("132")).size(), 2u);
  EXPECT_EQ(enumerate_bpds(Permutation::parse("2143")).size(), 4u);
  EXPECT_THROW(enumerate_bpds(Permutation::identity(7)), BoundExceeded);
}

TEST(Bpd, KDroopsAddNothingFor1342) {
  const Permutation w = Permutation::parse("1342");
  EXPECT_EQ(encodings(enumerate_droop_closure(w)), encodings(enumerate_bpds(w)));
}

TEST(Bpd, KDroopsNeededFor21534) {
  const Permutation w = Permutation::parse("21534");
  const std::set<std::string> droop_only = encodings(enumerate_droop_closure(w));
  const std::set<std::string> full = encodings(enumerate_bpds(w));
  EXPECT_TRUE(std::includes(full.begin(), full.end(), droop_only.begin(), droop_only.end()));
  EXPECT_GT(full.size(), droop_only.size());
}

TEST(Bpd, ClosureEqualsBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      const std::vector<BumplessPipeDream> closure = enumerate_bpds(w);
      ASSERT_EQ(closure, enumerate_bpds_bruteforce(w)) << w.to_string();
      ASSERT_TRUE(std::is_sorted(closure.begin(), closure.end()));
      for (const BumplessPipeDream& p : closure) ASSERT_EQ(p.trace(), w);
    }
  }
  std::vector<Permutation> s5 = all_permutations(5);
  std::mt19937 rng(7);
  std::shuffle(s5.begin(), s5.end(), rng);
  for (int k = 0; k < 20; ++k) {
    ASSERT_EQ(enumerate_bpds(s5[k]), enumerate_bpds_bruteforce(s5[k])) << s5[k].to_string();
  }
}

TEST(Bpd, BruteForceGuards) {
  EXPECT_EQ(enumerate_bpds_bruteforce(Permutation::parse("1342")).size(), 3u);
  EXPECT_EQ(enumerate_bpds_bruteforce(Permutation::parse("321")).size(), 1u);
  EXPECT_THROW(enumerate_bpds_bruteforce(Permutation::identity(7)), BoundExceeded);
  EXPECT_THROW(enumerate_all_grids(6), BoundExceeded);
}

TEST(Bpd, AllGridsPartitionBySymmetricGroup) {
  for (int n = 1; n <= 3; ++n) {
    const std::vector<BumplessPipeDream> grids = enumerate_all_grids(n);
    std::size_t total = 0;
    std::set<std::string> seen;
    for (const Permutation& w : enumerate_sn(n)) {
      for (const BumplessPipeDream& p : enumerate_bpds_bruteforce(w)) {
        ASSERT_TRUE(seen.insert(p.encoding()).second);
        ++total;
      }
    }
    EXPECT_EQ(total, grids.size());
    EXPECT_EQ(seen, encodings(grids));
  }
}

TEST(Bpd, WeightSingle) {
  const std::vector<BumplessPipeDream> all = enumerate_bpds(Permutation::parse("1342"));
  const BumplessPipeDream rothe = rothe_bpd(Permutation::parse("1342"));
  EXPECT_EQ(weight_single(rothe), poly("x2*x3", 4));
  const BumplessPipeDream middle = BumplessPipeDream::from_rows({".r--", "rjr-", "|.|r", "|r++"});
  EXPECT_NE(std::find(all.begin(), all.end(), middle), all.end());
  EXPECT_EQ(weight_single(middle), poly("x1*x3 - x1*x2*x3", 4));
  EXPECT_EQ(weight_single(rothe_bpd(Permutation::parse("321"))), poly("x1^2*x2", 3));
}

TEST(Bpd, WeightDouble) {
  const BumplessPipeDream rothe = rothe_bpd(Permutation::parse("1342"));
  EXPECT_EQ(weight_double(rothe), dual_poly("x2 + y2 - x2*y2", 4) * dual_poly("x3 + y2 - x3*y2", 4));
  const BumplessPipeDream third = BumplessPipeDream::from_rows({".r--", ".|r-", "rj|r", "|r++"});
  EXPECT_EQ(third.trace(), Permutation::parse("1342"));
  EXPECT_EQ(weight_double(third), dual_poly("x1 + y1 - x1*y1", 4) * dual_poly("x2 + y1 - x2*y1", 4) *
                                      dual_poly("1 - x3 - y2 + x3*y2", 4));
  EXPECT_EQ(weight_double(rothe_bpd(Permutation::parse("12"))), dual_poly("1", 2));
}

TEST(Bpd, WeightsSumToGrothendieck) {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : enumerate_sn(n)) {
      Polynomial sum(engine_space(n, Variant::Single));
      for (const BumplessPipeDream& p : enumerate_bpds(w)) sum += weight_single(p);
      ASSERT_EQ(sum, grothendieck_dd(w, Variant::Single)) << w.to_string();
    }
  }
}

TEST(Bpd, RenderAndPipeRoutes) {
  const BumplessPipeDream p = rothe_bpd(Permutation::parse("132"));
  EXPECT_EQ(p.render(), "r--\n|.r\n|r+\n");
  EXPECT_EQ(p.pipe_route(1), (std::vector<Cell>{{3, 1}, {2, 1}, {1, 1}, {1, 2}, {1, 3}}));
  EXPECT_THROW(p.pipe_route(4), InvalidArgument);
}
