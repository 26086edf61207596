#include <gtest/gtest.h>

#include <set>

#include "homcover/error.hpp"
#include "homcover/genseq.hpp"
#include "homcover/lattice.hpp"
#include "homcover/spec.hpp"
#include "oracles.hpp"

namespace {

using namespace homcover;

std::set<std::set<std::uint32_t>> lattice_sets(const SubgroupLattice& lattice) {
  std::set<std::set<std::uint32_t>> out;
  for (const auto& s : lattice.subgroups()) {
    std::set<std::uint32_t> ids;
    for (Element x : s.elements()) ids.insert(x.id);
    out.insert(ids);
  }
  return out;
}

TEST(Lattice, SubgroupsMatchOracle) {
  for (std::string spec : {"C6", "S3", "Q8", "D4", "C2^3", "A4", "C2xC6", "D6", "C4xC4"}) {
    FiniteGroup g = construct_group(spec);
    auto lattice = subgroup_lattice(g);
    auto expected = oracle::subgroups(g);
    EXPECT_EQ(lattice_sets(lattice), std::set<std::set<std::uint32_t>>(expected.begin(), expected.end()))
        << spec;
  }
}

TEST(Lattice, KnownSubgroupCounts) {
  EXPECT_EQ(subgroup_lattice(construct_group("S4")).size(), 30u);
  EXPECT_EQ(subgroup_lattice(construct_group("A5")).size(), 59u);
  EXPECT_EQ(subgroup_lattice(construct_group("C2^4")).size(), 67u);
}

TEST(Lattice, OrderedByOrderWithMobiusAtTop) {
  auto lattice = subgroup_lattice(construct_group("S3"));
  ASSERT_EQ(lattice.size(), 6u);
  EXPECT_TRUE(lattice.subgroup(0).is_trivial());
  EXPECT_TRUE(lattice.subgroup(5).is_whole());
  EXPECT_EQ(lattice.mobius(5), 1);
  // The four maximal subgroups each have mu = -1, so mu(1, S3) = -(1 - 4) = 3.
  EXPECT_EQ(lattice.mobius(0), 3);
  for (std::size_t i = 0; i < lattice.size(); ++i) EXPECT_TRUE(lattice.includes(0, i));
}

TEST(Lattice, MobiusOfKnownGroups) {
  // mu(1, C_p^k) = (-1)^k p^(k(k-1)/2).
  EXPECT_EQ(subgroup_lattice(construct_group("C2^3")).mobius(0), -8);
  EXPECT_EQ(subgroup_lattice(construct_group("A5")).mobius(0), -60);
  EXPECT_EQ(subgroup_lattice(construct_group("S4")).mobius(0), -12);
}

TEST(Lattice, HallPhiMatchesOracleCounts) {
  for (std::string spec : {"C6", "S3", "Q8", "D4", "C2^3", "A4", "C3xC3", "pq(3,7)"}) {
    FiniteGroup g = construct_group(spec);
    auto lattice = subgroup_lattice(g);
    for (std::size_t n = 1; n <= 3; ++n) {
      if (g.order() > 12 && n == 3) continue;
      EXPECT_EQ(hall_phi(lattice, n), oracle::count_gamma(g, n)) << spec << " n=" << n;
    }
  }
  EXPECT_EQ(hall_phi(construct_group("A5"), 2), 2280u);
}

TEST(Lattice, NormalSubgroups) {
  EXPECT_EQ(normal_subgroups(subgroup_lattice(construct_group("S4"))).size(), 4u);
  EXPECT_EQ(normal_subgroups(subgroup_lattice(construct_group("A5"))).size(), 2u);
  EXPECT_EQ(normal_subgroups(subgroup_lattice(construct_group("Q8"))).size(), 6u);
}

TEST(Lattice, Caps) {
  Limits small;
  small.max_lattice_order = 10;
  try {
    subgroup_lattice(construct_group("C12"), small);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::LatticeCapExceeded);
  }
  Limits few;
  few.max_lattice_size = 10;
  EXPECT_THROW(subgroup_lattice(construct_group("S4"), few), Error);
}

TEST(Lattice, HallPhiOverflowDetected) {
  // |A5|^n overflows 64 bits at n = 11.
  try {
    hall_phi(construct_group("A5"), 12);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ArithmeticOverflow);
  }
}

}  // namespace
