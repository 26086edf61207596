#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "homcover/error.hpp"
#include "homcover/genseq.hpp"
#include "homcover/homomorphism.hpp"
#include "homcover/orbits.hpp"
#include "homcover/spec.hpp"
#include "oracles.hpp"

namespace {

using namespace homcover;

struct OrbitCase {
  std::string spec;
  std::size_t n;
};

class OrbitOracle : public ::testing::TestWithParam<OrbitCase> {};

// Both strategies reproduce the brute-force orbits: same representatives
// (least member of each orbit) and same sizes.
TEST_P(OrbitOracle, StrategiesMatchBruteForce) {
  FiniteGroup g = construct_group(GetParam().spec);
  std::size_t n = GetParam().n;
  auto expected = oracle::orbits(g, n);
  std::vector<Sequence> reps;
  std::vector<std::uint64_t> sizes;
  for (const auto& orbit : expected) {
    reps.push_back(orbit.front());
    sizes.push_back(orbit.size());
  }
  for (OrbitStrategy strategy :
       {OrbitStrategy::CompareRepresentatives, OrbitStrategy::AutomorphismAction, OrbitStrategy::Automatic}) {
    SCOPED_TRACE(std::string(strategy_name(strategy)));
    auto dec = orbit_decompose(g, n, strategy);
    EXPECT_EQ(dec.representatives, reps);
    EXPECT_EQ(dec.orbit_sizes, sizes);
    EXPECT_EQ(dec.h_n, reps.size());
    EXPECT_TRUE(dec.free_action);
  }
  EXPECT_EQ(aut_order(g), oracle::automorphisms(g).size());
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, OrbitOracle,
                         ::testing::Values(OrbitCase{"C2", 1}, OrbitCase{"C2", 2}, OrbitCase{"C6", 2},
                                           OrbitCase{"C2xC2", 2}, OrbitCase{"C2xC2", 3}, OrbitCase{"S3", 2},
                                           OrbitCase{"S3", 3}, OrbitCase{"Q8", 2}, OrbitCase{"D4", 2},
                                           OrbitCase{"C2xC4", 2}, OrbitCase{"A4", 2}, OrbitCase{"C3xC3", 2},
                                           OrbitCase{"pq(3,7)", 2}),
                         [](const auto& info) {
                           std::string name = info.param.spec + "_n" + std::to_string(info.param.n);
                           for (char& c : name) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return name;
                         });

// Graph-closure equivalence agrees with the independent test "the map
// s -> t extends to an automorphism".
TEST(Orbits, EquivalenceAgreesWithExtension) {
  for (std::string spec : {"S3", "Q8", "C2xC4", "A4"}) {
    FiniteGroup g = construct_group(spec);
    auto gamma = oracle::gamma(g, 2);
    for (std::size_t i = 0; i < gamma.size(); i += 3) {
      for (std::size_t j = 0; j < gamma.size(); j += 2) {
        auto f = extend_hom(g, gamma[i], g, gamma[j]);
        bool automorphism = f && f->is_injective();
        EXPECT_EQ(equivalent_sequences(g, gamma[i], gamma[j]), automorphism) << spec;
      }
    }
  }
}

TEST(Orbits, KnownHValues) {
  EXPECT_EQ(h_n(construct_group("C2xC3"), 2), 12u);
  EXPECT_EQ(h_n(construct_group("C2^2xC3^2"), 2), 1u);
  EXPECT_EQ(h_n(construct_group("A5"), 2), 19u);
  EXPECT_EQ(h_n(construct_group("S3"), 2), 3u);
  EXPECT_EQ(h_n(construct_group("C2"), 2), 3u);
  EXPECT_EQ(h_n(construct_group("C2xC2"), 2), 1u);
  EXPECT_EQ(h_n(construct_group("C2^3"), 2), 0u);
  EXPECT_EQ(aut_order(construct_group("A5")), 120u);
  EXPECT_EQ(aut_order(construct_group("C2^3")), 168u);
  EXPECT_EQ(aut_order(construct_group("C1")), 1u);
}

TEST(Orbits, Homogeneity) {
  EXPECT_TRUE(is_homogeneous(construct_group("C2xC2"), 2));
  EXPECT_TRUE(is_homogeneous(construct_group("C2^2xC3^2"), 2));
  EXPECT_FALSE(is_homogeneous(construct_group("C2xC3"), 2));
  EXPECT_FALSE(is_homogeneous(construct_group("S3"), 2));
}

TEST(Orbits, EnumeratedAutomorphismsAreDistinctAutomorphisms) {
  FiniteGroup g = construct_group("D4");
  auto auts = enumerate_aut(g);
  ASSERT_EQ(auts.size(), 8u);
  std::set<std::vector<std::uint32_t>> maps;
  for (const auto& a : auts) {
    std::vector<std::uint32_t> m;
    for (Element x : a.map()) m.push_back(x.id);
    EXPECT_TRUE(oracle::is_hom(g, g, m));
    EXPECT_TRUE(a.is_injective());
    maps.insert(m);
  }
  EXPECT_EQ(maps.size(), 8u);
}

TEST(Orbits, LargeElementaryAbelianBySweep) {
  // Orbits of GL(4,2) on surjections F2^5 -> F2^4 correspond to 4-dim
  // quotients of F2^5, so h_5(C2^4) is the Gaussian binomial [5 4]_2 = 31.
  FiniteGroup g = construct_group("C2^4");
  auto dec = orbit_decompose(g, 5, OrbitStrategy::AutomorphismAction);
  EXPECT_TRUE(dec.free_action);
  EXPECT_EQ(dec.orbit_size, 20160u);
  EXPECT_EQ(dec.h_n * 20160u, count_gamma(g, 5));
  EXPECT_EQ(dec.h_n, 31u);
}

TEST(Orbits, Preconditions) {
  try {
    orbit_decompose(construct_group("C2^3"), 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::PreconditionViolated);
  }
  Limits tiny;
  tiny.max_candidates = 100;
  try {
    orbit_decompose(construct_group("A5"), 2, OrbitStrategy::Automatic, tiny);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::EnumerationCapExceeded);
  }
}

TEST(Orbits, TrivialGroup) {
  auto dec = orbit_decompose(construct_group("C1"), 2);
  EXPECT_EQ(dec.h_n, 1u);
  EXPECT_EQ(dec.representatives, (std::vector<Sequence>{{kIdentity, kIdentity}}));
}

}  // namespace
