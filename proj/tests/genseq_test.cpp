#include <gtest/gtest.h>

#include <map>
#include <random>

#include "homcover/constructors.hpp"
#include "homcover/error.hpp"
#include "homcover/genseq.hpp"
#include "homcover/spec.hpp"
#include "oracles.hpp"

namespace {

using namespace homcover;

const std::vector<std::string> kSmallGroups = {"C1", "C2", "C6", "C2xC2", "S3", "Q8", "D4", "C2xC4",
                                               "A4", "C3xC3", "D5", "pq(3,7)"};

TEST(GeneratingSequences, EnumerationMatchesOracle) {
  for (const auto& spec : kSmallGroups) {
    FiniteGroup g = construct_group(spec);
    for (std::size_t n = 1; n <= 3; ++n) {
      if (g.order() > 12 && n == 3) continue;
      auto expected = oracle::gamma(g, n);
      EXPECT_EQ(enumerate_gamma(g, n), expected) << spec << " n=" << n;
      EXPECT_EQ(count_gamma(g, n), expected.size()) << spec << " n=" << n;
      EXPECT_EQ(count_gamma_by_enumeration(g, n), expected.size()) << spec << " n=" << n;
    }
  }
}

TEST(GeneratingSequences, KnownCounts) {
  EXPECT_EQ(count_gamma(construct_group("C2xC3"), 2), 24u);
  EXPECT_EQ(count_gamma(construct_group("A5"), 2), 2280u);
  EXPECT_EQ(count_gamma(construct_group("S3"), 2), 18u);
  EXPECT_EQ(count_gamma(construct_group("C2"), 1), 1u);
}

TEST(GeneratingSequences, CountIsExactBeyondEnumerationCap) {
  // Phi-function of C2^4 at n = 6: prod_{i=0}^{3} (2^6 - 2^i).
  FiniteGroup g = construct_group("C2^4");
  EXPECT_EQ(count_gamma(g, 6), 63ull * 62 * 60 * 56);
  Limits tiny;
  tiny.max_candidates = 1000;
  EXPECT_THROW(count_gamma_by_enumeration(g, 6, tiny), Error);
}

TEST(GeneratingSequences, Ranks) {
  std::map<std::string, std::size_t> expected = {
      {"C1", 0}, {"C7", 1}, {"C2xC3", 1}, {"C2xC2", 2}, {"C2^3", 3}, {"S3", 2},
      {"Q8", 2}, {"A5", 2}, {"C2xC2xC3", 2}, {"C2^2xC3^2", 2}, {"S3xS3", 2},
  };
  for (const auto& [spec, r] : expected) EXPECT_EQ(rank(construct_group(spec)), r) << spec;
}

TEST(GeneratingSequences, RankAgreesWithOracle) {
  for (const auto& spec : kSmallGroups) {
    FiniteGroup g = construct_group(spec);
    std::size_t r = 0;
    while (oracle::count_gamma(g, r) == 0) ++r;
    EXPECT_EQ(rank(g), r) << spec;
  }
}

TEST(GeneratingSequences, FirstSequenceIsLexFirst) {
  for (const auto& spec : kSmallGroups) {
    FiniteGroup g = construct_group(spec);
    std::size_t n = std::max<std::size_t>(rank(g), 1);
    auto all = oracle::gamma(g, n);
    auto first = first_generating_sequence(g, n);
    ASSERT_TRUE(first) << spec;
    EXPECT_EQ(*first, all.front()) << spec;
  }
  EXPECT_FALSE(first_generating_sequence(construct_group("C2^3"), 2));
}

TEST(GeneratingSequences, Irredundance) {
  FiniteGroup c6 = cyclic_group(6);
  Sequence gen{Element{1}};
  Sequence redundant{Element{2}, Element{3}, Element{1}};
  Sequence pair{Element{2}, Element{3}};
  EXPECT_TRUE(is_irredundant(c6, gen));
  EXPECT_TRUE(is_irredundant(c6, pair));
  EXPECT_TRUE(is_generating(c6, redundant));
  EXPECT_FALSE(is_irredundant(c6, redundant));
  EXPECT_FALSE(is_irredundant_exhaustive(c6, redundant));
  Sequence seven(7, Element{1});
  EXPECT_THROW(is_irredundant_exhaustive(c6, seven), Error);
}

TEST(GeneratingSequences, EnumerationCap) {
  Limits tiny;
  tiny.max_candidates = 100;
  FiniteGroup s4 = symmetric_group(4);
  try {
    enumerate_gamma(s4, 2, tiny);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::EnumerationCapExceeded);
  }
  EXPECT_EQ(candidate_count(s4, 2), 576u);
  EXPECT_EQ(candidate_count(s4, 100), UINT64_MAX);
}

TEST(GeneratingSequences, EarlyStopHonored) {
  std::size_t seen = 0;
  for_each_generating_sequence(symmetric_group(4), 2, [&](std::span<const Element>) {
    return ++seen < 5;
  });
  EXPECT_EQ(seen, 5u);
}

TEST(GeneratingSequences, SamplerIsUniformOverGamma) {
  FiniteGroup s3 = symmetric_group(3);
  auto all = oracle::gamma(s3, 2);
  std::map<Sequence, int> hits;
  std::mt19937_64 rng(11);
  const int draws = 18000;
  for (int i = 0; i < draws; ++i) {
    auto s = sample_generating_sequence(s3, 2, rng);
    ASSERT_TRUE(s);
    ++hits[*s];
  }
  EXPECT_EQ(hits.size(), all.size());
  for (const auto& seq : all) {
    // Expected 1000 each; 6 standard deviations is about 190.
    EXPECT_NEAR(hits[seq], draws / static_cast<int>(all.size()), 190);
  }
  EXPECT_FALSE(sample_generating_sequence(construct_group("C2^3"), 2, rng));
}

TEST(GeneratingSequences, ZeroLengthRejected) {
  EXPECT_THROW(count_gamma(cyclic_group(3), 0), Error);
}

}  // namespace
