#include <gtest/gtest.h>

#include <random>
#include <set>

#include "homcover/constructors.hpp"
#include "homcover/error.hpp"
#include "homcover/genseq.hpp"
#include "homcover/homomorphism.hpp"
#include "homcover/spec.hpp"
#include "homcover/subgroup.hpp"
#include "oracles.hpp"

namespace {

using namespace homcover;

std::vector<std::uint32_t> raw_map(const Homomorphism& f) {
  std::vector<std::uint32_t> out;
  for (Element x : f.map()) out.push_back(x.id);
  return out;
}

// Every (gens -> images) assignment agrees with the word-map oracle: the
// library finds a homomorphism exactly when the oracle's map is well defined
// and multiplicative, and then the maps coincide.
TEST(Homomorphisms, ExtendHomMatchesOracleExhaustively) {
  struct Pair {
    std::string g, h;
  };
  for (const Pair& p : std::vector<Pair>{{"S3", "C2"}, {"S3", "S3"}, {"C6", "C3"}, {"Q8", "C2xC2"},
                                         {"D4", "C2xC2"}, {"C4", "C2"}}) {
    FiniteGroup g = construct_group(p.g), h = construct_group(p.h);
    Sequence gens(g.generators().begin(), g.generators().end());
    oracle::for_each_tuple(h, gens.size(), [&](const std::vector<Element>& images) {
      auto f = extend_hom(g, gens, h, images);
      auto expected = oracle::word_map(g, gens, h, images);
      bool ok = expected && oracle::is_hom(g, h, *expected);
      ASSERT_EQ(f.has_value(), ok) << p.g << " -> " << p.h;
      if (f) EXPECT_EQ(raw_map(*f), *expected);
    });
  }
}

TEST(Homomorphisms, ExtendHomPreconditions) {
  FiniteGroup s3 = symmetric_group(3);
  Sequence one{Element{1}};
  EXPECT_THROW(extend_hom(s3, one, s3, one), Error);  // does not generate
  Sequence gens(s3.generators().begin(), s3.generators().end());
  Sequence short_images{kIdentity};
  if (gens.size() != 1) EXPECT_THROW(extend_hom(s3, gens, s3, short_images), Error);
}

TEST(Homomorphisms, KernelImageAndComposition) {
  FiniteGroup s3 = symmetric_group(3), c2 = cyclic_group(2);
  // Sign map: find any surjection S3 -> C2.
  auto sign = find_surjection(s3, c2);
  ASSERT_TRUE(sign);
  EXPECT_TRUE(oracle::is_hom(s3, c2, raw_map(*sign)));
  EXPECT_TRUE(sign->is_surjective());
  EXPECT_FALSE(sign->is_injective());
  EXPECT_EQ(sign->kernel().order(), 3u);
  EXPECT_EQ(sign->image().order(), 2u);

  Homomorphism id = identity_hom(s3);
  EXPECT_TRUE(id.is_injective());
  Homomorphism composed = compose(*sign, id);
  EXPECT_EQ(raw_map(composed), raw_map(*sign));
}

TEST(Homomorphisms, IsomorphismSearch) {
  struct Case {
    std::string a, b;
    bool iso;
  };
  std::vector<Case> cases = {
      {"C2xC3", "C6", true},       {"pq(2,3)", "S3", true},     {"D3", "S3", true},
      {"C2xC2", "C4", false},      {"Q8", "D4", false},         {"C2xC4", "C8", false},
      {"S4", "A4xC2", false},      {"C3xS3", "pq(2,3)xC3", true}, {"C2^3", "C2xC4", false},
      {"A4", "A4", true},          {"C2xC6", "C2xC2xC3", true},
  };
  for (const auto& c : cases) {
    FiniteGroup a = construct_group(c.a), b = construct_group(c.b);
    auto f = find_isomorphism(a, b);
    EXPECT_EQ(f.has_value(), c.iso) << c.a << " vs " << c.b;
    if (f) {
      auto map = raw_map(*f);
      EXPECT_TRUE(oracle::is_hom(a, b, map));
      std::set<std::uint32_t> image(map.begin(), map.end());
      EXPECT_EQ(image.size(), b.order());
    }
  }
}

TEST(Homomorphisms, SurjectionSearchRespectsDivisibility) {
  FiniteGroup s4 = symmetric_group(4);
  EXPECT_TRUE(find_surjection(s4, symmetric_group(3)));
  EXPECT_TRUE(find_surjection(s4, cyclic_group(2)));
  EXPECT_FALSE(find_surjection(s4, cyclic_group(3)));
  EXPECT_FALSE(find_surjection(s4, cyclic_group(5)));
  EXPECT_FALSE(find_surjection(alternating_group(5), cyclic_group(2)));

  FiniteGroup c6 = cyclic_group(6), c2 = cyclic_group(2);
  Prescription ok{{Element{1}}, {Element{1}}};
  EXPECT_TRUE(find_surjection(c6, c2, ok));
  Prescription trivial{{Element{1}}, {kIdentity}};
  EXPECT_FALSE(find_surjection(c6, c2, trivial));
}

TEST(Homomorphisms, QuotientGroups) {
  FiniteGroup s4 = symmetric_group(4);
  Subgroup v4 = derived_subgroup(derived_subgroup(whole_group(s4)));
  ASSERT_EQ(v4.order(), 4u);
  QuotientResult q = quotient_group(s4, v4);
  EXPECT_EQ(q.group.order(), 6u);
  EXPECT_TRUE(find_isomorphism(q.group, symmetric_group(3)));
  EXPECT_TRUE(oracle::is_hom(s4, q.group, raw_map(q.projection)));
  EXPECT_EQ(q.projection.kernel(), v4);

  Subgroup not_normal = closure(s4, std::vector<Element>{Element{1}});
  if (!is_normal(not_normal)) {
    try {
      quotient_group(s4, not_normal);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::NotNormal);
    }
  }
}

// Lifts random generating tuples of quotients and checks the result with the
// oracle closure.
TEST(Homomorphisms, GaschutzLiftProducesGeneratingPreimage) {
  std::mt19937_64 rng(7);
  for (std::string spec : {"S4", "C2xC4", "Q8", "D6", "C6xC2", "A4"}) {
    FiniteGroup g = construct_group(spec);
    std::size_t r = rank(g);
    for (const auto& normal : {center(g), derived_subgroup(whole_group(g))}) {
      if (normal.is_whole()) continue;
      QuotientResult q = quotient_group(g, normal);
      for (std::size_t n = r; n <= r + 1; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
          auto s = sample_generating_sequence(q.group, n, rng);
          ASSERT_TRUE(s);
          Sequence t = lift_gaschutz(q.projection, *s);
          ASSERT_EQ(t.size(), n);
          EXPECT_TRUE(oracle::generates(g, t)) << spec;
          for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(q.projection.apply(t[i]), (*s)[i]);
        }
      }
    }
  }
}

TEST(Homomorphisms, GaschutzPreconditions) {
  FiniteGroup s4 = symmetric_group(4);
  Subgroup a4 = derived_subgroup(whole_group(s4));
  QuotientResult q = quotient_group(s4, a4);
  Sequence too_short{Element{1}};
  try {
    lift_gaschutz(q.projection, too_short);  // rank(S4) = 2 > 1
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::PreconditionViolated);
  }
  Sequence not_generating{kIdentity, kIdentity};
  EXPECT_THROW(lift_gaschutz(q.projection, not_generating), Error);
}

}  // namespace
