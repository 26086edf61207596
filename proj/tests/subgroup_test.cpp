#include <gtest/gtest.h>

#include <set>

#include "homcover/constructors.hpp"
#include "homcover/error.hpp"
#include "homcover/spec.hpp"
#include "homcover/subgroup.hpp"
#include "oracles.hpp"

namespace {

using namespace homcover;

std::set<std::uint32_t> ids(const Subgroup& s) {
  std::set<std::uint32_t> out;
  for (Element x : s.elements()) out.insert(x.id);
  return out;
}

// Normal subgroups by brute force: closed under conjugation by everything.
bool oracle_normal(const FiniteGroup& g, const std::set<std::uint32_t>& s) {
  for (auto x : s) {
    for (std::uint32_t y = 0; y < g.order(); ++y) {
      if (!s.count(g.conjugate(Element{x}, Element{y}).id)) return false;
    }
  }
  return true;
}

TEST(Subgroups, ClosureMatchesOracle) {
  FiniteGroup s4 = symmetric_group(4);
  for (std::uint32_t a = 0; a < s4.order(); ++a) {
    for (std::uint32_t b = a; b < s4.order(); b += 5) {
      std::vector<Element> gens{Element{a}, Element{b}};
      EXPECT_EQ(ids(closure(s4, gens)), oracle::closure(s4, gens));
    }
  }
}

TEST(Subgroups, TrivialAndWhole) {
  FiniteGroup q8 = quaternion_group();
  EXPECT_TRUE(trivial_subgroup(q8).is_trivial());
  EXPECT_TRUE(whole_group(q8).is_whole());
  EXPECT_TRUE(is_subset(trivial_subgroup(q8), whole_group(q8)));
  EXPECT_FALSE(is_subset(whole_group(q8), trivial_subgroup(q8)));
}

TEST(Subgroups, NormalityAgreesWithOracle) {
  for (FiniteGroup g : {symmetric_group(3), dihedral_group(4), quaternion_group(), alternating_group(4)}) {
    for (const auto& s : oracle::subgroups(g)) {
      std::vector<Element> elems;
      for (auto x : s) elems.push_back(Element{x});
      Subgroup sub = subgroup_from_elements(g, elems);
      EXPECT_EQ(is_normal(sub), oracle_normal(g, s)) << g.name();
    }
  }
}

TEST(Subgroups, NormalClosureOfTransposition) {
  FiniteGroup s4 = symmetric_group(4);
  Element t;
  for (std::uint32_t a = 1; a < 24; ++a) {
    if (s4.element_order(Element{a}) == 2) {
      t = Element{a};
      break;
    }
  }
  // All transpositions and double transpositions have order 2; either way the
  // normal closure is normal and contains t.
  std::vector<Element> seed{t};
  Subgroup n = normal_closure(s4, seed);
  EXPECT_TRUE(is_normal(n));
  EXPECT_TRUE(n.contains(t));
  EXPECT_TRUE(n.order() == 4 || n.order() == 24);
}

TEST(Subgroups, CentersAndDerivedSubgroups) {
  EXPECT_EQ(center(quaternion_group()).order(), 2u);
  EXPECT_EQ(center(dihedral_group(4)).order(), 2u);
  EXPECT_EQ(center(symmetric_group(3)).order(), 1u);
  EXPECT_EQ(center(cyclic_group(6)).order(), 6u);
  EXPECT_EQ(derived_subgroup(whole_group(symmetric_group(4))).order(), 12u);
  EXPECT_EQ(derived_subgroup(whole_group(alternating_group(4))).order(), 4u);
  EXPECT_EQ(derived_subgroup(whole_group(alternating_group(5))).order(), 60u);
  EXPECT_EQ(derived_subgroup(whole_group(quaternion_group())).order(), 2u);
}

TEST(Subgroups, SylowSubgroups) {
  FiniteGroup s4 = symmetric_group(4);
  EXPECT_EQ(sylow_subgroup(s4, 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(s4, 3).order(), 3u);
  FiniteGroup a5 = alternating_group(5);
  EXPECT_EQ(sylow_subgroup(a5, 2).order(), 4u);
  EXPECT_EQ(sylow_subgroup(a5, 5).order(), 5u);
  try {
    sylow_subgroup(s4, 5);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotADivisor);
  }
  try {
    sylow_subgroup(s4, 4);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(Subgroups, StructureFlags) {
  struct Case {
    std::string spec;
    StructureFlags flags;
    bool simple;
  };
  std::vector<Case> cases = {
      {"C6", {true, true, true}, false},      {"C5", {true, true, true}, true},
      {"Q8", {false, true, true}, false},     {"D4", {false, true, true}, false},
      {"S3", {false, false, true}, false},    {"A4", {false, false, true}, false},
      {"S4", {false, false, true}, false},    {"A5", {false, false, false}, true},
      {"pq(3,7)", {false, false, true}, false}, {"C1", {true, true, true}, false},
      {"S3xC2", {false, false, true}, false}, {"Q8xC3", {false, true, true}, false},
  };
  for (const auto& c : cases) {
    FiniteGroup g = construct_group(c.spec);
    EXPECT_EQ(structure_predicates(g), c.flags) << c.spec;
    EXPECT_EQ(is_simple(g), c.simple) << c.spec;
    EXPECT_EQ(is_abelian(g), c.flags.is_abelian) << c.spec;
  }
}

TEST(Subgroups, SeriesTerminate) {
  auto lcs = lower_central_series(symmetric_group(3));
  ASSERT_GE(lcs.size(), 2u);
  EXPECT_EQ(lcs.front().order(), 6u);
  EXPECT_EQ(lcs.back().order(), 3u);
  auto ds = derived_series(symmetric_group(4));
  std::vector<std::size_t> orders;
  for (const auto& s : ds) orders.push_back(s.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 12, 4, 1}));
}

TEST(Subgroups, SubgroupAsGroupPreservesMultiplication) {
  FiniteGroup s4 = symmetric_group(4);
  Subgroup a4 = derived_subgroup(whole_group(s4));
  FiniteGroup g = subgroup_as_group(a4);
  ASSERT_EQ(g.order(), 12u);
  EXPECT_EQ(check_group_axioms(g), "");
  auto elems = a4.elements();
  for (std::uint32_t i = 0; i < 12; ++i) {
    for (std::uint32_t j = 0; j < 12; ++j) {
      EXPECT_EQ(elems[g.multiply(Element{i}, Element{j}).id], s4.multiply(elems[i], elems[j]));
    }
  }
}

TEST(Subgroups, TupleSubgroupDiagonalAndFull) {
  FiniteGroup s3 = symmetric_group(3);
  Sequence gens(s3.generators().begin(), s3.generators().end());
  // Diagonal: every generator paired with itself.
  std::vector<Sequence> diag;
  for (Element x : gens) diag.push_back({x, x});
  FiniteGroup d = direct_power_subgroup(s3, 2, diag);
  EXPECT_EQ(d.order(), 6u);
  EXPECT_TRUE(d.is_tuple_group());
  EXPECT_EQ(d.arity(), 2u);
  EXPECT_EQ(check_group_axioms(d), "");

  // Identity tuple is element 0 and coordinates round-trip through find().
  EXPECT_EQ(d.coordinates(kIdentity)[0], 0u);
  for (std::uint32_t a = 0; a < d.order(); ++a) {
    auto c = d.coordinates(Element{a});
    std::vector<std::uint32_t> copy(c.begin(), c.end());
    EXPECT_EQ(d.find(copy), Element{a});
  }

  std::vector<Sequence> full;
  for (Element x : gens) full.push_back({x, kIdentity});
  for (Element x : gens) full.push_back({kIdentity, x});
  EXPECT_EQ(direct_power_subgroup(s3, 2, full).order(), 36u);
}

TEST(Subgroups, TupleSubgroupCap) {
  FiniteGroup c5 = cyclic_group(5);
  Limits small;
  small.max_closure = 20;
  std::vector<Sequence> gens = {{Element{1}, kIdentity}, {kIdentity, Element{1}}};
  try {
    direct_power_subgroup(c5, 2, gens, small);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ClosureCapExceeded);
  }
}

}  // namespace
