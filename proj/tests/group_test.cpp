#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "homcover/constructors.hpp"
#include "homcover/error.hpp"
#include "homcover/group.hpp"
#include "oracles.hpp"

namespace {

using namespace homcover;

Element e(std::uint32_t id) { return Element{id}; }

template <typename F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::IoError;
}

std::map<std::uint64_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::uint64_t, std::size_t> hist;
  for (std::uint32_t a = 0; a < g.order(); ++a) ++hist[g.element_order(e(a))];
  return hist;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(GroupCore, TrivialGroup) {
  FiniteGroup g;
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.exponent(), 1u);
  EXPECT_TRUE(g.generators().empty());
  EXPECT_EQ(check_group_axioms(g), "");
}

TEST(GroupCore, CyclicArithmetic) {
  FiniteGroup c6 = cyclic_group(6);
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_EQ(c6.multiply(e(1), e(5)), kIdentity);
  EXPECT_EQ(c6.invert(e(2)), e(4));
  EXPECT_EQ(c6.power(e(1), -1), e(5));
  EXPECT_EQ(c6.power(e(2), 7), e(2));
  EXPECT_EQ(c6.exponent(), 6u);
  EXPECT_EQ(c6.element_order(e(4)), 3u);
}

TEST(GroupCore, ProductOfCoprimeCyclicsHasFullExponent) {
  std::vector<FiniteGroup> factors{cyclic_group(2), cyclic_group(3)};
  FiniteGroup g = direct_product(factors);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.exponent(), 6u);
  EXPECT_EQ(check_group_axioms(g), "");
  for (std::uint32_t a = 0; a < 6; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) EXPECT_EQ(g.multiply(e(a), e(b)), g.multiply(e(b), e(a)));
  }
}

TEST(GroupCore, SymmetricGroupS3) {
  FiniteGroup s3 = symmetric_group(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.exponent(), 6u);
  auto hist = order_histogram(s3);
  EXPECT_EQ(hist[1], 1u);
  EXPECT_EQ(hist[2], 3u);
  EXPECT_EQ(hist[3], 2u);
  // Two distinct transpositions multiply to a 3-cycle.
  std::vector<Element> transpositions;
  for (std::uint32_t a = 0; a < 6; ++a) {
    if (s3.element_order(e(a)) == 2) transpositions.push_back(e(a));
  }
  ASSERT_EQ(transpositions.size(), 3u);
  EXPECT_EQ(s3.element_order(s3.multiply(transpositions[0], transpositions[1])), 3u);
}

TEST(GroupCore, CommutatorAndConjugateConventions) {
  FiniteGroup s3 = symmetric_group(3);
  for (std::uint32_t a = 0; a < 6; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) {
      Element x = e(a), y = e(b);
      Element expected_comm = s3.multiply(s3.multiply(s3.invert(x), s3.invert(y)), s3.multiply(x, y));
      EXPECT_EQ(s3.commutator(x, y), expected_comm);
      EXPECT_EQ(s3.conjugate(x, y), s3.multiply(s3.multiply(s3.invert(y), x), y));
    }
  }
}

TEST(GroupCore, ConstructorsSatisfyAxiomsAndOrders) {
  struct Case {
    FiniteGroup g;
    std::size_t order;
    std::uint64_t exponent;
  };
  std::vector<Case> cases = {
      {cyclic_group(1), 1, 1},         {cyclic_group(12), 12, 12},
      {dihedral_group(4), 8, 4},       {dihedral_group(5), 10, 10},
      {quaternion_group(), 8, 4},      {symmetric_group(4), 24, 12},
      {alternating_group(4), 12, 6},   {alternating_group(5), 60, 30},
      {pq_group(2, 3), 6, 6},          {pq_group(3, 7), 21, 21},
      {elementary_abelian_group(2, 3), 8, 2},
  };
  for (const auto& c : cases) {
    SCOPED_TRACE(c.g.name());
    EXPECT_EQ(c.g.order(), c.order);
    EXPECT_EQ(c.g.exponent(), c.exponent);
    EXPECT_EQ(check_group_axioms(c.g), "");
    EXPECT_TRUE(oracle::generates(c.g, {c.g.generators().begin(), c.g.generators().end()}));
  }
}

TEST(GroupCore, QuaternionElementOrders) {
  auto hist = order_histogram(quaternion_group());
  EXPECT_EQ(hist[1], 1u);
  EXPECT_EQ(hist[2], 1u);
  EXPECT_EQ(hist[4], 6u);
}

TEST(GroupCore, DihedralVersusQuaternionHistograms) {
  auto d4 = order_histogram(dihedral_group(4));
  EXPECT_EQ(d4[2], 5u);
  EXPECT_EQ(d4[4], 2u);
}

TEST(GroupCore, PqGroupIsNonabelianWithDocumentedIds) {
  FiniteGroup g = pq_group(3, 7);
  bool commutes = true;
  for (std::uint32_t a = 0; a < g.order() && commutes; ++a) {
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      if (g.multiply(e(a), e(b)) != g.multiply(e(b), e(a))) {
        commutes = false;
        break;
      }
    }
  }
  EXPECT_FALSE(commutes);
  // x = id 1 generates the normal C7, y = id 7 has order 3.
  EXPECT_EQ(g.element_order(e(1)), 7u);
  EXPECT_EQ(g.element_order(e(7)), 3u);
  EXPECT_EQ(pq_scalar(3, 7), 2u);
}

TEST(GroupCore, InvalidParametersAreRejected) {
  EXPECT_EQ(error_kind_of([] { pq_group(3, 5); }), ErrorKind::InvalidPQ);
  EXPECT_EQ(error_kind_of([] { pq_group(4, 5); }), ErrorKind::InvalidPQ);
  EXPECT_EQ(error_kind_of([] { symmetric_group(9); }), ErrorKind::InvalidSpec);
  Limits small;
  small.max_table_order = 50;
  EXPECT_EQ(error_kind_of([&] { cyclic_group(51, small); }), ErrorKind::OrderCapExceeded);
  EXPECT_EQ(error_kind_of([&] { alternating_group(5, small); }), ErrorKind::OrderCapExceeded);
}

TEST(GroupCore, FromTableRejectsBrokenTables) {
  // Latin square but not associative: the "group" of order 5 with a
  // non-cyclic multiplication pattern.
  std::vector<std::uint32_t> nonassoc = {0, 1, 2, 3, 4,  //
                                         1, 0, 3, 4, 2,  //
                                         2, 4, 0, 1, 3,  //
                                         3, 2, 4, 0, 1,  //
                                         4, 3, 1, 2, 0};
  EXPECT_EQ(error_kind_of([&] { FiniteGroup::from_table(nonassoc); }), ErrorKind::NotAGroup);
  std::vector<std::uint32_t> out_of_range = {0, 1, 1, 2};
  EXPECT_EQ(error_kind_of([&] { FiniteGroup::from_table(out_of_range); }), ErrorKind::NotAGroup);
  std::vector<std::uint32_t> no_identity = {1, 0, 0, 1};
  EXPECT_EQ(error_kind_of([&] { FiniteGroup::from_table(no_identity); }), ErrorKind::NotAGroup);
}

TEST(GroupCore, TableFileRoundTrip) {
  FiniteGroup s3 = read_table_file(std::string(HOMCOVER_TEST_DATA) + "/s3.table");
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(check_group_axioms(s3), "");
  EXPECT_EQ(order_histogram(s3), order_histogram(symmetric_group(3)));

  std::ostringstream text;
  write_table_file(text, s3);
  std::string path = write_temp("roundtrip.table", text.str());
  FiniteGroup again = read_table_file(path);
  for (std::uint32_t a = 0; a < 6; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) EXPECT_EQ(again.multiply(e(a), e(b)), s3.multiply(e(a), e(b)));
  }
}

TEST(GroupCore, TableFileErrors) {
  EXPECT_EQ(error_kind_of([] { read_table_file("/nonexistent/dir/x.table"); }), ErrorKind::IoError);
  std::string malformed = write_temp("malformed.table", "2\n0 1\n1 zz\n");
  EXPECT_EQ(error_kind_of([&] { read_table_file(malformed); }), ErrorKind::InvalidSpec);
  std::string truncated = write_temp("truncated.table", "3\n0 1 2\n1 2 0\n");
  EXPECT_EQ(error_kind_of([&] { read_table_file(truncated); }), ErrorKind::InvalidSpec);
  std::string bad_entry = write_temp("bad_entry.table", "2\n0 1\n1 7\n");
  EXPECT_EQ(error_kind_of([&] { read_table_file(bad_entry); }), ErrorKind::NotAGroup);
  Limits small;
  small.max_table_order = 4;
  EXPECT_EQ(error_kind_of([&] { read_table_file(std::string(HOMCOVER_TEST_DATA) + "/s3.table", small); }),
            ErrorKind::OrderCapExceeded);
}

TEST(GroupCore, PermutationsFromCycles) {
  Permutation p = permutation_from_cycles({{1, 2, 3}}, 4);
  EXPECT_EQ(p, (Permutation{1, 2, 0, 3}));
  EXPECT_EQ(cycle_notation(p), "(1,2,3)");
  std::vector<Permutation> gens = {permutation_from_cycles({{1, 2}}, 4),
                                   permutation_from_cycles({{1, 2, 3, 4}}, 4)};
  FiniteGroup s4 = permutation_group(gens, 4);
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_EQ(order_histogram(s4), order_histogram(symmetric_group(4)));
}

TEST(GroupCore, TableCopyOfProductMatches) {
  std::vector<FiniteGroup> factors{symmetric_group(3), cyclic_group(2)};
  FiniteGroup g = direct_product(factors);
  FiniteGroup t = to_table_group(g);
  EXPECT_EQ(t.order(), 12u);
  EXPECT_EQ(order_histogram(t), order_histogram(g));
}

TEST(GroupCore, GreedyGeneratorsGenerate) {
  for (FiniteGroup g : {symmetric_group(4), quaternion_group(), dihedral_group(6), alternating_group(5)}) {
    auto gens = greedy_generators(g);
    EXPECT_TRUE(oracle::generates(g, gens)) << g.name();
    // Irredundant: dropping any entry loses generation.
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto fewer = gens;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      EXPECT_FALSE(oracle::generates(g, fewer)) << g.name();
    }
  }
}

TEST(GroupCore, PrimeHelpers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_divisors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_TRUE(prime_divisors(1).empty());
}

TEST(GroupCore, ErrorMessagesNameTheKind) {
  try {
    pq_group(3, 5);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(std::string(err.what()).rfind("InvalidPQ", 0), 0u) << err.what();
  }
  EXPECT_TRUE(is_cap_error(ErrorKind::CoverTooLarge));
  EXPECT_FALSE(is_cap_error(ErrorKind::NotNormal));
}

}  // namespace
