#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "homcover/group.hpp"
#include "homcover/homomorphism.hpp"

namespace homcover {

enum class OrbitStrategy {
  // Compare-representatives for small sets, the automorphism sweep when the
  // generating set is large and the sweep's memory fits.
  Automatic,
  // Test each sequence only against the current representatives whose
  // invariant signature matches.
  CompareRepresentatives,
  // Enumerate Aut(G) once, then mark the whole orbit of every new
  // representative in a visited bitmap indexed by the tuple code.
  AutomorphismAction,
};

std::string_view strategy_name(OrbitStrategy strategy);

struct OrbitDecomposition {
  FiniteGroup group;
  std::size_t n = 0;
  // Lexicographically least member of each orbit, in ascending order.
  std::vector<Sequence> representatives;
  std::vector<std::uint64_t> orbit_sizes;  // aligned with representatives
  std::uint64_t orbit_size = 0;            // common size when the action is free
  std::uint64_t h_n = 0;
  std::uint64_t gamma_count = 0;
  // All orbits have the same size and h_n * orbit_size == gamma_count.
  bool free_action = false;
  OrbitStrategy strategy = OrbitStrategy::Automatic;
};

// s ~ t iff the closure of the pairs (s[i], t[i]) in G x G has exactly |G|
// elements, i.e. it is the graph of an automorphism. Computed as a literal
// closure of pairs that stops as soon as it exceeds |G|.
bool equivalent_sequences(const FiniteGroup& group, std::span<const Element> s,
                          std::span<const Element> t);

// Partitions the generating n-tuples into Aut(G)-orbits. Throws
// PreconditionViolated when n < rank and EnumerationCapExceeded when the
// number of generating tuples is above limits.max_candidates.
OrbitDecomposition orbit_decompose(const FiniteGroup& group, std::size_t n,
                                   OrbitStrategy strategy = OrbitStrategy::Automatic,
                                   const Limits& limits = {});

// |Aut(G)|, as the size of the orbit of the first generating rank-tuple.
std::uint64_t aut_order(const FiniteGroup& group, const Limits& limits = {});
std::vector<Homomorphism> enumerate_aut(const FiniteGroup& group, const Limits& limits = {});

// Number of orbits; 0 when n < rank.
std::uint64_t h_n(const FiniteGroup& group, std::size_t n, const Limits& limits = {});
bool is_homogeneous(const FiniteGroup& group, std::size_t n, const Limits& limits = {});

}  // namespace homcover
