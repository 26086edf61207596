#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homcover/group.hpp"
#include "homcover/homomorphism.hpp"

namespace homcover {

// H(n, G) realized inside G^h as the closure of n tuples, where h is the
// number of Aut(G)-orbits on generating n-tuples and coordinate i of the
// j-th tuple is entry j of the i-th orbit representative.
struct CoverResult {
  FiniteGroup base;
  std::size_t n = 0;
  std::vector<Sequence> representatives;  // one per orbit
  FiniteGroup cover;                      // tuple group, arity = representatives.size()
  Sequence cover_generators;              // n elements of `cover`
  std::vector<Homomorphism> projections;  // cover -> base, one per coordinate

  std::size_t h() const noexcept { return representatives.size(); }
};

// Predicted |H(n, G)| when a closed form is known for G: abelian groups,
// nonabelian simple groups, and nonabelian groups of order pq. Saturates at
// UINT64_MAX. Empty when no formula applies.
std::optional<std::uint64_t> predicted_cover_order(const FiniteGroup& group, std::size_t n,
                                                   const Limits& limits = {});

// Uses the lexicographically least representative of every orbit, in
// ascending order. Throws CoverTooLarge when the predicted or actual order
// exceeds the closure cap, PreconditionViolated when n < rank.
CoverResult build_cover(const FiniteGroup& group, std::size_t n, const Limits& limits = {});

// Same construction from caller-chosen representatives (any order, one per
// orbit or fewer).
CoverResult cover_from_representatives(const FiniteGroup& group, std::size_t n,
                                       std::vector<Sequence> representatives,
                                       const Limits& limits = {});

// 1-based coordinate map onto the base group. Throws IndexOutOfRange.
const Homomorphism& coordinate_projection(const CoverResult& cover, std::size_t i);

struct TowerMap {
  CoverResult upper;  // H(n, G), padded representatives first
  CoverResult lower;  // H(m, G)
  Homomorphism map;   // projection onto the first h_m coordinates
};

// Surjection H(n, G) -> H(m, G) for n > m >= rank. The length-m
// representatives, padded with identities, are placed first among the
// length-n representatives; the remaining orbits follow in lexicographic
// order of their least members.
TowerMap cover_tower_map(const FiniteGroup& group, std::size_t n, std::size_t m,
                         const Limits& limits = {});

// Header line, one comma-separated line of coordinates per generator, then
// (optionally) an "elements" line followed by every element's coordinates.
void write_cover_export(std::ostream& out, const CoverResult& cover, const std::string& base_spec,
                        bool include_elements);

}  // namespace homcover
