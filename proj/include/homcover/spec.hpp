#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homcover/group.hpp"

namespace homcover {

// Syntax tree of the group-spec language:
//
//   spec    := product
//   product := power ('x' power)*
//   power   := atom ('^' INT)?
//   atom    := 'C' INT | 'S' INT | 'A' INT | 'D' INT | 'Q8'
//            | 'pq' '(' INT ',' INT ')' | 'perm:' cycles (';' cycles)*
//            | 'table:' PATH | '(' product ')'
//
// Keywords are case-insensitive and whitespace between tokens is ignored.
// A table path runs to the end of the input.
struct GroupSpec {
  enum class Kind { Cyclic, Symmetric, Alternating, Dihedral, Quaternion, PQ, Permutation, Table,
                    Product, Power };
  using Cycle = std::vector<std::uint32_t>;     // 1-based points
  using CycleProduct = std::vector<Cycle>;      // one generator

  Kind kind = Kind::Cyclic;
  std::uint64_t k = 0;          // C/S/A/D parameter, power exponent
  std::uint64_t p = 0, q = 0;   // pq parameters
  std::vector<CycleProduct> permutation_generators;
  std::string path;
  std::vector<GroupSpec> children;  // product factors, or the power base

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec parse_spec(std::string_view text);
std::string print_spec(const GroupSpec& spec);

FiniteGroup construct_group(const GroupSpec& spec, const Limits& limits = {});
FiniteGroup construct_group(std::string_view text, const Limits& limits = {});

}  // namespace homcover
