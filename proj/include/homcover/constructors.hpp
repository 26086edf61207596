#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homcover/group.hpp"

namespace homcover {

// A permutation of {0, ..., degree-1} given by its image list. Products are
// composed left to right: (a * b)(x) = b(a(x)).
using Permutation = std::vector<std::uint32_t>;

FiniteGroup cyclic_group(std::uint64_t k, const Limits& limits = {});
FiniteGroup dihedral_group(std::uint64_t k, const Limits& limits = {});  // order 2k
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(std::uint64_t k, const Limits& limits = {});
FiniteGroup alternating_group(std::uint64_t k, const Limits& limits = {});
FiniteGroup elementary_abelian_group(std::uint64_t p, std::uint64_t m, const Limits& limits = {});

// Nonabelian group C_q x| C_p of order p*q; p, q prime with p | q-1. The
// action is by the smallest scalar of multiplicative order p modulo q.
// Element (v, w) = x^v y^w has id w*q + v.
FiniteGroup pq_group(std::uint64_t p, std::uint64_t q, const Limits& limits = {});
std::uint64_t pq_scalar(std::uint64_t p, std::uint64_t q);

// Cayley-table direct product with mixed-radix ids, leftmost factor most
// significant.
FiniteGroup direct_product(std::span<const FiniteGroup> factors, const Limits& limits = {});

FiniteGroup permutation_group(std::span<const Permutation> generators, std::size_t degree,
                              const Limits& limits = {});
Permutation permutation_from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                    std::size_t degree);  // 1-based points
std::string cycle_notation(const Permutation& perm);

// Reads the Cayley-table file format: the order m on the first line, then m
// rows of m space-separated indices; index 0 must be the identity.
FiniteGroup read_table_file(const std::string& path, const Limits& limits = {});
void write_table_file(std::ostream& out, const FiniteGroup& group);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace homcover
