#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "homcover/group.hpp"

namespace homcover {

bool is_generating(const FiniteGroup& group, std::span<const Element> entries);

// Generating, and no single entry can be dropped.
bool is_irredundant(const FiniteGroup& group, std::span<const Element> entries);

// Generating, and no proper subsequence generates. Checks all 2^n - 2
// proper nonempty subsets, so n is limited to 6 (PreconditionViolated).
bool is_irredundant_exhaustive(const FiniteGroup& group, std::span<const Element> entries);

// |G|^n, saturating at UINT64_MAX.
std::uint64_t candidate_count(const FiniteGroup& group, std::size_t n);

// Calls `visit` on every generating n-tuple in lexicographic id order until
// it returns false. Branches that cannot complete to a generating tuple are
// pruned, so the cost tracks the number of tuples visited. Throws
// EnumerationCapExceeded when |G|^n exceeds limits.max_candidates and
// PreconditionViolated when n == 0.
void for_each_generating_sequence(const FiniteGroup& group, std::size_t n,
                                  const std::function<bool(std::span<const Element>)>& visit,
                                  const Limits& limits = {});
std::vector<Sequence> enumerate_gamma(const FiniteGroup& group, std::size_t n,
                                      const Limits& limits = {});

// |Γ_n(G)| by dynamic programming over the subgroups generated by prefixes;
// exact and independent of the enumeration cap. Throws ArithmeticOverflow
// above 2^64 - 1 and PreconditionViolated when n == 0.
std::uint64_t count_gamma(const FiniteGroup& group, std::size_t n);

// Length of the enumeration stream (subject to the enumeration cap).
std::uint64_t count_gamma_by_enumeration(const FiniteGroup& group, std::size_t n,
                                         const Limits& limits = {});

// Smallest n with a generating n-tuple; 0 for the trivial group.
std::size_t rank(const FiniteGroup& group);

// Lexicographically first generating n-tuple, if any.
std::optional<Sequence> first_generating_sequence(const FiniteGroup& group, std::size_t n);

// A uniformly random generating n-tuple (none when n < rank).
std::optional<Sequence> sample_generating_sequence(const FiniteGroup& group, std::size_t n,
                                                   std::mt19937_64& rng);

}  // namespace homcover
