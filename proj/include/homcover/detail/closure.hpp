#pragma once

#include <span>
#include <vector>

#include "homcover/group.hpp"

namespace homcover::detail {

// Breadth-first closure of `gens` inside `group`: starts at the identity and
// right-multiplies by generators until no new element appears. Returns the
// element ids sorted ascending.
std::vector<Element> close_elements(const FiniteGroup& group, std::span<const Element> gens);

// Same, but seeded with the elements of an existing subgroup (`seed` must be
// closed) and extra generators `more`. `seed_gens` generates `seed`.
std::vector<Element> extend_closure(const FiniteGroup& group, std::span<const Element> seed,
                                    std::span<const Element> seed_gens,
                                    std::span<const Element> more);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace homcover::detail
