#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homcover/group.hpp"

namespace homcover {

class Subgroup {
 public:
  // `elements` must be sorted and closed; `generators` must generate them.
  Subgroup(FiniteGroup parent, std::vector<Element> elements, std::vector<Element> generators);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element e) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_.order(); }

  // Equality compares element sets (the parent is assumed shared).
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  FiniteGroup parent_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
};

Subgroup closure(const FiniteGroup& group, std::span<const Element> gens);
Subgroup whole_group(const FiniteGroup& group);
Subgroup trivial_subgroup(const FiniteGroup& group);

// Wraps a sorted element list already known to be a subgroup, choosing
// generators greedily in ascending id order.
Subgroup subgroup_from_elements(const FiniteGroup& group, std::vector<Element> elements);

bool is_subset(const Subgroup& inner, const Subgroup& outer);
bool is_normal(const Subgroup& subgroup);

// Smallest subgroup containing `elements` that is closed under conjugation
// by every element of `conjugators`.
Subgroup normal_closure(const FiniteGroup& group, std::span<const Element> elements,
                        std::span<const Element> conjugators);
inline Subgroup normal_closure(const FiniteGroup& group, std::span<const Element> elements) {
  return normal_closure(group, elements, group.generators());
}

Subgroup center(const FiniteGroup& group);
Subgroup derived_subgroup(const Subgroup& subgroup);

// Found by greedily extending a p-subgroup with p-elements, smallest ids
// first. Throws NotADivisor when p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& group, std::uint64_t p);

std::vector<Subgroup> lower_central_series(const FiniteGroup& group);
std::vector<Subgroup> derived_series(const FiniteGroup& group);

struct StructureFlags {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;

  bool operator==(const StructureFlags&) const = default;
};

StructureFlags structure_predicates(const FiniteGroup& group);
bool is_abelian(const FiniteGroup& group);

// Nontrivial with no normal subgroups besides 1 and G.
bool is_simple(const FiniteGroup& group);

// Subgroup as a standalone table group; element i of the result is
// subgroup.elements()[i].
FiniteGroup subgroup_as_group(const Subgroup& subgroup, const Limits& limits = {});

// Closure of `gens` (tuples with one coordinate per factor) inside the direct
// product of `factors`, with componentwise operations. Throws
// ClosureCapExceeded above limits.max_closure elements.
FiniteGroup tuple_subgroup(std::vector<FiniteGroup> factors,
                           std::span<const std::vector<std::uint32_t>> gens,
                           const Limits& limits = {}, std::string name = {});

// Closure of k-tuples of elements of `group` inside G^k.
FiniteGroup direct_power_subgroup(const FiniteGroup& group, std::size_t k,
                                  std::span<const Sequence> gens, const Limits& limits = {});

}  // namespace homcover
