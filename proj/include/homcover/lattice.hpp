#pragma once

#include <cstdint>
#include <vector>

#include "homcover/group.hpp"
#include "homcover/subgroup.hpp"

namespace homcover {

// All subgroups of a group, sorted by order and then by element list, with
// the Möbius values mu(H, G) of the inclusion order.
class SubgroupLattice {
 public:
  SubgroupLattice(std::vector<Subgroup> subgroups, std::vector<std::vector<std::uint64_t>> bits,
                  std::vector<std::int64_t> mobius);

  std::size_t size() const noexcept { return subgroups_.size(); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }
  std::int64_t mobius(std::size_t i) const { return mobius_[i]; }
  const std::vector<std::int64_t>& mobius_values() const noexcept { return mobius_; }

  // Subgroup i is contained in subgroup j.
  bool includes(std::size_t i, std::size_t j) const;

 private:
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::int64_t> mobius_;
};

// Every subgroup is a join of cyclic subgroups, so closing the trivial
// subgroup under "join with one element" reaches all of them. Throws
// LatticeCapExceeded above limits.max_lattice_order elements or
// limits.max_lattice_size subgroups.
SubgroupLattice subgroup_lattice(const FiniteGroup& group, const Limits& limits = {});

// sum over H <= G of mu(H, G) |H|^n, the number of generating n-tuples.
std::uint64_t hall_phi(const FiniteGroup& group, std::size_t n, const Limits& limits = {});
std::uint64_t hall_phi(const SubgroupLattice& lattice, std::size_t n);

std::vector<Subgroup> normal_subgroups(const SubgroupLattice& lattice);

}  // namespace homcover
