#include "homcover/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "homcover/detail/subgroup_states.hpp"
#include "homcover/error.hpp"

namespace homcover {

namespace {

bool subset_bits(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

}  // namespace

SubgroupLattice::SubgroupLattice(std::vector<Subgroup> subgroups,
                                 std::vector<std::vector<std::uint64_t>> bits,
                                 std::vector<std::int64_t> mobius)
    : subgroups_(std::move(subgroups)), bits_(std::move(bits)), mobius_(std::move(mobius)) {}

bool SubgroupLattice::includes(std::size_t i, std::size_t j) const {
  return subset_bits(bits_[i], bits_[j]);
}

SubgroupLattice subgroup_lattice(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.max_lattice_order) {
    throw Error(ErrorKind::LatticeCapExceeded, group.name() + " has order " +
                                                   std::to_string(group.order()) +
                                                   ", above the lattice cap " +
                                                   std::to_string(limits.max_lattice_order));
  }
  detail::SubgroupStates states(group, limits.max_lattice_size);
  states.close_all();

  const std::size_t count = states.count();
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (states.order(a) != states.order(b)) return states.order(a) < states.order(b);
    return states.elements(a) < states.elements(b);
  });

  std::vector<Subgroup> subgroups;
  std::vector<std::vector<std::uint64_t>> bits;
  subgroups.reserve(count);
  for (std::uint32_t s : order) {
    subgroups.emplace_back(group, states.elements(s), states.generators(s));
    bits.push_back(states.bits(s));
  }

  // mu(G, G) = 1 and, going down, mu(H, G) = -sum of mu(K, G) over K > H.
  std::vector<std::int64_t> mobius(count, 0);
  for (std::size_t i = count; i-- > 0;) {
    if (i + 1 == count) {
      mobius[i] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t j = i + 1; j < count; ++j) {
      if (mobius[j] != 0 && subgroups[j].order() % subgroups[i].order() == 0 &&
          subset_bits(bits[i], bits[j])) {
        sum += mobius[j];
      }
    }
    mobius[i] = -sum;
  }
  return SubgroupLattice(std::move(subgroups), std::move(bits), std::move(mobius));
}

std::uint64_t hall_phi(const SubgroupLattice& lattice, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "sequence length must be at least 1");
  // The result is at most |G|^n, but intermediate terms are signed.
  __int128 total = 0;
  const __int128 limit = static_cast<__int128>(1) << 120;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice.mobius(i) == 0) continue;
    __int128 term = 1;
    for (std::size_t k = 0; k < n; ++k) {
      term *= static_cast<__int128>(lattice.subgroup(i).order());
      if (term > limit) throw Error(ErrorKind::ArithmeticOverflow, "Möbius sum term too large");
    }
    total += term * lattice.mobius(i);
    if (total > limit || total < -limit) {
      throw Error(ErrorKind::ArithmeticOverflow, "Möbius sum too large");
    }
  }
  if (total < 0 || total > static_cast<__int128>(UINT64_MAX)) {
    throw Error(ErrorKind::ArithmeticOverflow, "Möbius sum outside the 64-bit range");
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t hall_phi(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  return hall_phi(subgroup_lattice(group, limits), n);
}

std::vector<Subgroup> normal_subgroups(const SubgroupLattice& lattice) {
  std::vector<Subgroup> out;
  for (const Subgroup& s : lattice.subgroups()) {
    if (is_normal(s)) out.push_back(s);
  }
  return out;
}

}  // namespace homcover
