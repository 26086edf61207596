#pragma once

#include <cstdint>
#include <span>
#include <deque>
#include <unordered_map>
#include <vector>

#include "homcover/group.hpp"

namespace homcover::detail {

using Count = unsigned __int128;

// Interns the subgroups of a group reachable by adding one element at a time,
// with memoized joins "subgroup generated by state and g". State 0 is the
// trivial subgroup. This is the engine behind counting, lexicographic
// enumeration with dead-branch pruning, uniform sampling, and the lattice.
class SubgroupStates {
 public:
  static constexpr std::uint32_t kTrivial = 0;

  explicit SubgroupStates(FiniteGroup group, std::size_t max_states = 1u << 20);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t count() const noexcept { return states_.size(); }

  std::uint32_t join(std::uint32_t state, Element g);
  bool contains(std::uint32_t state, Element g) const {
    return (states_[state].bits[g.id >> 6] >> (g.id & 63)) & 1u;
  }
  bool is_whole(std::uint32_t state) const { return states_[state].elements.size() == group_.order(); }
  std::size_t order(std::uint32_t state) const { return states_[state].elements.size(); }
  const std::vector<Element>& elements(std::uint32_t state) const { return states_[state].elements; }
  const std::vector<Element>& generators(std::uint32_t state) const { return states_[state].gens; }
  const std::vector<std::uint64_t>& bits(std::uint32_t state) const { return states_[state].bits; }

  // Number of k-tuples g_1..g_k with <state, g_1..g_k> = G.
  Count completions(std::uint32_t state, std::size_t k);

  // Elements g (ascending) for which join(state, g) still has a completion of
  // length k - 1. Memoized.
  const std::vector<Element>& live_children(std::uint32_t state, std::size_t k);

  // Lexicographic walk of all generating n-tuples. `visit(span)` returns
  // false to stop early; the walk returns false when stopped.
  template <class Visit>
  bool walk(std::size_t n, Visit&& visit) {
    std::vector<Element> seq(n);
    if (n == 0) return true;
    return walk_from(kTrivial, 0, n, seq, visit);
  }

  // Every state reachable from the trivial subgroup, i.e. every subgroup.
  void close_all();

 private:
  struct State {
    std::vector<Element> elements;
    std::vector<Element> gens;
    std::vector<std::uint64_t> bits;
    std::vector<std::uint32_t> row;                 // join cache, lazily sized
    std::vector<Count> completions;                 // by k, kUnknown if unset
    std::vector<std::vector<Element>> children;     // by k
    std::vector<char> children_ready;
  };
  struct BitsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& bits) const noexcept;
  };

  std::uint32_t intern(std::vector<Element> elements, std::vector<Element> gens);

  template <class Visit>
  bool walk_from(std::uint32_t state, std::size_t depth, std::size_t n, std::vector<Element>& seq,
                 Visit& visit) {
    // live_children may reallocate states_, so copy what is needed first.
    if (depth + 1 == n) {
      const std::vector<Element>& last = live_children(state, 1);
      for (Element g : last) {
        seq[depth] = g;
        if (!visit(std::span<const Element>(seq))) return false;
      }
      return true;
    }
    const std::vector<Element> kids = live_children(state, n - depth);
    for (Element g : kids) {
      seq[depth] = g;
      if (!walk_from(join(state, g), depth + 1, n, seq, visit)) return false;
    }
    return true;
  }

  FiniteGroup group_;
  std::size_t max_states_;
  std::size_t words_;
  std::deque<State> states_;  // deque keeps references stable
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, BitsHash> index_;
};

}  // namespace homcover::detail
