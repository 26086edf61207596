#include "homcover/detail/subgroup_states.hpp"

#include <algorithm>

#include "homcover/detail/closure.hpp"
#include "homcover/error.hpp"

namespace homcover::detail {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

Count checked_mul(Count a, Count b) {
  if (a != 0 && b > (~Count{0}) / a) {
    throw Error(ErrorKind::ArithmeticOverflow, "generating-tuple count exceeds 128 bits");
  }
  return a * b;
}

Count checked_add(Count a, Count b) {
  if (a > ~Count{0} - b) {
    throw Error(ErrorKind::ArithmeticOverflow, "generating-tuple count exceeds 128 bits");
  }
  return a + b;
}

}  // namespace

std::size_t SubgroupStates::BitsHash::operator()(const std::vector<std::uint64_t>& bits) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : bits) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

SubgroupStates::SubgroupStates(FiniteGroup group, std::size_t max_states)
    : group_(std::move(group)), max_states_(max_states), words_((group_.order() + 63) / 64) {
  intern({kIdentity}, {});
}

std::uint32_t SubgroupStates::intern(std::vector<Element> elements, std::vector<Element> gens) {
  std::vector<std::uint64_t> bits(words_, 0);
  for (Element e : elements) bits[e.id >> 6] |= std::uint64_t{1} << (e.id & 63);
  auto it = index_.find(bits);
  if (it != index_.end()) return it->second;
  if (states_.size() >= max_states_) {
    throw Error(ErrorKind::LatticeCapExceeded, "more than " + std::to_string(max_states_) +
                                                   " subgroups of " + group_.name() + " reached");
  }
  auto id = static_cast<std::uint32_t>(states_.size());
  index_.emplace(bits, id);
  State state;
  state.elements = std::move(elements);
  state.gens = std::move(gens);
  state.bits = std::move(bits);
  states_.push_back(std::move(state));
  return id;
}

std::uint32_t SubgroupStates::join(std::uint32_t state, Element g) {
  if (contains(state, g)) return state;
  State& s = states_[state];
  if (s.row.empty()) s.row.assign(group_.order(), kUnset);
  if (s.row[g.id] != kUnset) return s.row[g.id];
  auto elements = extend_closure(group_, s.elements, s.gens, std::span<const Element>(&g, 1));
  std::vector<Element> gens = s.gens;
  gens.push_back(g);
  std::uint32_t next = intern(std::move(elements), std::move(gens));
  states_[state].row[g.id] = next;
  return next;
}

Count SubgroupStates::completions(std::uint32_t state, std::size_t k) {
  if (k == 0) return is_whole(state) ? 1 : 0;
  if (is_whole(state)) {
    Count total = 1;
    for (std::size_t i = 0; i < k; ++i) total = checked_mul(total, group_.order());
    return total;
  }
  {
    State& s = states_[state];
    if (s.completions.size() <= k) s.completions.resize(k + 1, ~Count{0});
    if (s.completions[k] != ~Count{0}) return s.completions[k];
  }
  // Elements already inside the state leave it unchanged.
  Count total = checked_mul(order(state), completions(state, k - 1));
  for (std::uint32_t a = 0; a < group_.order(); ++a) {
    Element g{a};
    if (contains(state, g)) continue;
    total = checked_add(total, completions(join(state, g), k - 1));
  }
  states_[state].completions[k] = total;
  return total;
}

const std::vector<Element>& SubgroupStates::live_children(std::uint32_t state, std::size_t k) {
  {
    State& s = states_[state];
    if (s.children.size() <= k) {
      s.children.resize(k + 1);
      s.children_ready.resize(k + 1, 0);
    }
    if (s.children_ready[k]) return s.children[k];
  }
  std::vector<Element> live;
  for (std::uint32_t a = 0; a < group_.order(); ++a) {
    Element g{a};
    if (completions(join(state, g), k - 1) > 0) live.push_back(g);
  }
  State& s = states_[state];
  s.children[k] = std::move(live);
  s.children_ready[k] = 1;
  return s.children[k];
}

void SubgroupStates::close_all() {
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    for (std::uint32_t a = 0; a < group_.order(); ++a) join(i, Element{a});
  }
}

}  // namespace homcover::detail
