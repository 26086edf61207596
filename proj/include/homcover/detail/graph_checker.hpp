#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homcover/group.hpp"

namespace homcover::detail {

// Reusable scratch space for graph-closure checks. run() walks the closure
// of the pairs (s[i], t[i]) from (1, 1) and fails as soon as two pairs share
// a first coordinate, which is exactly when the closure has more than |G|
// elements. Reusing one checker avoids reallocating per test.
class GraphChecker {
 public:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  GraphChecker() = default;

  // Returns false on a conflict. On success map() holds images for every
  // element of <s>; visited() lists those elements in discovery order.
  bool run(const FiniteGroup& domain, std::span<const Element> s, const FiniteGroup& codomain,
           std::span<const Element> t);

  std::uint32_t image(Element a) const { return map_[a.id]; }
  std::span<const Element> visited() const noexcept { return visited_; }

 private:
  std::vector<std::uint32_t> map_;
  std::vector<Element> visited_;
};

}  // namespace homcover::detail
