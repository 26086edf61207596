#include "homcover/genseq.hpp"

#include <limits>

#include "homcover/detail/closure.hpp"
#include "homcover/detail/subgroup_states.hpp"
#include "homcover/error.hpp"

namespace homcover {

namespace {

void require_positive_length(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "sequence length must be at least 1");
}

std::uint64_t to_u64(detail::Count c) {
  if (c > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::ArithmeticOverflow, "count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

bool is_generating(const FiniteGroup& group, std::span<const Element> entries) {
  return detail::close_elements(group, entries).size() == group.order();
}

bool is_irredundant(const FiniteGroup& group, std::span<const Element> entries) {
  if (!is_generating(group, entries)) return false;
  std::vector<Element> rest;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    rest.assign(entries.begin(), entries.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_generating(group, rest)) return false;
  }
  return true;
}

bool is_irredundant_exhaustive(const FiniteGroup& group, std::span<const Element> entries) {
  const std::size_t n = entries.size();
  if (n > 6) {
    throw Error(ErrorKind::PreconditionViolated, "exhaustive irredundance check is limited to n <= 6");
  }
  if (!is_generating(group, entries)) return false;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Element> subset;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) subset.push_back(entries[i]);
    }
    if (is_generating(group, subset)) return false;
  }
  return true;
}

std::uint64_t candidate_count(const FiniteGroup& group, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / group.order()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= group.order();
  }
  return total;
}

void for_each_generating_sequence(const FiniteGroup& group, std::size_t n,
                                  const std::function<bool(std::span<const Element>)>& visit,
                                  const Limits& limits) {
  require_positive_length(n);
  std::uint64_t candidates = candidate_count(group, n);
  if (candidates > limits.max_candidates) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                group.name() + "^" + std::to_string(n) + " has " +
                    (candidates == std::numeric_limits<std::uint64_t>::max()
                         ? std::string("more than 2^64")
                         : std::to_string(candidates)) +
                    " candidate tuples, above the cap " + std::to_string(limits.max_candidates));
  }
  detail::SubgroupStates states(group);
  states.walk(n, visit);
}

std::vector<Sequence> enumerate_gamma(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  std::vector<Sequence> out;
  for_each_generating_sequence(
      group, n,
      [&](std::span<const Element> s) {
        out.emplace_back(s.begin(), s.end());
        return true;
      },
      limits);
  return out;
}

std::uint64_t count_gamma(const FiniteGroup& group, std::size_t n) {
  require_positive_length(n);
  detail::SubgroupStates states(group);
  return to_u64(states.completions(detail::SubgroupStates::kTrivial, n));
}

std::uint64_t count_gamma_by_enumeration(const FiniteGroup& group, std::size_t n,
                                         const Limits& limits) {
  std::uint64_t count = 0;
  for_each_generating_sequence(
      group, n,
      [&](std::span<const Element>) {
        ++count;
        return true;
      },
      limits);
  return count;
}

std::size_t rank(const FiniteGroup& group) {
  if (group.order() == 1) return 0;
  detail::SubgroupStates states(group);
  for (std::size_t n = 1;; ++n) {
    if (states.completions(detail::SubgroupStates::kTrivial, n) > 0) return n;
  }
}

std::optional<Sequence> first_generating_sequence(const FiniteGroup& group, std::size_t n) {
  require_positive_length(n);
  detail::SubgroupStates states(group);
  std::optional<Sequence> found;
  states.walk(n, [&](std::span<const Element> s) {
    found.emplace(s.begin(), s.end());
    return false;
  });
  return found;
}

std::optional<Sequence> sample_generating_sequence(const FiniteGroup& group, std::size_t n,
                                                   std::mt19937_64& rng) {
  require_positive_length(n);
  detail::SubgroupStates states(group);
  std::uint32_t state = detail::SubgroupStates::kTrivial;
  if (states.completions(state, n) == 0) return std::nullopt;
  Sequence out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t left = n - i - 1;
    // Draw g with probability proportional to its completion count.
    detail::Count total = states.completions(state, n - i);
    detail::Count pick;
    if (total <= std::numeric_limits<std::uint64_t>::max()) {
      pick = std::uniform_int_distribution<std::uint64_t>(0, static_cast<std::uint64_t>(total - 1))(rng);
    } else {
      std::uniform_int_distribution<std::uint64_t> hi(0, static_cast<std::uint64_t>(total >> 64));
      std::uniform_int_distribution<std::uint64_t> lo;
      do {
        pick = (static_cast<detail::Count>(hi(rng)) << 64) | lo(rng);
      } while (pick >= total);
    }
    for (std::uint32_t a = 0; a < group.order(); ++a) {
      std::uint32_t next = states.join(state, Element{a});
      detail::Count weight = states.completions(next, left);
      if (pick < weight) {
        out.push_back(Element{a});
        state = next;
        break;
      }
      pick -= weight;
    }
  }
  return out;
}

}  // namespace homcover
