#include "homcover/orbits.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "homcover/detail/graph_checker.hpp"
#include "homcover/detail/subgroup_states.hpp"
#include "homcover/error.hpp"
#include "homcover/genseq.hpp"

namespace homcover {

namespace {

constexpr std::uint64_t kCompareThreshold = 1u << 14;   // generating tuples
constexpr std::uint64_t kMaxBitmapBits = 1ull << 33;    // visited bitmap (1 GiB)
constexpr std::uint64_t kMaxAutBytes = 1ull << 30;      // stored automorphisms

void require_rank(const FiniteGroup& group, std::size_t n, std::size_t r) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "sequence length must be at least 1");
  if (n < r) {
    throw Error(ErrorKind::PreconditionViolated, "n = " + std::to_string(n) + " is below the rank " +
                                                     std::to_string(r) + " of " + group.name());
  }
}

std::uint64_t checked_gamma(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  std::uint64_t gamma = count_gamma(group, n);
  if (gamma > limits.max_candidates) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                group.name() + " has " + std::to_string(gamma) + " generating " + std::to_string(n) +
                    "-tuples, above the cap " + std::to_string(limits.max_candidates));
  }
  return gamma;
}

// Walks the generating r-tuples t and calls found(checker) for each t
// equivalent to the first one. Returns the first one.
template <class Found>
Sequence for_each_automorphism(const FiniteGroup& group, const Limits& limits, Found&& found) {
  const std::size_t r = rank(group);
  if (r == 0) {
    detail::GraphChecker checker;
    checker.run(group, {}, group, {});
    found(checker);
    return {};
  }
  checked_gamma(group, r, limits);
  detail::SubgroupStates states(group);
  Sequence base;
  detail::GraphChecker checker;
  states.walk(r, [&](std::span<const Element> t) {
    if (base.empty()) base.assign(t.begin(), t.end());
    if (checker.run(group, base, group, t)) found(checker);
    return true;
  });
  return base;
}

std::uint64_t signature(const FiniteGroup& group, std::span<const Element> s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    mix(group.element_order(s[i]));
    for (std::size_t j = i + 1; j < s.size(); ++j) mix(group.element_order(group.multiply(s[i], s[j])));
  }
  return h;
}

void compare_representatives(OrbitDecomposition& out) {
  const FiniteGroup& group = out.group;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  detail::GraphChecker checker;
  detail::SubgroupStates states(group);
  states.walk(out.n, [&](std::span<const Element> s) {
    ++out.gamma_count;
    auto& bucket = buckets[signature(group, s)];
    for (std::uint32_t rep : bucket) {
      if (checker.run(group, out.representatives[rep], group, s)) {
        ++out.orbit_sizes[rep];
        return true;
      }
    }
    bucket.push_back(static_cast<std::uint32_t>(out.representatives.size()));
    out.representatives.emplace_back(s.begin(), s.end());
    out.orbit_sizes.push_back(1);
    return true;
  });
}

template <class Id>
void automorphism_sweep(OrbitDecomposition& out, const Limits& limits) {
  const FiniteGroup& group = out.group;
  const std::size_t m = group.order();
  std::vector<Id> maps;
  std::size_t aut_count = 0;
  for_each_automorphism(group, limits, [&](const detail::GraphChecker& checker) {
    for (std::uint32_t a = 0; a < m; ++a) maps.push_back(static_cast<Id>(checker.image(Element{a})));
    ++aut_count;
  });

  const std::size_t n = out.n;
  std::vector<std::uint64_t> place(n, 1);
  for (std::size_t i = n - 1; i-- > 0;) place[i] = place[i + 1] * m;
  std::uint64_t codes = place[0] * m;
  std::vector<std::uint64_t> visited((codes + 63) / 64, 0);

  detail::SubgroupStates states(group);
  states.walk(n, [&](std::span<const Element> s) {
    ++out.gamma_count;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) code += s[i].id * place[i];
    if (visited[code >> 6] >> (code & 63) & 1u) return true;
    std::uint64_t size = 0;
    for (std::size_t k = 0; k < aut_count; ++k) {
      const Id* alpha = maps.data() + k * m;
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < n; ++i) image += alpha[s[i].id] * place[i];
      std::uint64_t& word = visited[image >> 6];
      std::uint64_t bit = std::uint64_t{1} << (image & 63);
      if (!(word & bit)) {
        word |= bit;
        ++size;
      }
    }
    out.representatives.emplace_back(s.begin(), s.end());
    out.orbit_sizes.push_back(size);
    return true;
  });
}

bool action_fits(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  const std::uint64_t bits = candidate_count(group, n);
  if (bits > kMaxBitmapBits) return false;
  const std::size_t r = rank(group);
  std::uint64_t gamma_r = r == 0 ? 1 : count_gamma(group, r);
  if (gamma_r > limits.max_candidates) return false;
  std::uint64_t id_bytes = group.order() <= 256 ? 1 : group.order() <= 65536 ? 2 : 4;
  // |Aut(G)| <= |Γ_r(G)|.
  return gamma_r <= kMaxAutBytes / (group.order() * id_bytes);
}

}  // namespace

std::string_view strategy_name(OrbitStrategy strategy) {
  switch (strategy) {
    case OrbitStrategy::Automatic: return "automatic";
    case OrbitStrategy::CompareRepresentatives: return "compare-representatives";
    case OrbitStrategy::AutomorphismAction: return "automorphism-action";
  }
  return "unknown";
}

bool equivalent_sequences(const FiniteGroup& group, std::span<const Element> s,
                          std::span<const Element> t) {
  if (s.size() != t.size()) {
    throw Error(ErrorKind::PreconditionViolated, "sequences have different lengths");
  }
  const std::uint64_t m = group.order();
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> queue{0};
  for (std::size_t r = 0; r < queue.size(); ++r) {
    Element a{static_cast<std::uint32_t>(queue[r] / m)};
    Element b{static_cast<std::uint32_t>(queue[r] % m)};
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::uint64_t pair = group.multiply(a, s[i]).id * m + group.multiply(b, t[i]).id;
      if (seen.insert(pair).second) {
        if (seen.size() > m) return false;
        queue.push_back(pair);
      }
    }
  }
  return seen.size() == m;
}

OrbitDecomposition orbit_decompose(const FiniteGroup& group, std::size_t n, OrbitStrategy strategy,
                                   const Limits& limits) {
  require_rank(group, n, rank(group));
  const std::uint64_t gamma = checked_gamma(group, n, limits);

  if (strategy == OrbitStrategy::Automatic) {
    strategy = gamma > kCompareThreshold && action_fits(group, n, limits)
                   ? OrbitStrategy::AutomorphismAction
                   : OrbitStrategy::CompareRepresentatives;
  } else if (strategy == OrbitStrategy::AutomorphismAction && !action_fits(group, n, limits)) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                "the automorphism sweep for " + group.name() + " at n = " + std::to_string(n) +
                    " needs more memory than allowed");
  }

  OrbitDecomposition out;
  out.group = group;
  out.n = n;
  out.strategy = strategy;
  if (strategy == OrbitStrategy::CompareRepresentatives) {
    compare_representatives(out);
  } else if (group.order() <= 256) {
    automorphism_sweep<std::uint8_t>(out, limits);
  } else if (group.order() <= 65536) {
    automorphism_sweep<std::uint16_t>(out, limits);
  } else {
    automorphism_sweep<std::uint32_t>(out, limits);
  }
  if (out.gamma_count != gamma) {
    throw Error(ErrorKind::PreconditionViolated, "enumeration and count disagree for " + group.name());
  }

  out.h_n = out.representatives.size();
  out.orbit_size = out.orbit_sizes.empty() ? 0 : out.orbit_sizes.front();
  bool equal = std::all_of(out.orbit_sizes.begin(), out.orbit_sizes.end(),
                           [&](std::uint64_t size) { return size == out.orbit_size; });
  out.free_action = equal && out.h_n * out.orbit_size == out.gamma_count;
  return out;
}

std::uint64_t aut_order(const FiniteGroup& group, const Limits& limits) {
  std::uint64_t count = 0;
  for_each_automorphism(group, limits, [&](const detail::GraphChecker&) { ++count; });
  return count;
}

std::vector<Homomorphism> enumerate_aut(const FiniteGroup& group, const Limits& limits) {
  std::vector<Homomorphism> out;
  Sequence base;
  for_each_automorphism(group, limits, [&](const detail::GraphChecker& checker) {
    std::vector<Element> map(group.order());
    for (std::uint32_t a = 0; a < map.size(); ++a) map[a] = Element{checker.image(Element{a})};
    out.emplace_back(group, group, Sequence{}, Sequence{}, std::move(map));
  });
  // Record the base sequence and its images so each map is reproducible.
  const std::size_t r = rank(group);
  if (r > 0) {
    base = *first_generating_sequence(group, r);
    for (auto& f : out) {
      Sequence images;
      for (Element b : base) images.push_back(f.apply(b));
      std::vector<Element> map(f.map().begin(), f.map().end());
      f = Homomorphism(group, group, base, std::move(images), std::move(map));
    }
  }
  return out;
}

std::uint64_t h_n(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "sequence length must be at least 1");
  if (n < rank(group)) return 0;
  return count_gamma(group, n) / aut_order(group, limits);
}

bool is_homogeneous(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  if (n == 0 || n < rank(group)) return false;
  return h_n(group, n, limits) == 1;
}

}  // namespace homcover
