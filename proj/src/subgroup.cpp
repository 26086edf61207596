#include "homcover/subgroup.hpp"

#include <algorithm>
#include <numeric>

#include "homcover/constructors.hpp"
#include "homcover/detail/closure.hpp"
#include "homcover/detail/tuple_index.hpp"
#include "homcover/error.hpp"

namespace homcover {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup subgroup_from_elements(const FiniteGroup& group, std::vector<Element> elements) {
  std::vector<Element> gens;
  std::vector<Element> current{kIdentity};
  std::vector<char> in(group.order(), 0);
  in[0] = 1;
  for (Element e : elements) {
    if (in[e.id]) continue;
    current = detail::extend_closure(group, current, gens, std::span<const Element>(&e, 1));
    gens.push_back(e);
    for (Element x : current) in[x.id] = 1;
    if (current.size() == elements.size()) break;
  }
  return Subgroup(group, std::move(elements), std::move(gens));
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements, std::vector<Element> generators)
    : parent_(std::move(parent)), elements_(std::move(elements)), generators_(std::move(generators)) {}

bool Subgroup::contains(Element e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

Subgroup closure(const FiniteGroup& group, std::span<const Element> gens) {
  std::vector<Element> kept;
  for (Element g : gens) {
    if (g != kIdentity && std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  }
  std::vector<Element> elements = detail::close_elements(group, kept);
  return Subgroup(group, std::move(elements), std::move(kept));
}

Subgroup whole_group(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = Element{i};
  return Subgroup(group, std::move(all),
                  std::vector<Element>(group.generators().begin(), group.generators().end()));
}

Subgroup trivial_subgroup(const FiniteGroup& group) { return Subgroup(group, {kIdentity}, {}); }

bool is_subset(const Subgroup& inner, const Subgroup& outer) {
  return std::includes(outer.elements().begin(), outer.elements().end(), inner.elements().begin(),
                       inner.elements().end());
}

bool is_normal(const Subgroup& subgroup) {
  const FiniteGroup& g = subgroup.parent();
  for (Element x : subgroup.generators()) {
    for (Element c : g.generators()) {
      if (!subgroup.contains(g.conjugate(x, c))) return false;
    }
  }
  return true;
}

Subgroup normal_closure(const FiniteGroup& group, std::span<const Element> elements,
                        std::span<const Element> conjugators) {
  std::vector<Element> current{kIdentity};
  std::vector<Element> gens;
  std::vector<char> in(group.order(), 0);
  in[0] = 1;
  std::vector<Element> work(elements.begin(), elements.end());
  while (!work.empty()) {
    Element x = work.back();
    work.pop_back();
    if (in[x.id]) continue;
    current = detail::extend_closure(group, current, gens, std::span<const Element>(&x, 1));
    gens.push_back(x);
    for (Element e : current) in[e.id] = 1;
    for (Element c : conjugators) work.push_back(group.conjugate(x, c));
  }
  return Subgroup(group, std::move(current), std::move(gens));
}

Subgroup center(const FiniteGroup& group) {
  std::vector<Element> central;
  for (std::uint32_t a = 0; a < group.order(); ++a) {
    Element x{a};
    bool commutes = std::all_of(group.generators().begin(), group.generators().end(),
                                [&](Element g) { return group.multiply(x, g) == group.multiply(g, x); });
    if (commutes) central.push_back(x);
  }
  return subgroup_from_elements(group, std::move(central));
}

Subgroup derived_subgroup(const Subgroup& subgroup) {
  const FiniteGroup& g = subgroup.parent();
  std::vector<Element> commutators;
  auto gens = subgroup.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) commutators.push_back(g.commutator(gens[i], gens[j]));
  }
  return normal_closure(g, commutators, gens);
}

Subgroup sylow_subgroup(const FiniteGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::PreconditionViolated, std::to_string(p) + " is not prime");
  std::uint64_t order = group.order();
  if (order % p != 0) {
    throw Error(ErrorKind::NotADivisor, std::to_string(p) + " does not divide " + std::to_string(order));
  }
  std::uint64_t target = 1;
  while (order % p == 0) {
    order /= p;
    target *= p;
  }
  std::vector<Element> current{kIdentity};
  std::vector<Element> gens;
  std::vector<char> in(group.order(), 0);
  in[0] = 1;
  while (current.size() < target) {
    bool extended = false;
    for (std::uint32_t a = 1; a < group.order() && !extended; ++a) {
      Element x{a};
      if (in[a] || !is_power_of(group.element_order(x), p)) continue;
      auto next = detail::extend_closure(group, current, gens, std::span<const Element>(&x, 1));
      if (target % next.size() != 0) continue;
      current = std::move(next);
      gens.push_back(x);
      for (Element e : current) in[e.id] = 1;
      extended = true;
    }
    if (!extended) {
      throw Error(ErrorKind::PreconditionViolated, "Sylow search stalled; group table is inconsistent");
    }
  }
  return Subgroup(group, std::move(current), std::move(gens));
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& group) {
  std::vector<Subgroup> series{whole_group(group)};
  while (!series.back().is_trivial()) {
    std::vector<Element> commutators;
    for (Element x : series.back().generators()) {
      for (Element y : group.generators()) commutators.push_back(group.commutator(x, y));
    }
    Subgroup next = normal_closure(group, commutators, group.generators());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const FiniteGroup& group) {
  std::vector<Subgroup> series{whole_group(group)};
  while (!series.back().is_trivial()) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_abelian(const FiniteGroup& group) {
  auto gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (group.multiply(gens[i], gens[j]) != group.multiply(gens[j], gens[i])) return false;
    }
  }
  return true;
}

StructureFlags structure_predicates(const FiniteGroup& group) {
  StructureFlags flags;
  flags.is_abelian = is_abelian(group);
  if (flags.is_abelian) {
    flags.is_nilpotent = flags.is_solvable = true;
    return flags;
  }
  flags.is_nilpotent = lower_central_series(group).back().is_trivial();
  flags.is_solvable = flags.is_nilpotent || derived_series(group).back().is_trivial();
  return flags;
}

bool is_simple(const FiniteGroup& group) {
  if (group.order() == 1) return false;
  std::vector<char> checked(group.order(), 0);
  for (std::uint32_t a = 1; a < group.order(); ++a) {
    if (checked[a]) continue;
    Element x{a};
    if (!normal_closure(group, std::span<const Element>(&x, 1)).is_whole()) return false;
    // Conjugates generate the same normal closure.
    for (std::uint32_t b = 0; b < group.order(); ++b) checked[group.conjugate(x, Element{b}).id] = 1;
  }
  return true;
}

FiniteGroup subgroup_as_group(const Subgroup& subgroup, const Limits& limits) {
  const FiniteGroup& g = subgroup.parent();
  const std::size_t m = subgroup.order();
  std::vector<std::uint32_t> local(g.order(), 0);
  auto elements = subgroup.elements();
  for (std::uint32_t i = 0; i < m; ++i) local[elements[i].id] = i;
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = local[g.multiply(elements[a], elements[b]).id];
  }
  TableOptions options;
  options.name = g.name().empty() ? "subgroup" : "subgroup of " + g.name();
  for (Element x : subgroup.generators()) options.generators.push_back(Element{local[x.id]});
  for (Element x : elements) options.labels.push_back(g.label(x));
  options.trusted = true;
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

FiniteGroup tuple_subgroup(std::vector<FiniteGroup> factors,
                           std::span<const std::vector<std::uint32_t>> gens, const Limits& limits,
                           std::string name) {
  const std::size_t arity = factors.size();
  if (arity == 0) throw Error(ErrorKind::PreconditionViolated, "tuple subgroup needs a factor");
  for (const auto& g : gens) {
    if (g.size() != arity) {
      throw Error(ErrorKind::PreconditionViolated, "generator tuple has the wrong length");
    }
    for (std::size_t i = 0; i < arity; ++i) {
      if (g[i] >= factors[i].order()) {
        throw Error(ErrorKind::PreconditionViolated, "generator coordinate out of range");
      }
    }
  }
  if (name.empty()) {
    bool power = std::all_of(factors.begin(), factors.end(),
                             [&](const FiniteGroup& f) { return f.same_object(factors.front()); });
    if (power) {
      name = "(" + factors.front().name() + ")^" + std::to_string(arity) + " subgroup";
    } else {
      name = "subgroup of product";
    }
  }

  detail::TupleIndex index(arity);
  std::vector<std::uint32_t> buffer(arity, 0);
  index.insert(buffer);
  for (std::uint32_t i = 0; i < index.size(); ++i) {
    for (const auto& g : gens) {
      auto t = index.tuple(i);
      for (std::size_t c = 0; c < arity; ++c) {
        buffer[c] = factors[c].multiply(Element{t[c]}, Element{g[c]}).id;
      }
      if (index.insert(buffer).second && index.size() > limits.max_closure) {
        throw Error(ErrorKind::ClosureCapExceeded,
                    "closure in " + name + " exceeds " + std::to_string(limits.max_closure) +
                        " elements");
      }
    }
  }

  const std::size_t m = index.size();
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto ta = index.tuple(a), tb = index.tuple(b);
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
  });
  std::vector<std::uint32_t> coords;
  coords.reserve(m * arity);
  for (std::uint32_t i : order) {
    auto t = index.tuple(i);
    coords.insert(coords.end(), t.begin(), t.end());
  }
  index = detail::TupleIndex(0);  // release memory before the sorted copy is indexed

  // Sorted ids of the generators, found by binary search over the tuples.
  std::vector<Element> generator_ids;
  for (const auto& g : gens) {
    std::size_t lo = 0, hi = m;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (std::lexicographical_compare(coords.begin() + mid * arity, coords.begin() + (mid + 1) * arity,
                                       g.begin(), g.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    Element id{static_cast<std::uint32_t>(lo)};
    if (id != kIdentity &&
        std::find(generator_ids.begin(), generator_ids.end(), id) == generator_ids.end()) {
      generator_ids.push_back(id);
    }
  }
  return FiniteGroup::from_sorted_tuples(std::move(factors), std::move(coords),
                                         std::move(generator_ids), std::move(name));
}

FiniteGroup direct_power_subgroup(const FiniteGroup& group, std::size_t k,
                                  std::span<const Sequence> gens, const Limits& limits) {
  if (k == 0) throw Error(ErrorKind::PreconditionViolated, "direct power needs k >= 1");
  std::vector<std::vector<std::uint32_t>> tuples;
  tuples.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<std::uint32_t> t;
    t.reserve(g.size());
    for (Element e : g) t.push_back(e.id);
    tuples.push_back(std::move(t));
  }
  return tuple_subgroup(std::vector<FiniteGroup>(k, group), tuples, limits);
}

}  // namespace homcover
