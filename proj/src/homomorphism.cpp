#include "homcover/homomorphism.hpp"

#include <algorithm>
#include <set>

#include "homcover/detail/closure.hpp"
#include "homcover/detail/graph_checker.hpp"
#include "homcover/error.hpp"
#include "homcover/genseq.hpp"

namespace homcover {

namespace detail {

bool GraphChecker::run(const FiniteGroup& domain, std::span<const Element> s,
                       const FiniteGroup& codomain, std::span<const Element> t) {
  if (map_.size() < domain.order()) map_.assign(domain.order(), kUnset);
  for (Element e : visited_) map_[e.id] = kUnset;
  visited_.clear();

  map_[0] = 0;
  visited_.push_back(kIdentity);
  if (domain.has_table() && codomain.has_table()) {
    const std::uint32_t* dt = domain.table().data();
    const std::uint32_t* ct = codomain.table().data();
    const std::size_t dm = domain.order(), cm = codomain.order();
    for (std::size_t r = 0; r < visited_.size(); ++r) {
      const std::uint32_t a = visited_[r].id;
      const std::uint32_t* drow = dt + a * dm;
      const std::uint32_t* crow = ct + map_[a] * cm;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const std::uint32_t x = drow[s[i].id];
        const std::uint32_t y = crow[t[i].id];
        if (map_[x] == kUnset) {
          map_[x] = y;
          visited_.push_back(Element{x});
        } else if (map_[x] != y) {
          return false;
        }
      }
    }
    return true;
  }
  for (std::size_t r = 0; r < visited_.size(); ++r) {
    Element a = visited_[r];
    Element fa{map_[a.id]};
    for (std::size_t i = 0; i < s.size(); ++i) {
      Element x = domain.multiply(a, s[i]);
      std::uint32_t y = codomain.multiply(fa, t[i]).id;
      if (map_[x.id] == kUnset) {
        map_[x.id] = y;
        visited_.push_back(x);
      } else if (map_[x.id] != y) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

namespace {

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Distinct images among the visited elements.
bool injective_on_visited(const detail::GraphChecker& checker, std::vector<char>& seen) {
  bool ok = true;
  for (Element e : checker.visited()) {
    auto y = checker.image(e);
    if (seen[y]) {
      ok = false;
      break;
    }
    seen[y] = 1;
  }
  for (Element e : checker.visited()) seen[checker.image(e)] = 0;
  return ok;
}

Homomorphism from_checker(const FiniteGroup& domain, std::span<const Element> gens,
                          const FiniteGroup& codomain, std::span<const Element> images,
                          const detail::GraphChecker& checker) {
  std::vector<Element> map(domain.order());
  for (std::uint32_t a = 0; a < domain.order(); ++a) map[a] = Element{checker.image(Element{a})};
  return Homomorphism(domain, codomain, Sequence(gens.begin(), gens.end()),
                      Sequence(images.begin(), images.end()), std::move(map));
}

std::vector<std::uint64_t> sorted_orders(const FiniteGroup& g) {
  std::vector<std::uint64_t> orders(g.element_orders().begin(), g.element_orders().end());
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

Homomorphism::Homomorphism(FiniteGroup domain, FiniteGroup codomain, Sequence domain_generators,
                           Sequence images, std::vector<Element> map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      domain_generators_(std::move(domain_generators)),
      images_(std::move(images)),
      map_(std::move(map)) {}

bool Homomorphism::is_surjective() const {
  return detail::close_elements(codomain_, images_).size() == codomain_.order();
}

bool Homomorphism::is_injective() const {
  std::vector<char> seen(codomain_.order(), 0);
  for (Element y : map_) {
    if (seen[y.id]) return false;
    seen[y.id] = 1;
  }
  return true;
}

Subgroup Homomorphism::kernel() const {
  std::vector<Element> elements;
  for (std::uint32_t a = 0; a < map_.size(); ++a) {
    if (map_[a] == kIdentity) elements.push_back(Element{a});
  }
  return subgroup_from_elements(domain_, std::move(elements));
}

Subgroup Homomorphism::image() const {
  return subgroup_from_elements(codomain_, sorted_unique(map_));
}

std::optional<Homomorphism> extend_hom(const FiniteGroup& domain, std::span<const Element> gens,
                                       const FiniteGroup& codomain, std::span<const Element> images) {
  if (gens.size() != images.size()) {
    throw Error(ErrorKind::PreconditionViolated, "generator and image lists differ in length");
  }
  detail::GraphChecker checker;
  if (!checker.run(domain, gens, codomain, images)) return std::nullopt;
  if (checker.visited().size() != domain.order()) {
    throw Error(ErrorKind::PreconditionViolated, "sequence does not generate the domain " + domain.name());
  }
  return from_checker(domain, gens, codomain, images, checker);
}

Homomorphism identity_hom(const FiniteGroup& group) {
  std::vector<Element> map(group.order());
  for (std::uint32_t a = 0; a < map.size(); ++a) map[a] = Element{a};
  Sequence gens(group.generators().begin(), group.generators().end());
  return Homomorphism(group, group, gens, gens, std::move(map));
}

Homomorphism compose(const Homomorphism& second, const Homomorphism& first) {
  if (first.codomain().order() != second.domain().order()) {
    throw Error(ErrorKind::PreconditionViolated, "homomorphisms are not composable");
  }
  std::vector<Element> map(first.domain().order());
  for (std::uint32_t a = 0; a < map.size(); ++a) map[a] = second.apply(first.apply(Element{a}));
  Sequence images;
  for (Element g : first.domain_generators()) images.push_back(map[g.id]);
  return Homomorphism(first.domain(), second.codomain(),
                      Sequence(first.domain_generators().begin(), first.domain_generators().end()),
                      std::move(images), std::move(map));
}

std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (sorted_orders(g) != sorted_orders(h)) return std::nullopt;
  if (structure_predicates(g) != structure_predicates(h)) return std::nullopt;

  const Sequence gens = greedy_generators(g);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::uint32_t b = 0; b < h.order(); ++b) {
      if (h.element_order(Element{b}) == g.element_order(gens[i])) candidates[i].push_back(Element{b});
    }
  }

  detail::GraphChecker checker;
  std::vector<char> seen(h.order(), 0);
  Sequence images;
  std::optional<Homomorphism> found;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      // All generators placed and the map is injective on the whole domain.
      found = from_checker(g, gens, h, images, checker);
      return true;
    }
    for (Element c : candidates[i]) {
      images.push_back(c);
      std::span<const Element> prefix(gens.data(), i + 1);
      if (checker.run(g, prefix, h, images) && injective_on_visited(checker, seen) &&
          self(self, i + 1)) {
        return true;
      }
      images.pop_back();
    }
    return false;
  };
  if (gens.empty()) return Homomorphism(g, h, {}, {}, {kIdentity});  // both trivial
  search(search, 0);
  return found;
}

std::optional<Homomorphism> find_surjection(const FiniteGroup& g, const FiniteGroup& h,
                                            const std::optional<Prescription>& prescribed) {
  if (g.order() % h.order() != 0) return std::nullopt;
  if (prescribed) {
    auto f = extend_hom(g, prescribed->sources, h, prescribed->targets);
    if (f && f->is_surjective()) return f;
    return std::nullopt;
  }

  const Sequence gens = greedy_generators(g);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::uint32_t b = 0; b < h.order(); ++b) {
      if (g.element_order(gens[i]) % h.element_order(Element{b}) == 0) {
        candidates[i].push_back(Element{b});
      }
    }
  }

  detail::GraphChecker checker;
  Sequence images;
  std::optional<Homomorphism> found;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      if (detail::close_elements(h, images).size() != h.order()) return false;
      found = from_checker(g, gens, h, images, checker);
      return true;
    }
    for (Element c : candidates[i]) {
      images.push_back(c);
      std::span<const Element> prefix(gens.data(), i + 1);
      if (checker.run(g, prefix, h, images) && self(self, i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (gens.empty()) {
    if (h.order() != 1) return std::nullopt;
    return Homomorphism(g, h, {}, {}, {kIdentity});
  }
  search(search, 0);
  return found;
}

Sequence lift_gaschutz(const Homomorphism& f, std::span<const Element> s) {
  const FiniteGroup& g = f.domain();
  const FiniteGroup& h = f.codomain();
  if (!f.is_surjective()) throw Error(ErrorKind::PreconditionViolated, "map is not surjective");
  if (detail::close_elements(h, s).size() != h.order()) {
    throw Error(ErrorKind::PreconditionViolated, "sequence does not generate the quotient");
  }
  const std::size_t n = s.size();
  const std::size_t r = rank(g);
  if (n < r) {
    throw Error(ErrorKind::PreconditionViolated, "sequence length " + std::to_string(n) +
                                                     " is below the rank " + std::to_string(r));
  }

  std::vector<std::vector<Element>> fibers(h.order());
  for (std::uint32_t a = 0; a < g.order(); ++a) fibers[f.apply(Element{a}).id].push_back(Element{a});

  // Whether the remaining entries can complete a generating tuple depends
  // only on the subgroup generated so far, so each depth tries one candidate
  // per resulting subgroup and remembers subgroups that already failed.
  std::vector<std::set<std::vector<Element>>> failed(n + 1);
  Sequence t;
  auto search = [&](auto&& self, std::size_t i, const std::vector<Element>& current) -> bool {
    if (i == n) return current.size() == g.order();
    if (failed[i].count(current)) return false;
    std::set<std::vector<Element>> tried;
    for (Element c : fibers[s[i].id]) {
      auto next = detail::extend_closure(g, current, t, std::span<const Element>(&c, 1));
      if (!tried.insert(next).second) continue;
      t.push_back(c);
      if (self(self, i + 1, next)) return true;
      t.pop_back();
    }
    failed[i].insert(current);
    return false;
  };
  if (!search(search, 0, std::vector<Element>{kIdentity})) {
    throw Error(ErrorKind::PreconditionViolated,
                "no generating lift exists; the rank bound or the surjection is inconsistent");
  }
  return t;
}

QuotientResult quotient_group(const FiniteGroup& group, const Subgroup& normal, const Limits& limits) {
  if (!is_normal(normal)) {
    throw Error(ErrorKind::NotNormal, "subgroup of order " + std::to_string(normal.order()) +
                                          " is not normal in " + group.name());
  }
  const std::uint32_t none = 0xffffffffu;
  std::vector<std::uint32_t> coset(group.order(), none);
  std::vector<Element> reps;
  for (std::uint32_t a = 0; a < group.order(); ++a) {
    if (coset[a] != none) continue;
    auto index = static_cast<std::uint32_t>(reps.size());
    reps.push_back(Element{a});
    for (Element x : normal.elements()) coset[group.multiply(Element{a}, x).id] = index;
  }
  const std::size_t m = reps.size();
  if (m > limits.max_table_order) {
    throw Error(ErrorKind::OrderCapExceeded, "quotient of order " + std::to_string(m) +
                                                 " exceeds the table cap");
  }
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset[group.multiply(reps[i], reps[j]).id];
  }
  TableOptions options;
  options.name = group.name() + "/N" + std::to_string(normal.order());
  for (Element g : group.generators()) {
    Element q{coset[g.id]};
    if (q != kIdentity && std::find(options.generators.begin(), options.generators.end(), q) ==
                              options.generators.end()) {
      options.generators.push_back(q);
    }
  }
  for (Element r : reps) options.labels.push_back(group.label(r) + "N");
  options.trusted = true;
  FiniteGroup quotient = FiniteGroup::from_table(std::move(table), std::move(options), limits);

  std::vector<Element> map(group.order());
  for (std::uint32_t a = 0; a < map.size(); ++a) map[a] = Element{coset[a]};
  Sequence gens(group.generators().begin(), group.generators().end());
  Sequence images;
  for (Element g : gens) images.push_back(map[g.id]);
  Homomorphism projection(group, quotient, std::move(gens), std::move(images), std::move(map));
  return {std::move(quotient), std::move(projection)};
}

}  // namespace homcover
