#include "homcover/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "homcover/detail/closure.hpp"
#include "homcover/detail/tuple_index.hpp"
#include "homcover/error.hpp"

namespace homcover {

struct FiniteGroup::Impl {
  std::size_t order = 1;
  std::vector<std::uint32_t> table;
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint64_t> element_orders;
  std::uint64_t exponent = 1;
  std::vector<Element> generators;
  std::string name;
  std::vector<std::string> labels;

  std::vector<FiniteGroup> factors;
  detail::TupleIndex index;
};

namespace {

std::shared_ptr<FiniteGroup::Impl> trivial_impl() {
  auto impl = std::make_shared<FiniteGroup::Impl>();
  impl->table = {0};
  impl->inverse = {0};
  impl->element_orders = {1};
  impl->name = "C1";
  return impl;
}

std::string table_axiom_witness(const std::vector<std::uint32_t>& table, std::size_t m) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= m) {
      std::ostringstream out;
      out << "entry " << table[i] << " at row " << i / m << ", column " << i % m
          << " is not an element index";
      return out.str();
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a] != a || table[a * m] != a) {
      std::ostringstream out;
      out << "index 0 is not a two-sided identity (fails at element " << a << ")";
      return out.str();
    }
  }
  std::vector<std::uint32_t> seen(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto v = table[a * m + b];
      if (seen[v] == a + 1) {
        std::ostringstream out;
        out << "row " << a << " repeats " << v << "; element " << a << " has no inverse";
        return out.str();
      }
      seen[v] = static_cast<std::uint32_t>(a + 1);
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      auto v = table[a * m + b];
      if (seen[v] == b + 1) {
        std::ostringstream out;
        out << "column " << b << " repeats " << v;
        return out.str();
      }
      seen[v] = static_cast<std::uint32_t>(b + 1);
    }
  }
  return {};
}

}  // namespace

namespace detail {

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

std::vector<Element> close_elements(const FiniteGroup& group, std::span<const Element> gens) {
  const Element none{};
  return extend_closure(group, std::span<const Element>(&none, 1), {}, gens);
}

std::vector<Element> extend_closure(const FiniteGroup& group, std::span<const Element> seed,
                                    std::span<const Element> seed_gens,
                                    std::span<const Element> more) {
  // Dimino-style: the result is a union of right cosets H.g of the seed
  // subgroup H, so only coset representatives need multiplying.
  thread_local std::vector<char> mark;
  if (mark.size() < group.order()) mark.assign(group.order(), 0);

  std::vector<Element> gens(seed_gens.begin(), seed_gens.end());
  for (Element g : more) {
    if (g != kIdentity) gens.push_back(g);
  }
  std::vector<Element> elements(seed.begin(), seed.end());
  for (Element e : elements) mark[e.id] = 1;

  std::vector<Element> reps{kIdentity};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Element s : gens) {
      Element y = group.multiply(reps[r], s);
      if (mark[y.id]) continue;
      reps.push_back(y);
      for (Element h : seed) {
        Element z = group.multiply(h, y);
        mark[z.id] = 1;
        elements.push_back(z);
      }
    }
  }
  for (Element e : elements) mark[e.id] = 0;
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace detail

FiniteGroup::FiniteGroup() : impl_(trivial_impl()) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::uint32_t> table, TableOptions options,
                                    const Limits& limits) {
  auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  if (m == 0 || m * m != table.size()) {
    throw Error(ErrorKind::NotAGroup, "table of size " + std::to_string(table.size()) +
                                          " is not square or is empty");
  }
  if (m > limits.max_table_order) {
    throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(m) + " exceeds table cap " +
                                                 std::to_string(limits.max_table_order));
  }
  if (auto witness = table_axiom_witness(table, m); !witness.empty()) {
    throw Error(ErrorKind::NotAGroup, witness);
  }

  auto impl = std::make_shared<Impl>();
  impl->order = m;
  impl->table = std::move(table);
  impl->name = std::move(options.name);
  impl->labels = std::move(options.labels);
  impl->inverse.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (impl->table[a * m + b] == 0) {
        impl->inverse[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
  }
  impl->element_orders.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::uint64_t k = 1;
    std::uint32_t x = static_cast<std::uint32_t>(a);
    while (x != 0) {
      x = impl->table[a * m + x];
      ++k;
    }
    impl->element_orders[a] = k;
    impl->exponent = detail::lcm_u64(impl->exponent, k);
  }
  impl->generators = std::move(options.generators);

  FiniteGroup group(impl);
  if (!options.trusted) {
    if (auto witness = check_group_axioms(group); !witness.empty()) {
      throw Error(ErrorKind::NotAGroup, witness);
    }
  }
  if (impl->generators.empty() && m > 1) {
    impl->generators = greedy_generators(group);
  }
  return group;
}

FiniteGroup FiniteGroup::from_sorted_tuples(std::vector<FiniteGroup> factors,
                                            std::vector<std::uint32_t> coords,
                                            std::vector<Element> generators, std::string name) {
  auto impl = std::make_shared<Impl>();
  const std::size_t arity = factors.size();
  impl->factors = std::move(factors);
  impl->order = coords.size() / arity;
  impl->index = detail::TupleIndex::over(std::move(coords), arity);
  impl->name = std::move(name);
  impl->generators = std::move(generators);

  const std::size_t m = impl->order;
  impl->inverse.resize(m);
  impl->element_orders.resize(m);
  std::vector<std::uint32_t> buffer(arity);
  for (std::uint32_t a = 0; a < m; ++a) {
    auto t = impl->index.tuple(a);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      const FiniteGroup& f = impl->factors[i];
      buffer[i] = f.invert(Element{t[i]}).id;
      ord = detail::lcm_u64(ord, f.element_order(Element{t[i]}));
    }
    impl->inverse[a] = *impl->index.find(buffer);
    impl->element_orders[a] = ord;
    impl->exponent = detail::lcm_u64(impl->exponent, ord);
  }
  return FiniteGroup(impl);
}

std::size_t FiniteGroup::order() const noexcept { return impl_->order; }

Element FiniteGroup::multiply(Element a, Element b) const {
  const Impl& g = *impl_;
  if (!g.table.empty()) return Element{g.table[a.id * g.order + b.id]};
  thread_local std::vector<std::uint32_t> buffer;
  const std::size_t arity = g.factors.size();
  buffer.resize(arity);
  auto ta = g.index.tuple(a.id);
  auto tb = g.index.tuple(b.id);
  for (std::size_t i = 0; i < arity; ++i) {
    buffer[i] = g.factors[i].multiply(Element{ta[i]}, Element{tb[i]}).id;
  }
  return Element{*g.index.find(std::span<const std::uint32_t>(buffer.data(), arity))};
}

Element FiniteGroup::invert(Element a) const { return Element{impl_->inverse[a.id]}; }

Element FiniteGroup::power(Element a, std::int64_t k) const {
  if (k < 0) {
    a = invert(a);
    k = -k;
  }
  Element result = kIdentity;
  while (k > 0) {
    if (k & 1) result = multiply(result, a);
    a = multiply(a, a);
    k >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

Element FiniteGroup::conjugate(Element a, Element by) const {
  return multiply(multiply(invert(by), a), by);
}

std::uint64_t FiniteGroup::element_order(Element a) const { return impl_->element_orders[a.id]; }

std::uint64_t FiniteGroup::exponent() const noexcept { return impl_->exponent; }

std::span<const std::uint64_t> FiniteGroup::element_orders() const noexcept {
  return impl_->element_orders;
}

std::span<const Element> FiniteGroup::generators() const noexcept { return impl_->generators; }

const std::string& FiniteGroup::name() const noexcept { return impl_->name; }

std::string FiniteGroup::label(Element a) const {
  const Impl& g = *impl_;
  if (!g.factors.empty()) {
    std::string out = "(";
    auto t = g.index.tuple(a.id);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t[i]);
    }
    return out + ")";
  }
  if (a.id < g.labels.size()) return g.labels[a.id];
  return std::to_string(a.id);
}

bool FiniteGroup::has_table() const noexcept { return !impl_->table.empty(); }

std::span<const std::uint32_t> FiniteGroup::table() const noexcept { return impl_->table; }

bool FiniteGroup::is_tuple_group() const noexcept { return !impl_->factors.empty(); }

std::size_t FiniteGroup::arity() const noexcept { return impl_->factors.size(); }

std::span<const FiniteGroup> FiniteGroup::factors() const noexcept { return impl_->factors; }

std::span<const std::uint32_t> FiniteGroup::coordinates(Element a) const {
  return impl_->index.tuple(a.id);
}

std::optional<Element> FiniteGroup::find(std::span<const std::uint32_t> coords) const {
  if (!is_tuple_group() || coords.size() != arity()) return std::nullopt;
  auto index = impl_->index.find(coords);
  if (!index) return std::nullopt;
  return Element{*index};
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return FiniteGroup(impl);
}

std::vector<Element> greedy_generators(const FiniteGroup& group) {
  const std::size_t m = group.order();
  std::vector<Element> gens;
  std::vector<Element> current{kIdentity};
  std::vector<char> in(m, 0);
  in[0] = 1;
  while (current.size() < m) {
    Element best{};
    std::uint64_t best_order = 0;
    for (std::uint32_t a = 0; a < m; ++a) {
      if (!in[a] && group.element_order(Element{a}) > best_order) {
        best = Element{a};
        best_order = group.element_order(best);
      }
    }
    gens.push_back(best);
    current = detail::close_elements(group, gens);
    for (Element e : current) in[e.id] = 1;
  }
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Element> without = gens;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (detail::close_elements(group, without).size() == m) gens = std::move(without);
  }
  return gens;
}

FiniteGroup to_table_group(const FiniteGroup& group, const Limits& limits) {
  if (group.has_table()) return group;
  const std::size_t m = group.order();
  if (m > limits.max_table_order) {
    throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(m) +
                                                 " exceeds table cap " +
                                                 std::to_string(limits.max_table_order));
  }
  std::vector<std::uint32_t> table(m * m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      table[a * m + b] = group.multiply(Element{a}, Element{b}).id;
    }
  }
  TableOptions options;
  options.name = group.name();
  options.generators.assign(group.generators().begin(), group.generators().end());
  options.trusted = true;
  options.labels.reserve(m);
  for (std::uint32_t a = 0; a < m; ++a) options.labels.push_back(group.label(Element{a}));
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

std::string check_group_axioms(const FiniteGroup& group) {
  const std::size_t m = group.order();
  for (std::uint32_t a = 0; a < m; ++a) {
    Element x{a};
    if (group.multiply(kIdentity, x) != x || group.multiply(x, kIdentity) != x) {
      return "identity law fails at element " + std::to_string(a);
    }
    Element inv = group.invert(x);
    if (group.multiply(x, inv) != kIdentity || group.multiply(inv, x) != kIdentity) {
      return "inverse law fails at element " + std::to_string(a);
    }
  }
  auto witness = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    std::ostringstream out;
    out << "associativity fails at (" << a << ", " << b << ", " << c << ")";
    return out.str();
  };
  if (m <= 512) {
    for (std::uint32_t a = 0; a < m; ++a) {
      for (std::uint32_t b = 0; b < m; ++b) {
        Element ab = group.multiply(Element{a}, Element{b});
        for (std::uint32_t c = 0; c < m; ++c) {
          if (group.multiply(ab, Element{c}) !=
              group.multiply(Element{a}, group.multiply(Element{b}, Element{c}))) {
            return witness(a, b, c);
          }
        }
      }
    }
    return {};
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(m - 1));
  for (int i = 0; i < 10000; ++i) {
    Element a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
    if (group.multiply(group.multiply(a, b), c) != group.multiply(a, group.multiply(b, c))) {
      return witness(a.id, b.id, c.id);
    }
  }
  return {};
}

}  // namespace homcover
