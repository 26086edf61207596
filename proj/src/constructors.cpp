#include "homcover/constructors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "homcover/detail/tuple_index.hpp"
#include "homcover/error.hpp"

namespace homcover {

namespace {

void require_order(std::uint64_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_table_order) {
    throw Error(ErrorKind::OrderCapExceeded, what + " has order " + std::to_string(order) +
                                                 ", above the table cap " +
                                                 std::to_string(limits.max_table_order));
  }
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

// Builds the table group of a set of permutations that is already closed.
FiniteGroup table_from_permutations(std::vector<Permutation> perms, std::size_t degree,
                                    const std::vector<Permutation>& gens, std::string name,
                                    const Limits& limits) {
  std::sort(perms.begin(), perms.end());
  const std::size_t m = perms.size();
  std::vector<std::uint32_t> flat;
  flat.reserve(m * degree);
  for (const auto& p : perms) flat.insert(flat.end(), p.begin(), p.end());
  auto index = detail::TupleIndex::over(std::move(flat), degree);

  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table[a * m + b] = *index.find(compose(perms[a], perms[b]));
    }
  }
  TableOptions options;
  options.name = std::move(name);
  for (const auto& g : gens) {
    Element e{*index.find(g)};
    if (e != kIdentity &&
        std::find(options.generators.begin(), options.generators.end(), e) ==
            options.generators.end()) {
      options.generators.push_back(e);
    }
  }
  for (const auto& p : perms) options.labels.push_back(cycle_notation(p));
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

std::vector<Permutation> close_permutations(std::span<const Permutation> gens, std::size_t degree,
                                            const Limits& limits) {
  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  detail::TupleIndex seen(degree);
  seen.insert(identity);
  std::vector<Permutation> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = compose(elements[i], g);
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > limits.max_table_order) {
          throw Error(ErrorKind::OrderCapExceeded,
                      "permutation group exceeds the table cap " +
                          std::to_string(limits.max_table_order));
        }
      }
    }
  }
  return elements;
}

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    throw Error(ErrorKind::OrderCapExceeded, "group order overflows 64 bits");
  }
  return a * b;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FiniteGroup cyclic_group(std::uint64_t k, const Limits& limits) {
  if (k == 0) throw Error(ErrorKind::InvalidSpec, "cyclic group order must be positive");
  require_order(k, limits, "C" + std::to_string(k));
  std::vector<std::uint32_t> table(k * k);
  for (std::uint64_t a = 0; a < k; ++a) {
    for (std::uint64_t b = 0; b < k; ++b) table[a * k + b] = static_cast<std::uint32_t>((a + b) % k);
  }
  TableOptions options;
  options.name = "C" + std::to_string(k);
  if (k > 1) options.generators = {Element{1}};
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

FiniteGroup dihedral_group(std::uint64_t k, const Limits& limits) {
  if (k == 0) throw Error(ErrorKind::InvalidSpec, "dihedral parameter must be positive");
  const std::uint64_t m = 2 * k;
  require_order(m, limits, "D" + std::to_string(k));
  // (i, j) = r^i s^j with id j*k + i.
  std::vector<std::uint32_t> table(m * m);
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t b = 0; b < m; ++b) {
      std::uint64_t i1 = a % k, j1 = a / k, i2 = b % k, j2 = b / k;
      std::uint64_t i = j1 ? (i1 + k - i2) % k : (i1 + i2) % k;
      table[a * m + b] = static_cast<std::uint32_t>(((j1 ^ j2) * k) + i);
    }
  }
  TableOptions options;
  options.name = "D" + std::to_string(k);
  if (k > 1) options.generators.push_back(Element{1});
  options.generators.push_back(Element{static_cast<std::uint32_t>(k)});
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

FiniteGroup quaternion_group() {
  // ids: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  struct Signed {
    int unit;
    bool negative;
  };
  // Products of the units 1, i, j, k.
  static constexpr Signed unit_product[4][4] = {
      {{0, false}, {1, false}, {2, false}, {3, false}},
      {{1, false}, {0, true}, {3, false}, {2, true}},
      {{2, false}, {3, true}, {0, true}, {1, false}},
      {{3, false}, {2, false}, {1, true}, {0, true}},
  };
  std::vector<std::uint32_t> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      Signed p = unit_product[a / 2][b / 2];
      bool negative = p.negative != ((a % 2) != (b % 2));
      table[a * 8 + b] = static_cast<std::uint32_t>(p.unit * 2 + (negative ? 1 : 0));
    }
  }
  TableOptions options;
  options.name = "Q8";
  options.generators = {Element{2}, Element{4}};
  options.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(std::move(table), std::move(options));
}

FiniteGroup symmetric_group(std::uint64_t k, const Limits& limits) {
  if (k > 8) throw Error(ErrorKind::InvalidSpec, "symmetric groups are supported for k <= 8");
  std::uint64_t order = 1;
  for (std::uint64_t i = 2; i <= k; ++i) order *= i;
  require_order(order, limits, "S" + std::to_string(k));
  const std::size_t degree = std::max<std::uint64_t>(k, 1);
  std::vector<Permutation> perms;
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Permutation> gens;
  if (k >= 2) {
    gens.push_back(permutation_from_cycles({{1, 2}}, degree));
    std::vector<std::uint32_t> cycle(k);
    std::iota(cycle.begin(), cycle.end(), 1u);
    if (k > 2) gens.push_back(permutation_from_cycles({cycle}, degree));
  }
  return table_from_permutations(std::move(perms), degree, gens, "S" + std::to_string(k), limits);
}

FiniteGroup alternating_group(std::uint64_t k, const Limits& limits) {
  if (k > 8) throw Error(ErrorKind::InvalidSpec, "alternating groups are supported for k <= 8");
  std::uint64_t order = 1;
  for (std::uint64_t i = 3; i <= k; ++i) order *= i;
  require_order(order, limits, "A" + std::to_string(k));
  const std::size_t degree = std::max<std::uint64_t>(k, 1);
  std::vector<Permutation> perms;
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < degree; ++i) {
      for (std::size_t j = i + 1; j < degree; ++j) inversions += p[i] > p[j];
    }
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Permutation> gens;
  for (std::uint32_t i = 3; i <= k; ++i) gens.push_back(permutation_from_cycles({{1, 2, i}}, degree));
  return table_from_permutations(std::move(perms), degree, gens, "A" + std::to_string(k), limits);
}

FiniteGroup elementary_abelian_group(std::uint64_t p, std::uint64_t m, const Limits& limits) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::PreconditionViolated, std::to_string(p) + " is not prime");
  }
  if (m == 0) return FiniteGroup();
  std::vector<FiniteGroup> factors(m, cyclic_group(p, limits));
  auto group = direct_product(factors, limits);
  return group.renamed("C" + std::to_string(p) + "^" + std::to_string(m));
}

std::uint64_t pq_scalar(std::uint64_t p, std::uint64_t q) {
  for (std::uint64_t a = 2; a < q; ++a) {
    std::uint64_t x = 1;
    std::uint64_t ord = 0;
    do {
      x = x * a % q;
      ++ord;
    } while (x != 1);
    if (ord == p) return a;
  }
  throw Error(ErrorKind::InvalidPQ, "no scalar of order " + std::to_string(p) + " modulo " +
                                        std::to_string(q));
}

FiniteGroup pq_group(std::uint64_t p, std::uint64_t q, const Limits& limits) {
  const std::string name = "pq(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (!is_prime(p) || !is_prime(q) || (q - 1) % p != 0) {
    throw Error(ErrorKind::InvalidPQ, name + ": need primes p, q with p | q-1");
  }
  const std::uint64_t m = p * q;
  require_order(m, limits, name);
  const std::uint64_t a = pq_scalar(p, q);
  std::vector<std::uint64_t> scalar_power(p, 1);
  for (std::uint64_t w = 1; w < p; ++w) scalar_power[w] = scalar_power[w - 1] * a % q;

  std::vector<std::uint32_t> table(m * m);
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      std::uint64_t v1 = x % q, w1 = x / q, v2 = y % q, w2 = y / q;
      std::uint64_t v = (v1 + scalar_power[w1] * v2) % q;
      std::uint64_t w = (w1 + w2) % p;
      table[x * m + y] = static_cast<std::uint32_t>(w * q + v);
    }
  }
  TableOptions options;
  options.name = name;
  options.generators = {Element{1}, Element{static_cast<std::uint32_t>(q)}};
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

FiniteGroup direct_product(std::span<const FiniteGroup> factors, const Limits& limits) {
  if (factors.empty()) return FiniteGroup();
  std::uint64_t order = 1;
  std::string name;
  for (const auto& f : factors) {
    order = checked_product(order, f.order());
    if (!name.empty()) name += "x";
    bool compound = f.name().find('x') != std::string::npos || f.name().empty();
    name += compound ? "(" + f.name() + ")" : f.name();
  }
  require_order(order, limits, name);
  const std::size_t k = factors.size();
  const std::size_t m = order;

  // Mixed radix: id = ((c0 * |F1| + c1) * |F2| + c2) ...
  std::vector<std::uint32_t> digits(m * k);
  for (std::size_t id = 0; id < m; ++id) {
    std::size_t rest = id;
    for (std::size_t i = k; i-- > 0;) {
      digits[id * k + i] = static_cast<std::uint32_t>(rest % factors[i].order());
      rest /= factors[i].order();
    }
  }
  auto encode = [&](auto&& digit_of) {
    std::size_t id = 0;
    for (std::size_t i = 0; i < k; ++i) id = id * factors[i].order() + digit_of(i);
    return static_cast<std::uint32_t>(id);
  };

  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table[a * m + b] = encode([&](std::size_t i) {
        return factors[i].multiply(Element{digits[a * k + i]}, Element{digits[b * k + i]}).id;
      });
    }
  }

  TableOptions options;
  options.name = name;
  for (std::size_t i = 0; i < k; ++i) {
    for (Element g : factors[i].generators()) {
      options.generators.push_back(Element{encode([&](std::size_t j) { return j == i ? g.id : 0u; })});
    }
  }
  options.labels.reserve(m);
  for (std::size_t id = 0; id < m; ++id) {
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) label += ",";
      label += factors[i].label(Element{digits[id * k + i]});
    }
    options.labels.push_back(label + ")");
  }
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

Permutation permutation_from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                    std::size_t degree) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0u);
  // Cycles compose left to right, matching the group product.
  for (const auto& cycle : cycles) {
    Permutation step(degree);
    std::iota(step.begin(), step.end(), 0u);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::uint32_t from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree) {
        throw Error(ErrorKind::InvalidSpec, "cycle point out of range 1.." + std::to_string(degree));
      }
      step[from - 1] = to - 1;
    }
    perm = compose(perm, step);
  }
  return perm;
}

std::string cycle_notation(const Permutation& perm) {
  std::string out;
  std::vector<char> done(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += ",";
      out += std::to_string(x + 1);
      first = false;
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup permutation_group(std::span<const Permutation> generators, std::size_t degree,
                              const Limits& limits) {
  for (const auto& g : generators) {
    std::vector<char> hit(degree, 0);
    if (g.size() != degree) throw Error(ErrorKind::InvalidSpec, "permutation has wrong degree");
    for (auto x : g) {
      if (x >= degree || hit[x]) throw Error(ErrorKind::InvalidSpec, "not a permutation");
      hit[x] = 1;
    }
  }
  auto perms = close_permutations(generators, degree, limits);
  std::string name = "perm:";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) name += ";";
    name += cycle_notation(generators[i]);
  }
  return table_from_permutations(std::move(perms), degree,
                                 std::vector<Permutation>(generators.begin(), generators.end()),
                                 name, limits);
}

FiniteGroup read_table_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open table file '" + path + "'");
  std::uint64_t m = 0;
  if (!(in >> m) || m == 0) {
    throw Error(ErrorKind::InvalidSpec, "table file '" + path + "': missing positive order");
  }
  require_order(m, limits, "table:" + path);
  std::vector<std::uint32_t> table(m * m);
  for (std::uint64_t i = 0; i < m * m; ++i) {
    std::int64_t v;
    if (!(in >> v)) {
      throw Error(ErrorKind::InvalidSpec, "table file '" + path + "': expected " +
                                              std::to_string(m * m) + " entries, got " +
                                              std::to_string(i));
    }
    if (v < 0 || static_cast<std::uint64_t>(v) >= m) {
      throw Error(ErrorKind::NotAGroup, "table file '" + path + "': entry " + std::to_string(v) +
                                            " out of range");
    }
    table[i] = static_cast<std::uint32_t>(v);
  }
  std::string extra;
  if (in >> extra) {
    throw Error(ErrorKind::InvalidSpec, "table file '" + path + "': trailing data '" + extra + "'");
  }
  TableOptions options;
  options.name = "table:" + path;
  return FiniteGroup::from_table(std::move(table), std::move(options), limits);
}

void write_table_file(std::ostream& out, const FiniteGroup& group) {
  const std::size_t m = group.order();
  out << m << "\n";
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      if (b) out << ' ';
      out << group.multiply(Element{a}, Element{b}).id;
    }
    out << "\n";
  }
}

}  // namespace homcover
