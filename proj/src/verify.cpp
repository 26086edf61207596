#include "homcover/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "homcover/constructors.hpp"
#include "homcover/cover.hpp"
#include "homcover/detail/graph_checker.hpp"
#include "homcover/error.hpp"
#include "homcover/genseq.hpp"
#include "homcover/homomorphism.hpp"
#include "homcover/lattice.hpp"
#include "homcover/orbits.hpp"
#include "homcover/spec.hpp"
#include "homcover/subgroup.hpp"

namespace homcover {

namespace {

std::string sequence_text(std::span<const Element> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i].id);
  }
  return out + ")";
}

std::string power_text(std::uint64_t base, std::uint64_t e) {
  return std::to_string(base) + "^" + std::to_string(e);
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Re-analysis works best on a table; large tuple groups stay as they are.
FiniteGroup analysis_group(const FiniteGroup& g, const Limits& limits) {
  if (g.has_table() || g.order() > limits.max_table_order) return g;
  return to_table_group(g, limits);
}

CheckReport new_report(std::string check, const FiniteGroup& group, std::size_t n) {
  CheckReport report;
  report.check = std::move(check);
  report.group = group.name();
  report.n = n;
  return report;
}

std::string flags_text(const StructureFlags& f) {
  return std::string(f.is_abelian ? "abelian" : "nonabelian") + "," +
         (f.is_nilpotent ? "nilpotent" : "non-nilpotent") + "," +
         (f.is_solvable ? "solvable" : "non-solvable");
}

bool is_nonabelian_simple(const FiniteGroup& g) { return !is_abelian(g) && is_simple(g); }

void require_nonabelian_simple(const FiniteGroup& g) {
  if (!is_nonabelian_simple(g)) throw Error(ErrorKind::NotSimple, g.name() + " is not a nonabelian simple group");
}

// Primes p < q with |G| = pq and G nonabelian, or InvalidPQ.
std::pair<std::uint64_t, std::uint64_t> pq_primes(const FiniteGroup& g) {
  auto primes = prime_divisors(g.order());
  if (primes.size() != 2 || primes[0] * primes[1] != g.order() || is_abelian(g) ||
      (primes[1] - 1) % primes[0] != 0) {
    throw Error(ErrorKind::InvalidPQ, g.name() + " is not a nonabelian group of order pq");
  }
  return {primes[0], primes[1]};
}

bool pq_shaped(const FiniteGroup& g) {
  try {
    pq_primes(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

CheckReport& CheckReport::add(std::string key, std::string value) {
  data.emplace_back(std::move(key), std::move(value));
  return *this;
}

CheckReport& CheckReport::add(std::string key, std::uint64_t value) {
  return add(std::move(key), std::to_string(value));
}

CheckReport& CheckReport::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

CheckReport& CheckReport::fail(std::string witness_text) {
  if (status != CheckStatus::Fail) {
    status = CheckStatus::Fail;
    witness = std::move(witness_text);
  } else {
    witness += "; " + witness_text;
  }
  return *this;
}

const std::string* CheckReport::find(std::string_view key) const {
  for (const auto& [k, v] : data) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Character::on_basis(std::size_t i) const {
  std::uint64_t out = 1;
  for (std::uint32_t k = 0; k < exponents[i]; ++k) out = out * omega % q;
  return out;
}

std::uint64_t Character::value(const std::vector<std::uint32_t>& z) const {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) e += static_cast<std::uint64_t>(exponents[i]) * z[i];
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < e % p; ++k) out = out * omega % q;
  return out;
}

std::vector<Character> all_characters(std::uint64_t p, std::uint64_t q, std::size_t n) {
  std::vector<Character> out;
  const std::uint64_t omega = pq_scalar(p, q);
  const std::uint64_t total = ipow(p, n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Character chi{p, q, omega, std::vector<std::uint32_t>(n)};
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      chi.exponents[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    out.push_back(std::move(chi));
  }
  return out;
}

CheckReport check_free_action(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  CheckReport report = new_report("free_action", group, n);
  OrbitDecomposition d = orbit_decompose(group, n, OrbitStrategy::Automatic, limits);
  const std::uint64_t aut = aut_order(group, limits);
  auto [lo, hi] = std::minmax_element(d.orbit_sizes.begin(), d.orbit_sizes.end());
  report.add("gamma", d.gamma_count)
      .add("aut_order", aut)
      .add("h", d.h_n)
      .add("orbit_size_min", *lo)
      .add("orbit_size_max", *hi)
      .add("strategy", std::string(strategy_name(d.strategy)));
  for (std::size_t i = 0; i < d.orbit_sizes.size(); ++i) {
    if (d.orbit_sizes[i] != aut) {
      report.fail("orbit of " + sequence_text(d.representatives[i]) + " has size " +
                  std::to_string(d.orbit_sizes[i]) + ", expected " + std::to_string(aut));
      break;
    }
  }
  if (d.h_n * aut != d.gamma_count) {
    report.fail("h * |Aut| = " + std::to_string(d.h_n * aut) + " differs from |Gamma| = " +
                std::to_string(d.gamma_count));
  }
  return report;
}

CheckReport check_abelian_formula(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  if (!is_abelian(group)) throw Error(ErrorKind::PreconditionViolated, group.name() + " is not abelian");
  CheckReport report = new_report("abelian_formula", group, n);
  CoverResult cover = build_cover(group, n, limits);
  const std::uint64_t k = group.exponent();
  std::vector<FiniteGroup> factors(n, cyclic_group(k, limits));
  FiniteGroup target = direct_product(factors, limits);
  report.add("h", static_cast<std::uint64_t>(cover.h()))
      .add("cover_order", static_cast<std::uint64_t>(cover.cover.order()))
      .add("target", "C" + std::to_string(k) + "^" + std::to_string(n));
  auto iso = find_isomorphism(analysis_group(cover.cover, limits), target);
  report.add("isomorphic", iso.has_value());
  if (!iso) {
    report.fail("cover of order " + std::to_string(cover.cover.order()) + " is not isomorphic to C" +
                std::to_string(k) + "^" + std::to_string(n));
  }
  return report;
}

CheckReport check_nilpotent_sylow(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  if (!structure_predicates(group).is_nilpotent) {
    throw Error(ErrorKind::PreconditionViolated, group.name() + " is not nilpotent");
  }
  CheckReport report = new_report("nilpotent_sylow", group, n);
  CoverResult cover = build_cover(group, n, limits);
  std::vector<FiniteGroup> parts;
  std::string orders;
  for (std::uint64_t p : prime_divisors(group.order())) {
    FiniteGroup sylow = subgroup_as_group(sylow_subgroup(group, p), limits);
    CoverResult part = build_cover(sylow, n, limits);
    parts.push_back(analysis_group(part.cover, limits));
    orders += (orders.empty() ? "" : "x") + std::to_string(part.cover.order());
  }
  report.add("cover_order", static_cast<std::uint64_t>(cover.cover.order())).add("sylow_cover_orders", orders);
  FiniteGroup product = parts.size() == 1 ? parts.front() : direct_product(parts, limits);
  auto iso = find_isomorphism(analysis_group(cover.cover, limits), product);
  report.add("isomorphic", iso.has_value());
  if (!iso) report.fail("H(n,G) of order " + std::to_string(cover.cover.order()) + " vs product " + orders);
  return report;
}

CheckReport check_hall_independence(const FiniteGroup& group, std::size_t n, std::size_t k,
                                    const Limits& limits) {
  require_nonabelian_simple(group);
  if (k == 0) throw Error(ErrorKind::PreconditionViolated, "k must be positive");
  CheckReport report = new_report("hall_independence", group, n);
  OrbitDecomposition d = orbit_decompose(group, n, OrbitStrategy::Automatic, limits);
  if (d.h_n < k) {
    throw Error(ErrorKind::PreconditionViolated, "only " + std::to_string(d.h_n) + " orbits, k = " +
                                                     std::to_string(k));
  }
  std::vector<std::vector<std::uint32_t>> tuples(n, std::vector<std::uint32_t>(k));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) tuples[j][i] = d.representatives[i][j].id;
  }
  FiniteGroup joint = tuple_subgroup(std::vector<FiniteGroup>(k, group), tuples, limits);
  const std::uint64_t expected = ipow(group.order(), k);
  report.add("k", static_cast<std::uint64_t>(k))
      .add("closure_order", static_cast<std::uint64_t>(joint.order()))
      .add("expected", expected);
  if (joint.order() != expected) {
    report.fail("closure of the first " + std::to_string(k) + " representatives has order " +
                std::to_string(joint.order()));
  }

  // An equivalent pair: the first representative and its image under the
  // first nontrivial automorphism.
  const Sequence& s = d.representatives.front();
  for (const Homomorphism& alpha : enumerate_aut(group, limits)) {
    Sequence t;
    for (Element x : s) t.push_back(alpha.apply(x));
    if (t == s) continue;
    std::vector<std::vector<std::uint32_t>> pairs;
    for (std::size_t j = 0; j < n; ++j) pairs.push_back({s[j].id, t[j].id});
    FiniteGroup graph = tuple_subgroup({group, group}, pairs, limits);
    report.add("equivalent_pair_closure", static_cast<std::uint64_t>(graph.order()));
    if (graph.order() >= group.order() * group.order()) {
      report.fail("equivalent pair " + sequence_text(s) + " ~ " + sequence_text(t) +
                  " generates all of S^2");
    }
    break;
  }
  return report;
}

CheckReport check_simple_cover_order(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  require_nonabelian_simple(group);
  CheckReport report = new_report("simple_cover_order", group, n);
  const std::uint64_t gamma = count_gamma(group, n);
  const std::uint64_t aut = aut_order(group, limits);
  const std::uint64_t h = gamma / aut;
  report.add("gamma", gamma).add("aut_order", aut).add("h", h).add("cover_order",
                                                                    power_text(group.order(), h));
  if (h * aut != gamma) report.fail("|Aut| does not divide |Gamma|");
  if (h >= 2) {
    OrbitDecomposition d = orbit_decompose(group, n, OrbitStrategy::Automatic, limits);
    std::vector<std::vector<std::uint32_t>> tuples;
    for (std::size_t j = 0; j < n; ++j) {
      tuples.push_back({d.representatives[0][j].id, d.representatives[1][j].id});
    }
    FiniteGroup pair = tuple_subgroup({group, group}, tuples, limits);
    report.add("pair_closure", static_cast<std::uint64_t>(pair.order()));
    if (pair.order() != group.order() * group.order()) {
      report.fail("two inequivalent representatives generate only " + std::to_string(pair.order()));
    }
  }
  // Build the cover only when it is small enough.
  bool fits = true;
  std::uint64_t full = 1;
  for (std::uint64_t i = 0; i < h && fits; ++i) {
    if (full > limits.max_closure / group.order()) fits = false;
    full *= group.order();
  }
  report.add("built", fits);
  if (fits) {
    CoverResult cover = build_cover(group, n, limits);
    if (cover.cover.order() != full) {
      report.fail("built cover has order " + std::to_string(cover.cover.order()));
    }
  }
  return report;
}

CheckReport check_pq_structure(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  auto [p, q] = pq_primes(group);
  CheckReport report = new_report("pq_structure", group, n);
  const std::uint64_t pn = ipow(p, n);
  const std::uint64_t v_rank = (n - 1) * (pn - 1);
  CoverResult built = build_cover(group, n, limits);  // refuses above the cap
  const FiniteGroup c = analysis_group(built.cover, limits);

  const std::uint64_t expected_order = ipow(q, v_rank) * pn;
  report.add("p", p).add("q", q).add("cover_order", static_cast<std::uint64_t>(c.order()));
  if (c.order() != expected_order) {
    report.fail("cover order " + std::to_string(c.order()) + ", expected " + std::to_string(expected_order));
  }

  Subgroup v = sylow_subgroup(c, q);
  FiniteGroup vg = subgroup_as_group(v, limits);
  const bool v_normal = is_normal(v);
  const bool v_elementary =
      is_abelian(vg) && std::all_of(v.elements().begin() + 1, v.elements().end(),
                                    [&](Element x) { return c.element_order(x) == q; });
  const std::size_t v_rank_found = rank(vg);
  report.add("v_order", static_cast<std::uint64_t>(v.order()))
      .add("v_normal", v_normal)
      .add("v_elementary_abelian", v_elementary)
      .add("v_rank", static_cast<std::uint64_t>(v_rank_found));
  if (!v_normal) report.fail("Sylow " + std::to_string(q) + "-subgroup is not normal");
  if (!v_elementary) report.fail("Sylow " + std::to_string(q) + "-subgroup is not elementary abelian");
  if (v_rank_found != v_rank) {
    report.fail("V has rank " + std::to_string(v_rank_found) + ", expected " + std::to_string(v_rank));
  }

  if (v_normal) {
    QuotientResult quotient = quotient_group(c, v, limits);
    const bool elementary = quotient.group.order() == pn &&
                            find_isomorphism(quotient.group, elementary_abelian_group(p, n, limits)).has_value();
    report.add("quotient_order", static_cast<std::uint64_t>(quotient.group.order()))
        .add("quotient_elementary_abelian", elementary);
    if (!elementary) report.fail("H/V is not elementary abelian of order " + std::to_string(pn));
  }

  Subgroup z = center(c);
  report.add("center_order", static_cast<std::uint64_t>(z.order()));
  if (!z.is_trivial()) report.fail("center has order " + std::to_string(z.order()));

  // Complement: a Sylow p-subgroup with its lexicographically first basis.
  Subgroup complement = sylow_subgroup(c, p);
  FiniteGroup pg = subgroup_as_group(complement, limits);
  auto local_basis = first_generating_sequence(pg, n);
  if (complement.order() != pn || !local_basis || !is_abelian(pg) || pg.exponent() != p) {
    report.fail("Sylow " + std::to_string(p) + "-subgroup is not elementary abelian of rank " +
                std::to_string(n));
    return report;
  }
  Sequence basis;
  for (Element e : *local_basis) basis.push_back(complement.elements()[e.id]);

  std::string sizes;
  std::uint64_t product = 1;
  std::vector<int> membership(c.order(), 0);
  for (const Character& chi : all_characters(p, q, n)) {
    std::uint64_t size = 0;
    for (Element x : v.elements()) {
      bool eigen = true;
      for (std::size_t i = 0; i < n && eigen; ++i) {
        Element conj = c.conjugate(x, c.invert(basis[i]));  // z x z^-1
        eigen = conj == c.power(x, static_cast<std::int64_t>(chi.on_basis(i)));
      }
      if (eigen) {
        ++size;
        if (x != kIdentity) ++membership[x.id];
      }
    }
    std::string name = "chi";
    for (auto e : chi.exponents) name += std::to_string(e);
    if (chi.is_trivial()) {
      report.add("trivial_eigenspace", size);
      if (size != 1) report.fail("trivial character has eigenspace of size " + std::to_string(size));
    } else {
      sizes += (sizes.empty() ? "" : ",") + std::to_string(size);
      product *= size;
      const std::uint64_t expected = ipow(q, n - 1);
      if (size != expected) {
        report.fail(name + " eigenspace has size " + std::to_string(size) + ", expected " +
                    std::to_string(expected));
      }
    }
  }
  const bool disjoint = std::all_of(membership.begin(), membership.end(), [](int m) { return m <= 1; });
  report.add("nontrivial_characters", pn - 1)
      .add("eigenspace_sizes", sizes)
      .add("eigenspaces_independent", disjoint && product == v.order());
  if (!disjoint) report.fail("eigenspaces of distinct characters intersect");
  if (product != v.order()) report.fail("eigenspace sizes multiply to " + std::to_string(product));
  return report;
}

CheckReport check_universal_lifting(const FiniteGroup& group, std::size_t n, std::size_t samples,
                                    std::uint64_t seed, const Limits& limits) {
  CheckReport report = new_report("universal_lifting", group, n);
  const bool homogeneous = is_homogeneous(group, n, limits);
  report.add("homogeneous", homogeneous);
  SubgroupLattice lattice = subgroup_lattice(group, limits);
  std::vector<Subgroup> normals = normal_subgroups(lattice);

  if (!homogeneous) {
    // Two inequivalent tuples of G itself cannot be matched by a surjection
    // G -> G, since it would be an automorphism.
    OrbitDecomposition d = orbit_decompose(group, n, OrbitStrategy::Automatic, limits);
    report.add("h", d.h_n);
    if (d.h_n >= 2) {
      const Sequence& t = d.representatives[0];
      const Sequence& s = d.representatives[1];
      if (!extend_hom(group, t, group, s)) {
        report.fail("no surjection G -> G maps " + sequence_text(t) + " to " + sequence_text(s));
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uint64_t pairs_checked = 0;
    for (const Subgroup& normal : normals) {
      QuotientResult quotient = quotient_group(group, normal, limits);
      const FiniteGroup& h = quotient.group;
      auto try_pair = [&](const Sequence& t, const Sequence& s) {
        ++pairs_checked;
        auto f = extend_hom(group, t, h, s);
        if (!f || !f->is_surjective()) {
          report.fail("quotient of order " + std::to_string(h.order()) + ": " + sequence_text(t) +
                      " does not map onto " + sequence_text(s));
        }
      };
      const std::uint64_t gamma_g = count_gamma(group, n);
      const std::uint64_t gamma_h = count_gamma(h, n);
      if (gamma_g * gamma_h <= samples) {
        auto ts = enumerate_gamma(group, n, limits);
        auto ss = enumerate_gamma(h, n, limits);
        for (const auto& t : ts) {
          for (const auto& s : ss) try_pair(t, s);
        }
      } else {
        for (std::size_t i = 0; i < samples; ++i) {
          try_pair(*sample_generating_sequence(group, n, rng), *sample_generating_sequence(h, n, rng));
        }
      }
    }
    report.add("quotients", static_cast<std::uint64_t>(normals.size())).add("pairs_checked", pairs_checked);
  }

  // H(n, K) is a quotient of H(n, G) for each proper quotient K.
  CoverResult cover = build_cover(group, n, limits);
  const FiniteGroup c = analysis_group(cover.cover, limits);
  std::uint64_t cover_quotients = 0;
  std::uint64_t skipped = 0;
  for (const Subgroup& normal : normals) {
    if (normal.is_trivial() || normal.is_whole()) continue;
    FiniteGroup k = quotient_group(group, normal, limits).group;
    CoverResult kc = build_cover(k, n, limits);
    if (c.order() > 2000 || c.order() % kc.cover.order() != 0) {
      if (c.order() % kc.cover.order() != 0) {
        report.fail("|H(n,K)| = " + std::to_string(kc.cover.order()) + " does not divide |H(n,G)|");
      } else {
        ++skipped;
      }
      continue;
    }
    ++cover_quotients;
    if (!find_surjection(c, analysis_group(kc.cover, limits))) {
      report.fail("no surjection H(n,G) -> H(n,K) for |K| = " + std::to_string(k.order()));
    }
  }
  report.add("cover_quotients_checked", cover_quotients).add("cover_quotients_skipped", skipped);
  return report;
}

CheckReport check_tower(const FiniteGroup& group, std::size_t n, std::size_t m, const Limits& limits) {
  CheckReport report = new_report("tower", group, n);
  report.add("m", static_cast<std::uint64_t>(m));
  std::optional<TowerMap> tower;
  try {
    tower.emplace(cover_tower_map(group, n, m, limits));
  } catch (const Error& e) {
    if (!is_cap_error(e.kind())) throw;
    report.status = CheckStatus::Skipped;
    report.add("reason", std::string(e.what()));
    return report;
  }
  const Homomorphism& f = tower->map;
  report.add("upper_order", static_cast<std::uint64_t>(tower->upper.cover.order()))
      .add("lower_order", static_cast<std::uint64_t>(tower->lower.cover.order()))
      .add("kernel_order", static_cast<std::uint64_t>(f.kernel().order()))
      .add("surjective", f.is_surjective());
  if (!f.is_surjective()) report.fail("tower map is not surjective");

  // Splitting: a homomorphism sigma: lower -> upper with f(sigma(g)) = g on
  // the generators of the lower cover, searched through the fibers.
  const FiniteGroup& lower = tower->lower.cover;
  const FiniteGroup& upper = tower->upper.cover;
  const Sequence& gens = tower->lower.cover_generators;
  std::vector<std::vector<Element>> fibers(gens.size());
  std::uint64_t space = 1;
  for (std::uint32_t a = 0; a < upper.order(); ++a) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (f.apply(Element{a}) == gens[j]) fibers[j].push_back(Element{a});
    }
  }
  for (const auto& fiber : fibers) space = std::min<std::uint64_t>(space * fiber.size(), 1ull << 40);
  if (space > 1000000) {
    report.add("splitting", std::string("not-searched"));
    return report;
  }
  detail::GraphChecker checker;
  Sequence images;
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == gens.size()) return true;
    for (Element x : fibers[j]) {
      images.push_back(x);
      std::span<const Element> prefix(gens.data(), j + 1);
      if (checker.run(lower, prefix, upper, images) && self(self, j + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (search(search, 0)) {
    report.add("splitting", std::string("found")).add("splitting_images", sequence_text(images));
  } else {
    report.add("splitting", std::string("none"));
  }
  return report;
}

CheckReport check_cover_invariants(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  CheckReport report = new_report("cover_invariants", group, n);
  CoverResult cover = build_cover(group, n, limits);
  const FiniteGroup c = analysis_group(cover.cover, limits);
  report.add("cover_order", static_cast<std::uint64_t>(c.order()));

  OrbitDecomposition d = orbit_decompose(c, n, OrbitStrategy::Automatic, limits);
  report.add("cover_h", d.h_n);
  if (d.h_n != 1) report.fail("h_n(cover) = " + std::to_string(d.h_n));

  const std::size_t r = rank(c);
  report.add("cover_rank", static_cast<std::uint64_t>(r));
  if (r != n) report.fail("rank(cover) = " + std::to_string(r));

  report.add("exponent", c.exponent());
  if (c.exponent() != group.exponent()) {
    report.fail("exponent " + std::to_string(c.exponent()) + " vs " + std::to_string(group.exponent()));
  }

  StructureFlags fg = structure_predicates(group);
  StructureFlags fc = structure_predicates(c);
  report.add("flags", flags_text(fc));
  if (!(fg == fc)) report.fail("flags " + flags_text(fc) + " vs " + flags_text(fg));

  const bool same_primes = prime_divisors(c.order()) == prime_divisors(group.order());
  report.add("same_primes", same_primes);
  if (!same_primes) report.fail("cover order " + std::to_string(c.order()) + " has other primes");

  // H(n, cover) is the cover itself: one orbit, so one coordinate, and the
  // projection must be an isomorphism.
  CoverResult again = cover_from_representatives(c, n, d.representatives, limits);
  const bool idempotent = again.cover.order() == c.order() && again.projections.front().is_injective();
  report.add("idempotent", idempotent);
  if (!idempotent) report.fail("H(n, H(n,G)) has order " + std::to_string(again.cover.order()));
  return report;
}

CheckReport check_gaschutz(const std::vector<std::string>& specs, std::size_t trials, std::uint64_t seed,
                           const Limits& limits) {
  CheckReport report;
  report.check = "gaschutz";
  report.group = "corpus";
  if (specs.empty()) throw Error(ErrorKind::PreconditionViolated, "empty group pool");
  std::mt19937_64 rng(seed);
  std::map<std::string, std::pair<FiniteGroup, std::vector<Subgroup>>> cache;
  std::uint64_t failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::string& spec = specs[rng() % specs.size()];
    auto it = cache.find(spec);
    if (it == cache.end()) {
      FiniteGroup g = construct_group(spec, limits);
      it = cache.emplace(spec, std::make_pair(g, normal_subgroups(subgroup_lattice(g, limits)))).first;
    }
    const FiniteGroup& g = it->second.first;
    const auto& normals = it->second.second;
    const Subgroup& normal = normals[rng() % normals.size()];
    QuotientResult quotient = quotient_group(g, normal, limits);
    const std::size_t n = std::max<std::size_t>(1, rank(g) + rng() % 2);
    auto s = sample_generating_sequence(quotient.group, n, rng);
    if (!s) {
      ++failures;
      report.fail(spec + ": quotient has no generating " + std::to_string(n) + "-tuple");
      continue;
    }
    Sequence t = lift_gaschutz(quotient.projection, *s);
    bool maps = t.size() == s->size();
    for (std::size_t i = 0; maps && i < t.size(); ++i) maps = quotient.projection.apply(t[i]) == (*s)[i];
    if (!maps || !is_generating(g, t)) {
      ++failures;
      report.fail(spec + ": lift " + sequence_text(t) + " of " + sequence_text(*s) + " is invalid");
    }
  }
  report.add("trials", static_cast<std::uint64_t>(trials))
      .add("groups", static_cast<std::uint64_t>(cache.size()))
      .add("failures", failures);
  return report;
}

std::vector<std::string_view> suite_names() {
  return {"free", "abelian", "nilpotent", "hall", "simple", "pq", "lifting", "tower", "invariants", "all"};
}

std::vector<CheckReport> run_suite(std::string_view suite, const FiniteGroup& group,
                                   const std::string& spec_text, const SuiteOptions& options,
                                   const Limits& limits) {
  const std::size_t n = options.n;
  const std::size_t m = options.m ? options.m : (n > 1 ? n - 1 : 0);
  using Job = std::function<CheckReport()>;
  struct Entry {
    std::string_view name;
    std::string_view check;
    std::function<bool()> applies;
    Job run;
  };
  const std::vector<Entry> entries = {
      {"free", "free_action", [] { return true; }, [&] { return check_free_action(group, n, limits); }},
      {"abelian", "abelian_formula", [&] { return is_abelian(group); }, [&] { return check_abelian_formula(group, n, limits); }},
      {"nilpotent", "nilpotent_sylow", [&] { return structure_predicates(group).is_nilpotent; },
       [&] { return check_nilpotent_sylow(group, n, limits); }},
      {"hall", "hall_independence", [&] { return is_nonabelian_simple(group); },
       [&] { return check_hall_independence(group, n, options.k, limits); }},
      {"simple", "simple_cover_order", [&] { return is_nonabelian_simple(group); },
       [&] { return check_simple_cover_order(group, n, limits); }},
      {"pq", "pq_structure", [&] { return pq_shaped(group); }, [&] { return check_pq_structure(group, n, limits); }},
      {"lifting", "universal_lifting",
       [&] { return group.order() <= limits.max_lattice_order && is_homogeneous(group, n, limits); },
       [&] { return check_universal_lifting(group, n, options.samples, options.seed, limits); }},
      {"tower", "tower", [&] { return m >= 1 && m >= rank(group); }, [&] { return check_tower(group, n, m, limits); }},
      {"invariants", "cover_invariants", [] { return true; }, [&] { return check_cover_invariants(group, n, limits); }},
  };

  auto label = [&](CheckReport report) {
    report.group = spec_text;
    return report;
  };

  if (suite != "all") {
    for (const Entry& e : entries) {
      if (e.name == suite) return {label(e.run())};
    }
    throw Error(ErrorKind::InvalidSpec, "unknown suite '" + std::string(suite) + "'");
  }

  std::vector<CheckReport> reports(entries.size());
  auto run_one = [&](std::size_t i) {
    const Entry& e = entries[i];
    CheckReport skipped;
    skipped.check = std::string(e.check);
    skipped.group = spec_text;
    skipped.n = n;
    skipped.status = CheckStatus::Skipped;
    try {
      if (!e.applies()) {
        reports[i] = skipped.add("reason", std::string("not applicable"));
        return;
      }
      reports[i] = label(e.run());
    } catch (const Error& err) {
      if (!is_cap_error(err.kind()) && err.kind() != ErrorKind::PreconditionViolated) throw;
      reports[i] = skipped.add("reason", std::string(err.what()));
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, entries.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) run_one(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) run_one(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace homcover
