#include "homcover/cover.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "homcover/constructors.hpp"
#include "homcover/detail/graph_checker.hpp"
#include "homcover/error.hpp"
#include "homcover/genseq.hpp"
#include "homcover/orbits.hpp"
#include "homcover/subgroup.hpp"

namespace homcover {

namespace {

// Tuple storage is order x arity 32-bit ids; keep it under 1 GiB.
constexpr std::uint64_t kMaxTupleEntries = 1ull << 28;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e && out != kSaturated; ++i) out = saturating_mul(out, base);
  return out;
}

std::string cover_name(const FiniteGroup& group, std::size_t n) {
  return "H(" + std::to_string(n) + "," + group.name() + ")";
}

[[noreturn]] void too_large(const FiniteGroup& group, std::size_t n, const std::string& why) {
  throw Error(ErrorKind::CoverTooLarge, cover_name(group, n) + " " + why);
}

}  // namespace

std::optional<std::uint64_t> predicted_cover_order(const FiniteGroup& group, std::size_t n,
                                                   const Limits& limits) {
  if (group.order() == 1) return 1;
  if (is_abelian(group)) return saturating_pow(group.exponent(), n);
  if (group.order() > limits.max_table_order) return std::nullopt;
  auto primes = prime_divisors(group.order());
  if (primes.size() == 2 && primes[0] * primes[1] == group.order()) {
    const std::uint64_t p = primes[0], q = primes[1];
    const std::uint64_t pn = saturating_pow(p, n);
    return saturating_mul(saturating_pow(q, (n - 1) * (pn - 1)), pn);
  }
  if (is_simple(group)) return saturating_pow(group.order(), h_n(group, n, limits));
  return std::nullopt;
}

CoverResult build_cover(const FiniteGroup& group, std::size_t n, const Limits& limits) {
  const std::size_t r = rank(group);
  if (n == 0 || n < r) {
    throw Error(ErrorKind::PreconditionViolated, "cover needs n >= rank = " + std::to_string(r));
  }
  if (auto predicted = predicted_cover_order(group, n, limits); predicted && *predicted > limits.max_closure) {
    too_large(group, n,
              "has order " + (*predicted == kSaturated ? std::string("above 2^64") : std::to_string(*predicted)) +
                  ", above the closure cap " + std::to_string(limits.max_closure));
  }
  OrbitDecomposition orbits = orbit_decompose(group, n, OrbitStrategy::Automatic, limits);
  return cover_from_representatives(group, n, std::move(orbits.representatives), limits);
}

CoverResult cover_from_representatives(const FiniteGroup& group, std::size_t n,
                                       std::vector<Sequence> representatives, const Limits& limits) {
  const std::size_t h = representatives.size();
  if (h == 0) throw Error(ErrorKind::PreconditionViolated, "no representatives given");
  for (const Sequence& s : representatives) {
    if (s.size() != n) throw Error(ErrorKind::PreconditionViolated, "representative of wrong length");
    if (!is_generating(group, s)) {
      throw Error(ErrorKind::PreconditionViolated, "representative does not generate " + group.name());
    }
  }

  Limits closure_limits = limits;
  closure_limits.max_closure = std::min<std::uint64_t>(limits.max_closure, kMaxTupleEntries / h);

  std::vector<std::vector<std::uint32_t>> tuples(n, std::vector<std::uint32_t>(h));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < h; ++i) tuples[j][i] = representatives[i][j].id;
  }

  CoverResult out;
  out.base = group;
  out.n = n;
  try {
    out.cover = tuple_subgroup(std::vector<FiniteGroup>(h, group), tuples, closure_limits,
                               cover_name(group, n));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ClosureCapExceeded) throw;
    too_large(group, n, "exceeds " + std::to_string(closure_limits.max_closure) + " elements (" +
                            std::to_string(h) + " coordinates)");
  }
  for (const auto& t : tuples) out.cover_generators.push_back(*out.cover.find(t));

  const std::size_t order = out.cover.order();
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<Element> map(order);
    for (std::uint32_t a = 0; a < order; ++a) map[a] = Element{out.cover.coordinates(Element{a})[i]};
    out.projections.emplace_back(out.cover, group, out.cover_generators, representatives[i],
                                 std::move(map));
  }
  out.representatives = std::move(representatives);
  return out;
}

const Homomorphism& coordinate_projection(const CoverResult& cover, std::size_t i) {
  if (i == 0 || i > cover.h()) {
    throw Error(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(i) + " outside 1.." +
                                                std::to_string(cover.h()));
  }
  return cover.projections[i - 1];
}

TowerMap cover_tower_map(const FiniteGroup& group, std::size_t n, std::size_t m, const Limits& limits) {
  const std::size_t r = rank(group);
  if (!(n > m && m >= r && m >= 1)) {
    throw Error(ErrorKind::PreconditionViolated,
                "tower needs n > m >= rank; got n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                    ", rank = " + std::to_string(r));
  }
  if (auto predicted = predicted_cover_order(group, n, limits); predicted && *predicted > limits.max_closure) {
    too_large(group, n, "has order " +
                            (*predicted == kSaturated ? std::string("above 2^64") : std::to_string(*predicted)) +
                            ", above the closure cap " + std::to_string(limits.max_closure));
  }
  CoverResult lower = build_cover(group, m, limits);
  OrbitDecomposition orbits = orbit_decompose(group, n, OrbitStrategy::Automatic, limits);

  std::vector<Sequence> ordered;
  for (const Sequence& s : lower.representatives) {
    Sequence padded = s;
    padded.resize(n, kIdentity);
    ordered.push_back(std::move(padded));
  }
  detail::GraphChecker checker;
  for (const Sequence& rep : orbits.representatives) {
    bool covered = false;
    for (std::size_t i = 0; i < lower.h() && !covered; ++i) covered = checker.run(group, ordered[i], group, rep);
    if (!covered) ordered.push_back(rep);
  }
  if (ordered.size() != orbits.h_n) {
    throw Error(ErrorKind::PreconditionViolated, "padded representatives are not pairwise inequivalent");
  }
  CoverResult upper = cover_from_representatives(group, n, std::move(ordered), limits);

  const std::size_t hm = lower.h();
  std::vector<Element> map(upper.cover.order());
  std::vector<std::uint32_t> head(hm);
  for (std::uint32_t a = 0; a < map.size(); ++a) {
    auto coords = upper.cover.coordinates(Element{a});
    std::copy(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(hm), head.begin());
    auto image = lower.cover.find(head);
    if (!image) {
      throw Error(ErrorKind::PreconditionViolated, "projection leaves the lower cover");
    }
    map[a] = *image;
  }
  Sequence images;
  for (Element g : upper.cover_generators) images.push_back(map[g.id]);
  Homomorphism f(upper.cover, lower.cover, upper.cover_generators, std::move(images), std::move(map));
  if (!f.is_surjective() || f.image().order() != lower.cover.order()) {
    throw Error(ErrorKind::PreconditionViolated, "tower projection is not surjective");
  }
  return TowerMap{std::move(upper), std::move(lower), std::move(f)};
}

void write_cover_export(std::ostream& out, const CoverResult& cover, const std::string& base_spec,
                        bool include_elements) {
  auto write_tuple = [&](Element e) {
    auto coords = cover.cover.coordinates(e);
    for (std::size_t i = 0; i < coords.size(); ++i) out << (i ? "," : "") << coords[i];
    out << '\n';
  };
  out << "cover base=" << base_spec << " n=" << cover.n << " h=" << cover.h()
      << " order=" << cover.cover.order() << '\n';
  for (Element g : cover.cover_generators) write_tuple(g);
  if (include_elements) {
    out << "elements\n";
    for (std::uint32_t a = 0; a < cover.cover.order(); ++a) write_tuple(Element{a});
  }
}

}  // namespace homcover
