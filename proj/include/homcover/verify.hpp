#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcover/group.hpp"

namespace homcover {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus status);

// Result of one check. Failed checks always carry a witness describing the
// offending sequences, elements or values.
struct CheckReport {
  std::string check;
  std::string group;
  std::size_t n = 0;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::pair<std::string, std::string>> data;  // in insertion order
  std::string witness;

  CheckReport& add(std::string key, std::string value);
  CheckReport& add(std::string key, std::uint64_t value);
  CheckReport& add(std::string key, bool value);
  // Marks the report failed (unless it already is) and records the witness.
  CheckReport& fail(std::string witness_text);
  const std::string* find(std::string_view key) const;
};

// chi(z) = omega^<e, z> for z in (Z_p)^n, with omega the fixed element of
// order p in the units mod q.
struct Character {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t omega = 0;
  std::vector<std::uint32_t> exponents;  // e, entries in [0, p)

  bool is_trivial() const;
  // chi evaluated at the basis vector i, as a residue mod q.
  std::uint64_t on_basis(std::size_t i) const;
  std::uint64_t value(const std::vector<std::uint32_t>& z) const;
};

// All p^n characters, the trivial one first, in lexicographic exponent order.
std::vector<Character> all_characters(std::uint64_t p, std::uint64_t q, std::size_t n);

// Orbit sizes are all equal and h * |Aut(G)| = |Γ_n(G)|, with |Aut(G)|
// computed independently at the rank.
CheckReport check_free_action(const FiniteGroup& group, std::size_t n, const Limits& limits = {});

// Abelian G: H(n, G) is isomorphic to C_k^n with k the exponent of G.
CheckReport check_abelian_formula(const FiniteGroup& group, std::size_t n, const Limits& limits = {});

// Nilpotent G: H(n, G) is isomorphic to the product of H(n, P) over its
// Sylow subgroups P.
CheckReport check_nilpotent_sylow(const FiniteGroup& group, std::size_t n, const Limits& limits = {});

// Nonabelian simple S: k pairwise inequivalent generating n-tuples generate
// all of S^k, while an equivalent pair generates a proper subgroup of S^2.
CheckReport check_hall_independence(const FiniteGroup& group, std::size_t n, std::size_t k,
                                    const Limits& limits = {});

// Nonabelian simple S: reports h_n(S) and |H(n, S)| = |S|^h without building
// the cover unless it fits under the closure cap.
CheckReport check_simple_cover_order(const FiniteGroup& group, std::size_t n,
                                     const Limits& limits = {});

// Nonabelian G of order pq: order of H(n, G), its Sylow q-subgroup V, the
// quotient by V, the center, and the character eigenspaces of V under a
// Sylow p-subgroup.
CheckReport check_pq_structure(const FiniteGroup& group, std::size_t n, const Limits& limits = {});

// Homogeneous G: every sampled pair (t, s) of generating tuples of G and of a
// quotient extends to a surjection t -> s. Also checks that H(n, K) is a
// quotient of H(n, G) for every proper quotient K. For non-homogeneous G the
// first failing pair is reported as the witness.
CheckReport check_universal_lifting(const FiniteGroup& group, std::size_t n, std::size_t samples,
                                    std::uint64_t seed, const Limits& limits = {});

// Surjection H(n, G) -> H(m, G), plus a search for a splitting map. Skipped
// when either cover is above the caps.
CheckReport check_tower(const FiniteGroup& group, std::size_t n, std::size_t m,
                        const Limits& limits = {});

// H(n, G) is homogeneous of rank n, keeps the exponent and the abelian,
// nilpotent and solvable flags of G, has the same prime divisors, and is its
// own cover.
CheckReport check_cover_invariants(const FiniteGroup& group, std::size_t n,
                                   const Limits& limits = {});

// Lifts random generating tuples of quotients G/N back to G through the
// quotient map. `specs` is the pool of group specs to draw from.
CheckReport check_gaschutz(const std::vector<std::string>& specs, std::size_t trials,
                           std::uint64_t seed, const Limits& limits = {});

struct SuiteOptions {
  std::size_t n = 2;
  std::size_t m = 0;        // tower lower level; defaults to n - 1
  std::size_t k = 2;        // copies for the Hall check
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

// Suite names: free, abelian, nilpotent, hall, simple, pq, lifting, tower,
// invariants, all. "all" runs every check that applies to the group, turns
// cap errors into Skipped reports, and may run checks concurrently (bounded
// by options.threads); reports are returned in a fixed order regardless.
std::vector<CheckReport> run_suite(std::string_view suite, const FiniteGroup& group,
                                   const std::string& spec_text, const SuiteOptions& options,
                                   const Limits& limits = {});

std::vector<std::string_view> suite_names();

}  // namespace homcover
