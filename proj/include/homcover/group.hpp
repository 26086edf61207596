#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homcover/limits.hpp"

namespace homcover {

// Dense index into the owning group's element enumeration. Id 0 is always
// the identity.
struct Element {
  std::uint32_t id = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t i) : id(i) {}

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element kIdentity{};

using Sequence = std::vector<Element>;

struct TableOptions {
  std::string name;
  // Known generating set. When empty a greedy one is computed.
  std::vector<Element> generators;
  std::vector<std::string> labels;
  // Skip the associativity scan; for constructors that are correct by
  // construction and very large.
  bool trusted = false;
};

// An immutable finite group handle. Copies share the underlying data, so
// passing groups by value is cheap and safe across threads.
//
// Two backends:
//   * Cayley table: an order x order index matrix.
//   * Tuple subgroup: a subgroup of a direct product of factor groups, whose
//     elements are coordinate tuples sorted lexicographically (so the
//     identity tuple is element 0). Small tuple groups also get a table.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates the group axioms and throws NotAGroup with a witness when they
  // fail. `table[a * order + b]` is the product a.b.
  static FiniteGroup from_table(std::vector<std::uint32_t> table,
                                TableOptions options = {},
                                const Limits& limits = {});

  // `coords` holds the sorted element tuples (arity = factors.size()), and
  // must be closed under componentwise multiplication; callers go through
  // tuple_subgroup() in subgroup.hpp, which performs the closure.
  static FiniteGroup from_sorted_tuples(std::vector<FiniteGroup> factors,
                                        std::vector<std::uint32_t> coords,
                                        std::vector<Element> generators,
                                        std::string name);

  std::size_t order() const noexcept;
  Element multiply(Element a, Element b) const;
  Element invert(Element a) const;
  Element power(Element a, std::int64_t k) const;
  Element commutator(Element a, Element b) const;  // a^-1 b^-1 a b
  Element conjugate(Element a, Element by) const;  // by^-1 a by

  std::uint64_t element_order(Element a) const;
  std::uint64_t exponent() const noexcept;
  std::span<const std::uint64_t> element_orders() const noexcept;

  // A stored generating set (not necessarily minimal).
  std::span<const Element> generators() const noexcept;

  const std::string& name() const noexcept;
  std::string label(Element a) const;

  bool has_table() const noexcept;
  // Row-major Cayley table (empty when the group has none), for hot loops
  // that cannot afford a call per product.
  std::span<const std::uint32_t> table() const noexcept;
  bool is_tuple_group() const noexcept;
  std::size_t arity() const noexcept;
  std::span<const FiniteGroup> factors() const noexcept;
  std::span<const std::uint32_t> coordinates(Element a) const;
  std::optional<Element> find(std::span<const std::uint32_t> coords) const;

  // Same group with a new display name.
  FiniteGroup renamed(std::string name) const;

  bool same_object(const FiniteGroup& other) const noexcept {
    return impl_ == other.impl_;
  }

  struct Impl;

 private:
  explicit FiniteGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Greedy generating set: repeatedly add the highest-order element outside the
// current subgroup (smallest id on ties), then drop redundant entries.
std::vector<Element> greedy_generators(const FiniteGroup& group);

// Materializes a Cayley-table copy of any group (used to re-analyze covers).
FiniteGroup to_table_group(const FiniteGroup& group, const Limits& limits = {});

// Verifies identity, inverse and associativity laws. Associativity is checked
// exhaustively up to order 512 and on 10,000 seeded random triples above.
// Returns an empty string on success, otherwise a witness description.
std::string check_group_axioms(const FiniteGroup& group);

}  // namespace homcover

template <>
struct std::hash<homcover::Element> {
  std::size_t operator()(const homcover::Element& e) const noexcept {
    return std::hash<std::uint32_t>{}(e.id);
  }
};
