#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homcover/group.hpp"
#include "homcover/subgroup.hpp"

namespace homcover {

// A homomorphism determined by the images of a generating sequence of its
// domain. The graph {(a, f(a))} is stored as the image of every domain
// element; its existence with exactly |domain| pairs is what certifies the
// map as well defined.
class Homomorphism {
 public:
  Homomorphism(FiniteGroup domain, FiniteGroup codomain, Sequence domain_generators, Sequence images,
               std::vector<Element> map);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  std::span<const Element> domain_generators() const noexcept { return domain_generators_; }
  std::span<const Element> images() const noexcept { return images_; }
  std::span<const Element> map() const noexcept { return map_; }

  Element apply(Element a) const { return map_[a.id]; }

  bool is_surjective() const;
  bool is_injective() const;
  Subgroup kernel() const;
  Subgroup image() const;

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  Sequence domain_generators_;
  Sequence images_;
  std::vector<Element> map_;
};

// The homomorphism sending gens[i] to images[i], if one exists. `gens` must
// generate the domain (PreconditionViolated otherwise).
std::optional<Homomorphism> extend_hom(const FiniteGroup& domain, std::span<const Element> gens,
                                       const FiniteGroup& codomain, std::span<const Element> images);

Homomorphism identity_hom(const FiniteGroup& group);

// second after first.
Homomorphism compose(const Homomorphism& second, const Homomorphism& first);

// Backtracking over order-compatible images of an irredundant generating
// sequence of `g`, candidates in ascending id order. Returns the first
// isomorphism found.
std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

struct Prescription {
  Sequence sources;  // generates the domain
  Sequence targets;
};

// A surjective homomorphism g -> h. With a prescription only the prescribed
// map is tried.
std::optional<Homomorphism> find_surjection(const FiniteGroup& g, const FiniteGroup& h,
                                            const std::optional<Prescription>& prescribed = {});

// Lifts a generating sequence of the codomain of a surjection to a
// generating sequence of its domain, entry by entry through the fibers.
// Throws PreconditionViolated when f is not surjective, s does not generate,
// or s is shorter than the rank of the domain.
Sequence lift_gaschutz(const Homomorphism& f, std::span<const Element> s);

struct QuotientResult {
  FiniteGroup group;
  Homomorphism projection;
};

// G/N on cosets, each coset numbered by the order in which its smallest
// element appears (so the identity coset is 0). Throws NotNormal.
QuotientResult quotient_group(const FiniteGroup& group, const Subgroup& normal,
                              const Limits& limits = {});

}  // namespace homcover
