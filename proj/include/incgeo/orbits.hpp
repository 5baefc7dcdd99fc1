#pragma once

// Orbits of collineation groups on subspaces, permutation images, stabilisers.

#include <string>
#include <unordered_map>
#include <vector>

#include "incgeo/collin.hpp"
#include "incgeo/perm.hpp"

namespace incgeo {

struct Orbit {
  std::vector<Subspace> elements;  // BFS order
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::int32_t> via;   // generator index reaching the element, -1 for the seed
  std::vector<std::uint32_t> parent;

  std::size_t size() const { return elements.size(); }
  // Position of s, or -1.
  std::int64_t find(const Subspace& s) const;
  // Generator indices w with seed^(g_w1 ... g_wk) = elements[i].
  std::vector<std::size_t> word(std::uint32_t i) const;
};

// Breadth-first closure; generators tried by index.  With INCGEO_THREADS > 1
// the images of each BFS layer are computed concurrently and merged in
// sequential order, so the result is identical.
Orbit orbit(const std::vector<Collineation>& gens, const Subspace& seed);
// Partition of a closed domain into orbits (lists of domain indices).
std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Collineation>& gens,
                                               const std::vector<Subspace>& domain);

struct ActionDomain {
  std::vector<Subspace> elements;
  std::unordered_map<std::string, std::uint32_t> index;

  explicit ActionDomain(std::vector<Subspace> elems);
  std::size_t size() const { return elements.size(); }
  std::uint32_t index_of(const Subspace& s) const;
  bool contains(const Subspace& s) const { return index.count(s.key()) > 0; }
};

// Permutation of the domain induced by g; throws when the domain is not closed.
Perm action_perm(const ActionDomain& dom, const Collineation& g);

struct ActionHomomorphism {
  std::shared_ptr<const ActionDomain> domain;
  std::vector<Perm> generator_images;
  Perm image(const Collineation& g) const { return action_perm(*domain, g); }
};
ActionHomomorphism action_homomorphism(const CollGroup& g, std::vector<Subspace> domain);

struct NiceMonomorphism {
  GeometryPtr geometry;
  std::size_t type = 1;  // element family used as domain
  std::shared_ptr<const ActionDomain> domain;
  std::vector<GroupElem> generators;
  std::shared_ptr<StabChain> chain;
  std::size_t degree() const { return domain->size(); }
};

// The family of smallest size (points first on ties) of the group's geometry,
// or the points of the ambient projective space for free-standing groups.
std::shared_ptr<const NiceMonomorphism> nice_monomorphism(const CollGroup& g);
BigInt group_order(const CollGroup& g);
bool group_contains(const CollGroup& g, const Collineation& x);

CollGroupPtr stabiliser(const CollGroupPtr& g, const Subspace& e);
CollGroupPtr setwise_stabiliser(const CollGroupPtr& g, const std::vector<Subspace>& set);
// Subgroup generated by the given elements, sharing the parent's geometry.
CollGroupPtr subgroup(const CollGroupPtr& parent, std::vector<Collineation> gens);

// Deterministic seed used by the randomized chain builders.
inline constexpr std::uint64_t kChainSeed = 0x5eed5eedULL;

}  // namespace incgeo
