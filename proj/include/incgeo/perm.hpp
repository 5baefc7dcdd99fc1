#pragma once

// Permutation groups and stabiliser chains (Schreier-Sims).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "incgeo/bigint.hpp"
#include "incgeo/collin.hpp"

namespace incgeo {

// p[i] is the image of point i; products apply the left factor first.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
bool perm_is_identity(const Perm& a);
// Cycle notation on 1-based points, "()" for the identity.
std::string perm_cycles(const Perm& a);

// A permutation together with the collineation it represents, when known.
struct GroupElem {
  Perm perm;
  std::optional<Collineation> coll;

  GroupElem operator*(const GroupElem& o) const;
  GroupElem inverse() const;
};

class StabChain {
 public:
  StabChain(std::size_t degree, std::vector<std::uint32_t> base_prefix = {});

  std::size_t degree() const { return deg_; }
  std::size_t levels() const { return lv_.size(); }
  std::uint32_t base_point(std::size_t i) const { return lv_[i].base; }
  std::vector<std::uint32_t> base() const;
  const std::vector<std::uint32_t>& orbit(std::size_t i) const { return lv_[i].orbit; }
  bool in_orbit(std::size_t i, std::uint32_t pt) const { return lv_[i].sv[pt] != kOut; }
  BigInt order() const;

  // Adds generators and closes the chain deterministically.
  void build_deterministic(const std::vector<GroupElem>& gens);
  // Random Schreier-Sims that stops once the chain order equals `order`;
  // stalls are finished deterministically, and a different final order throws.
  void build_with_order(const std::vector<GroupElem>& gens, const BigInt& target, std::uint64_t seed);
  // Sifts random elements drawn from `next` until the order reaches `order`.
  template <class Source>
  void build_from_source(Source&& next, const BigInt& target, const std::vector<GroupElem>& fallback_gens);

  bool contains(const Perm& p) const;
  // u with base_point(i)^u = pt, for pt in orbit(i).
  GroupElem transversal(std::size_t i, std::uint32_t pt) const;
  // Strong generators of the i-th stabiliser.
  std::vector<GroupElem> strong_generators(std::size_t i = 0) const;
  GroupElem random_element(std::mt19937_64& rng) const;
  // Returns the sifted residue and the level where sifting stopped.
  std::pair<GroupElem, std::size_t> sift(GroupElem g, std::size_t from = 0) const;
  // Inserts g if it is not already a member; returns true when the chain grew.
  bool add_element(const GroupElem& g);
  GroupElem identity_elem() const;

 private:
  static constexpr std::int32_t kOut = -1, kBase = -2;
  struct Level {
    std::uint32_t base;
    std::vector<std::size_t> gens;  // indices into pool_
    std::vector<std::int32_t> sv;   // local generator index reaching the point
    std::vector<std::uint32_t> orbit;
  };
  void new_level(std::uint32_t b);
  void add_strong(const GroupElem& g, std::size_t upto);
  void extend_orbit(std::size_t i);
  void schreier_close();

  std::size_t deg_;
  std::vector<Level> lv_;
  std::vector<GroupElem> pool_, pool_inv_;
};

// Product-replacement random elements.
class RandomSource {
 public:
  RandomSource(std::vector<GroupElem> gens, std::size_t degree, std::uint64_t seed);
  GroupElem next();

 private:
  std::vector<GroupElem> s_;
  GroupElem acc_;
  std::mt19937_64 rng_;
};

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> gens);
  std::size_t degree() const { return deg_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Perm& p) const { return chain().contains(p); }

 private:
  std::size_t deg_;
  std::vector<Perm> gens_;
  mutable std::optional<StabChain> chain_;
};

template <class Source>
void StabChain::build_from_source(Source&& next, const BigInt& target, const std::vector<GroupElem>& fallback_gens) {
  std::size_t idle = 0;
  while (order() < target) {
    if (add_element(next())) {
      idle = 0;
    } else if (++idle > 64) {
      for (const auto& g : fallback_gens) add_element(g);
      schreier_close();
      break;
    }
  }
  if (order() != target)
    throw Error("internal: stabiliser chain order " + to_string(order()) + " differs from " + to_string(target));
}

}  // namespace incgeo
