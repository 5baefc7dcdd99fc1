#pragma once

// Coset geometries of permutation groups.

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "incgeo/incidence.hpp"
#include "incgeo/perm.hpp"

namespace incgeo {

// Parses "(1,2)(3,4,5)" (1-based) into a permutation of the given degree.
Perm parse_cycles(const std::string& s, std::size_t degree);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

class CosetGeometry {
 public:
  static constexpr std::size_t kDefaultBound = 1000000;

  CosetGeometry(std::size_t degree, std::vector<Perm> group_gens, std::vector<std::vector<Perm>> subgroups,
                std::size_t bound = kDefaultBound);

  std::size_t rank() const { return types_.size(); }
  std::size_t degree() const { return deg_; }
  const std::vector<Perm>& generators() const { return gens_; }
  BigInt group_order() const { return gchain_->order(); }
  BigInt subgroup_order(std::size_t type) const { return types_.at(type - 1).chain->order(); }
  std::size_t size(std::size_t type) const { return types_.at(type - 1).elems.size(); }

  // A coset gH is stored as the lex-least element of the right coset H g^-1.
  const Perm& key(std::size_t type, std::size_t index) const { return types_.at(type - 1).elems.at(index); }
  // A representative g of the left coset.
  Perm representative(std::size_t type, std::size_t index) const;
  // Index of the coset g G_type.
  std::size_t index_of(std::size_t type, const Perm& g) const;
  bool is_incident(const ElemRef& a, const ElemRef& b) const;
  // x . (g G_i) = (x g) G_i
  ElemRef act(const Perm& x, const ElemRef& e) const;

  const FiniteIncidenceStructure& structure() const { return structure_; }
  std::string str() const;

 private:
  struct TypeData {
    std::shared_ptr<StabChain> chain;  // base 0,1,...,n-1
    std::vector<Perm> elems;
    std::unordered_map<Perm, std::uint32_t, PermHash> index;
  };
  Perm canon(const TypeData& t, Perm k) const;
  std::uint32_t lookup(const TypeData& t, const Perm& k) const;

  std::size_t deg_;
  std::vector<Perm> gens_;
  std::shared_ptr<StabChain> gchain_;
  std::vector<TypeData> types_;
  FiniteIncidenceStructure structure_;
};

struct FlagTransitivity {
  bool transitive = false;
  BigInt chambers = 0;
  BigInt orbit = 0;  // orbit length of the base chamber
};
FlagTransitivity flag_transitivity(const CosetGeometry& cg);

struct DiagramEdge {
  std::size_t i = 0, j = 0;
  std::size_t gonality = 0, point_diameter = 0, line_diameter = 0;
};
struct Diagram {
  std::vector<std::size_t> orders;  // s_i
  std::vector<std::size_t> sizes;   // number of elements of each type
  std::vector<DiagramEdge> edges;   // digons omitted
  bool flag_transitive = false;
};
// Parameters read off the residues of the given chamber (type-ordered indices; default the base chamber).
Diagram diagram(const CosetGeometry& cg, std::vector<std::size_t> chamber = {});
std::string diagram_to_dot(const Diagram& d);

// Rank-2 parameters of a point/line structure: gonality and the two diameters.
DiagramEdge rank2_parameters(const FiniteIncidenceStructure& s);

}  // namespace incgeo
