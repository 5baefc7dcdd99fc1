#pragma once

// Finite index-based incidence structures: flags, shadows, residues and the
// geometry axioms.  Types are numbered 1..rank.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "incgeo/gfq.hpp"

namespace incgeo {

using Bits = boost::dynamic_bitset<std::uint64_t>;

struct ElemRef {
  std::size_t type = 0;  // 1-based
  std::size_t index = 0;
  bool operator==(const ElemRef& o) const { return type == o.type && index == o.index; }
  bool operator<(const ElemRef& o) const { return type != o.type ? type < o.type : index < o.index; }
};

class FiniteIncidenceStructure {
 public:
  using Predicate = std::function<bool(const ElemRef&, const ElemRef&)>;

  FiniteIncidenceStructure() = default;
  // incident(a,b) is queried once per unordered pair of elements of distinct types.
  FiniteIncidenceStructure(std::vector<std::size_t> sizes, const Predicate& incident);
  // Incidence given by bitsets: adj[s][t][i] is the set of type-(t+1) elements
  // incident with element i of type s+1 (s != t).
  FiniteIncidenceStructure(std::vector<std::size_t> sizes, std::vector<std::vector<std::vector<Bits>>> adj);

  std::size_t rank() const { return sizes_.size(); }
  std::size_t size(std::size_t type) const { return sizes_.at(type - 1); }
  std::size_t total_size() const;
  // Original type labels (residues keep the labels of their parent).
  const std::vector<int>& type_labels() const { return labels_; }
  void set_type_labels(std::vector<int> l) { labels_ = std::move(l); }

  bool incident(const ElemRef& a, const ElemRef& b) const;
  const Bits& neighbours(const ElemRef& a, std::size_t type) const;

  // Validates pairwise incidence and distinct types.
  std::vector<ElemRef> make_flag(std::vector<ElemRef> elems) const;
  Bits shadow(const std::vector<ElemRef>& flag, std::size_t type) const;
  FiniteIncidenceStructure residue(const std::vector<ElemRef>& flag) const;

  // Every maximal flag is a chamber.
  bool is_incidence_geometry() const;

  struct Firmness {
    bool firm = true, thin = true, thick = true;
    std::size_t min_ext = 0, max_ext = 0;
  };
  // Extension counts over every flag of corank 1.
  Firmness firmness() const;

  // Calls fn for every flag whose type set is exactly `types` (1-based, sorted).
  void for_each_flag(const std::vector<std::size_t>& types,
                     const std::function<void(const std::vector<ElemRef>&)>& fn) const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<int> labels_;
  std::vector<std::vector<std::vector<Bits>>> adj_;
};

// Rank-2 structure from a 0/1 point-line relation.
FiniteIncidenceStructure point_line_structure(std::size_t npoints, const std::vector<std::vector<std::size_t>>& lines);

}  // namespace incgeo
