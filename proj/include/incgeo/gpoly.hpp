#pragma once

// Generalised polygons, verified through their bipartite incidence graph.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "incgeo/incidence.hpp"
#include "incgeo/polarsp.hpp"

namespace incgeo {

class GenPolygon {
 public:
  // Blocks are 1-based point lists; the points must be exactly 1..N.
  static GenPolygon by_blocks(const std::vector<std::vector<std::size_t>>& blocks);
  static GenPolygon by_incidence(std::size_t npoints, std::size_t nlines,
                                 const std::function<bool(std::size_t, std::size_t)>& incident);
  template <class P, class L, class Inc>
  static GenPolygon by_elements(const std::vector<P>& pts, const std::vector<L>& lns, Inc inc) {
    return by_incidence(pts.size(), lns.size(), [&](std::size_t i, std::size_t j) { return inc(pts[i], lns[j]); });
  }
  // Points and lines of a rank-2 Lie geometry, incidence by containment.
  static GenPolygon from_geometry(const GeometryPtr& g);

  std::size_t gonality() const { return n_; }
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  std::size_t num_points() const { return pt_lines_.size(); }
  std::size_t num_lines() const { return line_pts_.size(); }
  const std::vector<std::uint32_t>& points_on(std::size_t line) const { return line_pts_.at(line); }
  const std::vector<std::uint32_t>& lines_on(std::size_t point) const { return pt_lines_.at(point); }
  bool incident(std::size_t point, std::size_t line) const;
  // Distance in the incidence graph; types 1 (point) and 2 (line).
  std::size_t distance(const ElemRef& a, const ElemRef& b) const;
  std::size_t girth() const { return 2 * n_; }
  std::size_t diameter() const { return n_; }

  // Subspace representatives when built from a Lie geometry or a hexagon.
  const std::vector<Subspace>& point_elements() const { return pts_; }
  const std::vector<Subspace>& line_elements() const { return lns_; }
  void set_elements(std::vector<Subspace> pts, std::vector<Subspace> lns);
  void set_name(std::string n) { name_ = std::move(n); }

  // "<projective plane order 4>", "<generalised quadrangle of order [ 4, 4 ]>", ...
  std::string str() const;
  std::string name() const { return name_.empty() ? str() : name_; }

  // Vertices: points 0..P-1 then lines P..P+L-1.
  std::vector<std::vector<std::uint32_t>> incidence_graph() const;
  std::string incidence_graph_dot() const;
  FiniteIncidenceStructure structure() const;

 private:
  GenPolygon() = default;
  void verify();

  std::vector<std::vector<std::uint32_t>> line_pts_, pt_lines_;
  std::size_t n_ = 0, s_ = 0, t_ = 0;
  std::vector<Subspace> pts_, lns_;
  std::string name_;
};

struct GraphStats {
  std::size_t girth = 0;     // 0 when acyclic
  std::size_t diameter = 0;  // SIZE_MAX when disconnected
  std::vector<std::uint32_t> short_cycle;
  std::pair<std::uint32_t, std::uint32_t> far_pair{0, 0};
};
GraphStats graph_stats(const std::vector<std::vector<std::uint32_t>>& adj);

// Points of Q(6,q): -x1x5-x2x6-x3x7+x4^2 = 0 and the hexagon lines on it.
PolarPtr split_cayley_quadric(const FieldPtr& f);
GenPolygon split_cayley_hexagon(std::uint64_t q);
bool is_hexagon_line(const Subspace& line);

}  // namespace incgeo
