#pragma once

// Geometry morphisms between Lie geometries.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "incgeo/collin.hpp"
#include "incgeo/polarsp.hpp"

namespace incgeo {

class GeometryMorphism {
 public:
  using Map = std::function<Subspace(const Subspace&)>;
  using Intertwiner = std::function<Collineation(const Collineation&)>;

  GeometryMorphism(std::string kind, GeometryPtr source, GeometryPtr target, Map fwd, Map inv,
                   std::vector<std::size_t> types = {}, Intertwiner inter = {});

  const std::string& kind() const { return kind_; }
  const GeometryPtr& source() const { return src_; }
  const GeometryPtr& target() const { return tgt_; }
  // Element types of the source on which the map is defined (empty: all).
  const std::vector<std::size_t>& types() const { return types_; }

  Subspace apply(const Subspace& e) const;
  // Throws when e is not in the image.
  Subspace preimage(const Subspace& e) const;
  bool has_intertwiner() const { return static_cast<bool>(inter_); }
  Collineation intertwine(const Collineation& g) const;
  std::string str() const;

 private:
  std::string kind_;
  GeometryPtr src_, tgt_;
  Map fwd_, inv_;
  std::vector<std::size_t> types_;
  Intertwiner inter_;
};

// M -> M D with D = C1^-1 C2 (split bases of both spaces).
GeometryMorphism isomorphism_polar_spaces(const PolarPtr& a, const PolarPtr& b);
GeometryMorphism embedding_by_subspace(const GeometryPtr& small, const GeometryPtr& big, const Subspace& target);
GeometryMorphism embedding_by_subfield(const GeometryPtr& small, const GeometryPtr& big);
// small over GF(q^t) on V(r), big over GF(q) on V(rt); alpha in GF(q^t) scales the trace form.
GeometryMorphism embedding_by_field_reduction(const GeometryPtr& small, const GeometryPtr& big, Elt alpha = 1);

// The Klein quadric x1*x6+x2*x5+x3*x4 over GF(q).
PolarPtr klein_quadric(const FieldPtr& f);
// Lines of PG(3,q) -> points of the Klein quadric.
GeometryMorphism klein_correspondence(const FieldPtr& f);
GeometryMorphism klein_correspondence(const std::shared_ptr<const ProjSpace>& pg, const PolarPtr& target);
Vec plucker(const Subspace& line);
// Points of Q(4,q) <-> lines of W(3,q) and lines <-> points.
GeometryMorphism natural_duality(const PolarPtr& q4, const PolarPtr& w3);

// Points of PG(n,q) -> degree-2 monomials (i <= j, lex order).
GeometryMorphism veronese_map(const std::shared_ptr<const ProjSpace>& pg);
// k-subspaces (projective dimension k) -> (k+1)-minors in lex column-set order.
GeometryMorphism grassmann_map(const std::shared_ptr<const ProjSpace>& pg, std::size_t k);

struct SegreMap {
  std::shared_ptr<const ProjSpace> a, b, target;
  Subspace apply(const Subspace& x, const Subspace& y) const;
  std::pair<Subspace, Subspace> preimage(const Subspace& z) const;
};
SegreMap segre_map(const std::shared_ptr<const ProjSpace>& a, const std::shared_ptr<const ProjSpace>& b);

Mat embed_matrix(const Mat& m, const FieldPtr& big);

}  // namespace incgeo
