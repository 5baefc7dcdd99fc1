#pragma once

// Projective and affine algebraic varieties over GF(q), by point scan.

#include <functional>
#include <optional>
#include <random>

#include "incgeo/morph.hpp"
#include "incgeo/poly.hpp"
#include "incgeo/polarsp.hpp"

namespace incgeo {

class Variety {
 public:
  static constexpr std::uint64_t kScanBound = 50000000;

  // Polynomials must be homogeneous in x_1..x_{n+1}.
  static Variety projective(std::shared_ptr<const ProjSpace> pg, std::vector<MultiPoly> polys);
  // Polynomials in x_1..x_n over AG(n,q).
  static Variety affine(std::size_t n, FieldPtr f, std::vector<MultiPoly> polys);

  bool is_projective() const { return pg_ != nullptr; }
  const std::shared_ptr<const ProjSpace>& ambient() const { return pg_; }
  const FieldPtr& field() const { return f_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<MultiPoly>& polynomials() const { return polys_; }
  // "[ x_1^4+x_2^4 ]" style list.
  std::string polynomials_str() const;
  // "Projective Variety in ProjectiveSpace(5, 5)" and the like.
  std::string str() const;

  // Coordinates; projective points are taken up to scalars.
  bool contains(std::span<const Elt> x) const;
  bool contains(const Subspace& point) const;
  // Normalised points in enumerator order (affine: x_1 most significant).
  std::vector<Vec> points() const;
  BigInt size() const { return points().size(); }
  Vec random_point(std::uint64_t seed) const;

  // Hermitian and quadric varieties keep their form.
  const std::optional<Form>& form() const { return form_; }
  PolarPtr to_polar_space() const;

  // Set by the named constructors below.
  void set_label(std::string l) { label_ = std::move(l); }
  // Extra membership condition (used where no polynomial list is given).
  void set_membership(std::function<bool(std::span<const Elt>)> m) { extra_ = std::move(m); }
  void set_form(Form f) { form_ = std::move(f); }

 private:
  Variety() = default;
  BigInt ambient_points() const;
  Vec ambient_point(const BigInt& index0) const;

  std::shared_ptr<const ProjSpace> pg_;
  FieldPtr f_;
  std::size_t nvars_ = 0;
  std::vector<MultiPoly> polys_;
  std::string label_ = "Projective";
  std::function<bool(std::span<const Elt>)> extra_;
  std::optional<Form> form_;
};

// sum x_i^(q+1) on PG(n, q^2).
Variety hermitian_variety(std::size_t n, std::uint64_t q2);
// Standard quadric of the family; family must suit the parity of n.
Variety quadric_variety(Family fam, std::size_t n, std::uint64_t q);
// Variety of a hermitian or quadratic form.
Variety variety_of_form(const Form& f);

struct MappedVariety {
  Variety variety;
  GeometryMorphism map;
};
// x_ij^2 - x_ii x_jj (i<j) and x_ii x_jk - x_ij x_ik (i<j<k), x_ij ordered lexicographically.
MappedVariety veronese_variety(const std::shared_ptr<const ProjSpace>& pg);
// Grassmann variety of projective k-spaces; membership by decomposability,
// Pluecker quadrics listed for k = 1.
MappedVariety grassmann_variety(const std::shared_ptr<const ProjSpace>& pg, std::size_t k);

struct SegreVariety {
  Variety variety;
  SegreMap map;
};
// 2x2 minors of the (a+1) x (b+1) coordinate matrix.
SegreVariety segre_variety(const std::shared_ptr<const ProjSpace>& a, const std::shared_ptr<const ProjSpace>& b);

}  // namespace incgeo
