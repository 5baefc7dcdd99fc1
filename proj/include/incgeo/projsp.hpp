#pragma once

// Projective spaces, the Lie-geometry element layer and subspace enumerators.

#include <memory>
#include <string>
#include <vector>

#include "incgeo/bigint.hpp"
#include "incgeo/incidence.hpp"
#include "incgeo/linalg.hpp"

namespace incgeo {

// Bijection {1..size} <-> an element family.
class Enumerator {
 public:
  virtual ~Enumerator() = default;
  virtual BigInt size() const = 0;
  virtual Subspace unrank(const BigInt& index) const = 0;
  virtual BigInt rank(const Subspace& s) const = 0;
};

// k-dimensional subspaces of V(n,q): pivot patterns in colex order, then free
// entries as base-q digits, most significant first, grouped by pivot block.
class GrassmannEnumerator : public Enumerator {
 public:
  GrassmannEnumerator(FieldPtr f, std::size_t n, std::size_t k);
  BigInt size() const override { return gauss_[n_][k_]; }
  Subspace unrank(const BigInt& index) const override;
  BigInt rank(const Subspace& s) const override;
  // 0-based variants.
  Subspace unrank0(BigInt r) const;
  BigInt rank0(const Subspace& s) const;

 private:
  BigInt block(std::size_t cn, std::size_t ck, std::size_t m) const;
  FieldPtr f_;
  std::size_t n_, k_;
  std::vector<std::vector<BigInt>> gauss_;
  std::vector<BigInt> qpow_;
};

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

class LieGeometry : public std::enable_shared_from_this<LieGeometry> {
 public:
  LieGeometry(FieldPtr f, std::size_t n) : f_(std::move(f)), n_(n) {}
  virtual ~LieGeometry() = default;

  const FieldPtr& field() const { return f_; }
  std::size_t vector_dim() const { return n_; }
  std::size_t proj_dim() const { return n_ - 1; }

  virtual std::size_t rank() const = 0;
  virtual std::string name() const = 0;
  // Membership, including the type range 1..rank.
  virtual bool is_element(const Subspace& s) const = 0;
  virtual BigInt count(std::size_t type) const = 0;
  virtual std::shared_ptr<const Enumerator> enumerator(std::size_t type) const = 0;
  virtual bool is_polar() const { return false; }

  // Type-j elements incident with every member of the flag.
  std::vector<Subspace> shadow(const std::vector<Subspace>& flag, std::size_t type) const;
  // All elements of a type, in enumerator order.
  std::vector<Subspace> elements(std::size_t type) const;
  // Index-based copy (for small geometries).
  FiniteIncidenceStructure materialize() const;
  FiniteIncidenceStructure residue(const std::vector<Subspace>& flag) const;

 protected:
  // Upper bound refinement used by shadows (polar spaces intersect with A^perp).
  virtual Subspace refine_upper(const Subspace& lower, const Subspace& upper) const {
    (void)lower;
    return upper;
  }
  void check_type(std::size_t type) const;

 private:
  FieldPtr f_;
  std::size_t n_;
};

using GeometryPtr = std::shared_ptr<const LieGeometry>;

// A subspace tagged with the geometry it belongs to.
struct Element {
  GeometryPtr geom;
  Subspace sub;
  std::size_t type() const { return sub.dim(); }
  bool operator==(const Element& o) const { return geom == o.geom && sub == o.sub; }
};

bool is_incident(const Element& a, const Element& b);
Element make_element(const GeometryPtr& g, const Mat& m);
// Re-tags a subspace with another geometry after a membership check.
Element element_to_element(const GeometryPtr& target, const Element& e);

struct Flag {
  GeometryPtr geom;
  std::vector<Element> elements;
};
Flag make_flag(const GeometryPtr& g, std::vector<Element> elems);
std::vector<Element> shadow(const Flag& f, std::size_t type);

class ProjSpace : public LieGeometry {
 public:
  static std::shared_ptr<const ProjSpace> create(std::size_t d, std::uint64_t q);
  static std::shared_ptr<const ProjSpace> create(std::size_t d, const FieldPtr& f);
  ProjSpace(FieldPtr f, std::size_t n) : LieGeometry(std::move(f), n) {}

  std::size_t rank() const override { return proj_dim(); }
  std::string name() const override;
  bool is_element(const Subspace& s) const override;
  BigInt count(std::size_t type) const override;
  std::shared_ptr<const Enumerator> enumerator(std::size_t type) const override;

  Subspace hyperplane_by_dual_coordinates(const Vec& coeffs) const;
};

}  // namespace incgeo
