#pragma once

// Semilinear collineations of PG(n-1, q) and the classical groups.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "incgeo/bigint.hpp"
#include "incgeo/polarsp.hpp"
#include "incgeo/projsp.hpp"

namespace incgeo {

// x -> (x A)^theta with theta = Frobenius^e; A normalized so that its first
// nonzero entry (row-major) is 1.
class Collineation {
 public:
  Collineation() = default;
  Collineation(Mat a, std::uint32_t frob = 0);
  static Collineation identity(const FieldPtr& f, std::size_t n);

  const Mat& matrix() const { return a_; }
  std::uint32_t frobenius() const { return e_; }
  FieldAut aut() const { return {a_.field(), e_}; }
  const FieldPtr& field() const { return a_.field(); }
  std::size_t dim() const { return a_.rows(); }
  bool is_identity() const;

  // Apply this, then h.
  Collineation operator*(const Collineation& h) const;
  Collineation inverse() const;

  Subspace act(const Subspace& s) const;
  // Image of a basis matrix, not canonicalized.
  Mat act_rows(const Mat& m) const;
  Vec act_vector(std::span<const Elt> v) const;

  std::string str() const;
  bool operator==(const Collineation& o) const { return e_ == o.e_ && a_ == o.a_; }
  bool operator!=(const Collineation& o) const { return !(*this == o); }
  bool operator<(const Collineation& o) const {
    return e_ != o.e_ ? e_ < o.e_ : a_ < o.a_;
  }

 private:
  Mat a_;
  std::uint32_t e_ = 0;
};

Element act(const Element& e, const Collineation& g);

enum class PolarFlavor { SpecialIsometry, Isometry, Similarity, Collineation };
std::string to_string(PolarFlavor f);
PolarFlavor parse_flavor(const std::string& s);

struct NiceMonomorphism;

class CollGroup {
 public:
  CollGroup(FieldPtr f, std::size_t n, std::vector<Collineation> gens, std::string name = {},
            std::optional<BigInt> order = {}, GeometryPtr geom = {});

  const FieldPtr& field() const { return f_; }
  std::size_t dim() const { return n_; }
  const std::vector<Collineation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  // Order known from a closed formula or an earlier computation.
  const std::optional<BigInt>& known_order() const { return order_; }
  void set_order(BigInt o) const { order_ = std::move(o); }
  // Geometry whose element families serve as action domains.
  const GeometryPtr& geometry() const { return geom_; }
  std::string str() const;

  // Write-once cache filled by the orbits module.
  mutable std::shared_ptr<const NiceMonomorphism> nice;

 private:
  FieldPtr f_;
  std::size_t n_;
  std::vector<Collineation> gens_;
  std::string name_;
  mutable std::optional<BigInt> order_;
  GeometryPtr geom_;
};

using CollGroupPtr = std::shared_ptr<const CollGroup>;

CollGroupPtr projectivity_group(const std::shared_ptr<const ProjSpace>& pg);
CollGroupPtr collineation_group(const std::shared_ptr<const ProjSpace>& pg);
CollGroupPtr special_group(const std::shared_ptr<const ProjSpace>& pg);
CollGroupPtr polar_group(const PolarPtr& ps, PolarFlavor flavor);

BigInt order_pgl(std::size_t n, std::uint64_t q);
BigInt order_psl(std::size_t n, std::uint64_t q);
BigInt order_pgammal(std::size_t n, std::uint64_t q);
BigInt polar_group_order(Family fam, std::size_t n, std::uint64_t q, PolarFlavor flavor);
std::string polar_group_name(Family fam, std::size_t n, const Field& F, PolarFlavor flavor);

// Does g satisfy the defining condition of the flavour with respect to the form?
bool preserves_form(const Form& f, const Collineation& g, PolarFlavor flavor);

}  // namespace incgeo
