#pragma once

// Classical polar spaces given by a form on the ambient projective space.

#include <memory>

#include "incgeo/forms.hpp"
#include "incgeo/projsp.hpp"

namespace incgeo {

struct SubspaceType {
  std::string name;  // family name, or "degenerate"
  std::size_t radical_dim = 0;
};

class PolarSpace : public LieGeometry {
 public:
  static std::shared_ptr<const PolarSpace> standard(Family fam, std::size_t d, std::uint64_t q);
  static std::shared_ptr<const PolarSpace> standard(Family fam, std::size_t d, const FieldPtr& f);
  static std::shared_ptr<const PolarSpace> from_form(const Form& f);
  explicit PolarSpace(const Form& f);

  const Form& form() const { return form_; }
  Family family() const { return split_.family; }
  // Split coordinates x correspond to user vectors x C.
  const Mat& base_change() const { return split_.C; }
  const Mat& base_change_inverse() const { return cinv_; }
  const Split& split_data() const { return split_; }
  const Form& split_model() const { return split_form_value_; }

  std::size_t rank() const override { return split_.pairs; }
  std::string name() const override;
  // Name followed by ": equation".
  std::string display() const;
  bool is_element(const Subspace& s) const override;
  bool is_polar() const override { return true; }
  BigInt count(std::size_t type) const override;
  std::shared_ptr<const Enumerator> enumerator(std::size_t type) const override;

  bool has_polarity() const;
  // The polarity e -> e^perp; throws when the ambient space has none.
  Subspace polarity(const Subspace& s) const;
  // Perp with respect to the polar bilinear form, defined for every class.
  Subspace perp(const Subspace& s) const;
  Subspace tangent_space(const Subspace& point) const;
  SubspaceType type_of_subspace(const Subspace& s) const;

 protected:
  Subspace refine_upper(const Subspace& lower, const Subspace& upper) const override;

 private:
  Form form_;
  Split split_;
  Mat cinv_;
  Form split_form_value_;
};

using PolarPtr = std::shared_ptr<const PolarSpace>;

// Closed-form number of totally isotropic k-subspaces in the polar space of the
// given family on V(n, q).
BigInt polar_count(Family fam, std::size_t n, std::uint64_t q, std::size_t k);
std::size_t polar_rank(Family fam, std::size_t n);

}  // namespace incgeo
