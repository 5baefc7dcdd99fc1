#pragma once

// Sesquilinear and quadratic forms, classification and standard forms.

#include <optional>
#include <string>

#include "incgeo/linalg.hpp"
#include "incgeo/poly.hpp"

namespace incgeo {

enum class FormKind { BilinearSymmetric, Alternating, Hermitian, Quadratic };
enum class Family { Symplectic, Hyperbolic, Elliptic, Parabolic, Hermitian };

std::string to_string(FormKind k);
std::string to_string(Family f);
Family parse_family(const std::string& s);

struct FormClass {
  Family family = Family::Symplectic;
  std::size_t witt_index = 0;
  bool degenerate = false;
  std::size_t radical_dim = 0;
};

class Form {
 public:
  Form() = default;
  // Validates the shape; quadratic input is folded to upper-triangular.
  // A symmetric bilinear form in odd characteristic is stored as the
  // quadratic form Q(x) = f(x,x); in characteristic 2 it must be alternating.
  static Form create(FormKind kind, Mat gram);

  FormKind kind() const { return kind_; }
  const Mat& gram() const { return gram_; }
  const FieldPtr& field() const { return gram_.field(); }
  const Field& F() const { return gram_.F(); }
  std::size_t dim() const { return gram_.rows(); }
  // Frobenius exponent of the companion automorphism (k/2 for hermitian, else 0).
  std::uint32_t companion() const { return companion_; }
  // True when created from a symmetric bilinear matrix.
  bool from_bilinear() const { return from_bilinear_; }
  bool is_quadratic() const { return kind_ == FormKind::Quadratic; }

  // u G sigma(v)^T; for quadratic forms this is the polarization b(u,v).
  Elt eval(std::span<const Elt> u, std::span<const Elt> v) const;
  // Q(u) for quadratic forms, f(u,u) otherwise.
  Elt eval(std::span<const Elt> u) const;
  Elt polar(std::span<const Elt> u, std::span<const Elt> v) const { return eval(u, v); }
  // Gram matrix of the associated (polar) sesquilinear form.
  const Mat& polar_gram() const { return polar_; }

  bool is_singular_vector(std::span<const Elt> u) const;
  bool is_totally_isotropic(const Subspace& s) const;

  // f'(u,v) = f(uM, vM); M may be a k x n basis matrix (restriction).
  Form transform(const Mat& m) const;
  Form scaled(Elt s) const;
  // Entrywise Frobenius on the gram matrix.
  Form frobenius(std::uint32_t e) const;

  // Display style: quadratic and hermitian forms as polynomials in x_i,
  // bilinear forms as x1*y4+... with the "=0" suffix.
  std::string equation() const;
  // Polynomial Q(x) or h(x,x) (hermitian), used by varieties.
  MultiPoly polynomial() const;

  bool operator==(const Form& o) const {
    return kind_ == o.kind_ && gram_ == o.gram_ && companion_ == o.companion_;
  }

 private:
  FormKind kind_ = FormKind::Quadratic;
  Mat gram_, polar_;
  std::uint32_t companion_ = 0;
  bool from_bilinear_ = false;
};

Subspace radical(const Form& f);
bool is_degenerate(const Form& f);

// Split form: hyperbolic pairs on coordinates (0,1), (2,3), ... followed by an
// anisotropic tail (x^2 for parabolic, x^2+xy+nu*y^2 for elliptic, x x^sigma for odd
// hermitian dimension).  Symplectic pairs satisfy f(e_{2i}, e_{2i+1}) = 1.
struct Split {
  Mat C;          // split coordinates x correspond to user vectors x C
  Elt scalar = 1; // transform(user, C) = scalar * split form
  std::size_t pairs = 0;
  std::size_t aniso = 0;
  Family family = Family::Symplectic;
};

Split split(const Form& f);
std::size_t witt_index(const Form& f);
FormClass classify(const Form& f);

// Smallest nu with x^2+x+nu irreducible over GF(q).
Elt elliptic_nu(const Field& F);
Form split_form(Family fam, std::size_t n, const FieldPtr& f);
// The documented standard display forms.
Form standard_form(Family fam, std::size_t n, const FieldPtr& f);

struct Standardized {
  Mat C;          // transform(user, C) = scalar * standard
  Elt scalar = 1;
  Form standard;
};
Standardized standardize(const Form& f);

// Root of a x^2 + b x + c, if any.
std::optional<Elt> quadratic_root(const Field& F, Elt a, Elt b, Elt c);
// Some x with x^(sqrt(q)+1) = a, for a in the subfield GF(sqrt q).
Elt norm_preimage(const Field& F, Elt a);

}  // namespace incgeo
