#pragma once

// Sparse multivariate polynomials over GF(q) in the variables x_1..x_m.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "incgeo/gfq.hpp"

namespace incgeo {

using Exponents = std::vector<std::uint32_t>;

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(FieldPtr f, std::size_t nvars) : f_(std::move(f)), n_(nvars) {}
  // Parses text such as "x_1^2+2*x_2*x_3-Z(9)^3*x_4".
  static MultiPoly parse(const FieldPtr& f, std::size_t nvars, const std::string& text);

  const FieldPtr& field() const { return f_; }
  std::size_t nvars() const { return n_; }
  const std::map<Exponents, Elt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * monomial, merging like terms.
  void add_term(const Exponents& e, Elt c);
  // Adds c * x_i * x_j (0-based indices).
  void add_quadratic(std::size_t i, std::size_t j, Elt c);

  Elt eval(std::span<const Elt> x) const;
  bool is_homogeneous() const;
  std::uint32_t degree() const;

  // Terms ordered by the sorted list of variable indices of each monomial.
  std::string str() const;

  bool operator==(const MultiPoly& o) const { return f_ == o.f_ && n_ == o.n_ && terms_ == o.terms_; }

 private:
  FieldPtr f_;
  std::size_t n_ = 0;
  std::map<Exponents, Elt> terms_;
};

// Coefficient prefix in display style: "" for 1, "-" for -1, otherwise "c*".
std::string coefficient_prefix(const Field& F, Elt c);

}  // namespace incgeo
